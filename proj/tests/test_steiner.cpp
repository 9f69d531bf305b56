#include <numeric>

#include "doctest.h"
#include "enumfpt/errors.hpp"
#include "enumfpt/harness.hpp"
#include "enumfpt/oracle.hpp"
#include "enumfpt/steiner.hpp"
#include "helpers.hpp"

using namespace enumfpt;
using namespace enumfpt::steiner;
using testutil::as_set;
using testutil::sorted;

namespace {

std::shared_ptr<const Graph> wgraph(int n, const std::vector<Edge>& edges, std::vector<Vertex> terminals) {
  Graph g(n);
  g.set_weighted(true);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.w);
  g.set_terminals(std::move(terminals));
  return std::make_shared<const Graph>(std::move(g));
}

// a=1, u=2, v=3, b=4, w=5.
std::shared_ptr<const Graph> two_routes() {
  return wgraph(5, {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {2, 5, 1}, {5, 3, 1}}, {1, 4});
}

std::vector<EdgeList> paths(const DistOracle& oracle, Vertex u, Vertex v) {
  auto shared = std::make_shared<const DistOracle>(oracle);
  return drain(enumerate_min_paths(shared, u, v));
}

}  // namespace

TEST_CASE("preprocess") {
  SUBCASE("single terminal is trivial") {
    auto inst = preprocess(wgraph(3, {{1, 2, 1}, {2, 3, 1}}, {2}));
    CHECK(inst.trivial);
    CHECK(drain(enumerate(solve(inst))) == std::vector<Solution>{""});
  }
  SUBCASE("leaf terminals on non-terminals are kept as they are") {
    auto g = wgraph(3, {{1, 2, 1}, {2, 3, 1}}, {1, 3});
    auto inst = preprocess(g);
    CHECK_FALSE(inst.pendants_added);
    CHECK(inst.augmented == g);
    CHECK(inst.pendant(1) == 3);
    CHECK(inst.inner == std::vector<Vertex>{2});
  }
  SUBCASE("triangle of terminals gets three pendants") {
    auto inst = preprocess(wgraph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}, {1, 2, 3}));
    CHECK(inst.pendants_added);
    CHECK(inst.augmented->size() == 6);
    CHECK(inst.augmented->edges().size() == 6);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(inst.augmented->neighbors(inst.pendant(i)) == std::vector<Vertex>{static_cast<Vertex>(i) + 1});
    }
    CHECK(inst.inner == std::vector<Vertex>{1, 2, 3});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(preprocess(wgraph(4, {{1, 2, 1}, {3, 4, 1}}, {1, 4})), DisconnectedTerminals);
    Graph no_terminals(2);
    no_terminals.add_edge(1, 2);
    CHECK_THROWS_AS(preprocess(std::make_shared<const Graph>(no_terminals)), InvariantError);
  }
}

TEST_CASE("table on the path a-u-b") {
  auto inst = preprocess(wgraph(3, {{1, 2, 1}, {2, 3, 1}}, {1, 3}));
  DistOracle oracle(inst.augmented);
  SteinerTable table(inst, oracle);
  CHECK(table.value(0b01, 2, 1) == 1);
  CHECK(table.value(0b10, 2, 1) == 1);
  CHECK(table.value(0b11, 2, 0) == 2);
  CHECK(table.value(0b11, 2, 1) >= kInfinity);  // no second non-terminal
  CHECK(table.value(0b01, 2, 0) >= kInfinity);
  CHECK(table.value(0b10, 2, 0) >= kInfinity);
  REQUIRE(table.merges(0b11, 2).size() == 1);
  CHECK(table.merges(0b11, 2)[0].left == 0b01);
  CHECK(table.merges(0b11, 2)[0].right_bit == 1);
}

TEST_CASE("shortest path enumeration") {
  DistOracle diamond(wgraph(4, {{1, 2, 1}, {2, 4, 1}, {1, 3, 1}, {3, 4, 1}}, {1}));
  CHECK(paths(diamond, 2, 2) == std::vector<EdgeList>{EdgeList{}});
  const auto both = paths(diamond, 1, 4);
  CHECK(both.size() == 2);
  DistOracle detour(wgraph(3, {{1, 3, 1}, {1, 2, 1}, {2, 3, 2}}, {1}));
  REQUIRE(paths(detour, 1, 3).size() == 1);
  CHECK(canonical_edge_set(paths(detour, 1, 3)[0]) == "1 3");
  DistOracle split(wgraph(3, {{1, 2, 1}}, {1}));
  CHECK(paths(split, 1, 3).empty());
}

TEST_CASE("enumerate examples") {
  CHECK(drain(enumerate(wgraph(3, {{1, 2, 1}, {2, 3, 1}}, {1, 3}), RunOptions{true})) ==
        std::vector<Solution>{"1 2,2 3"});

  auto solver = solve(preprocess(two_routes()));
  CHECK(solver.optimum == 4);
  const auto trees = drain(enumerate(solver, RunOptions{true}));
  CHECK(sorted(trees) == std::vector<Solution>{"1 2,2 3,3 4", "1 2,2 5,3 4,3 5"});

  // Vertices 4..6 hang off the terminals' component but are never needed.
  auto extra = wgraph(6, {{1, 2, 1}, {2, 3, 1}, {3, 4, 5}, {4, 5, 1}, {5, 6, 1}}, {1, 3});
  CHECK(drain(enumerate(extra)) == std::vector<Solution>{"1 2,2 3"});
}

TEST_CASE("oracle equivalence, tree shape and optimum weight") {
  auto p = harness::default_params(ProblemKind::steiner);
  for (int regime = 0; regime < 3; ++regime) {
    p.max_weight = regime == 0 ? 1 : regime == 1 ? 3 : 6;
    p.density = 0.2 + 0.2 * regime;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto gen = harness::generate(ProblemKind::steiner, p, seed);
      auto g = std::make_shared<const Graph>(std::get<Graph>(gen.instance));
      auto solver = solve(preprocess(g));
      const auto out = drain(enumerate(solver, RunOptions{true}));
      CHECK_FALSE(testutil::has_duplicates(out));
      CHECK(as_set(out) == oracle::brute_force(gen.instance, ProblemKind::steiner, 0));
      for (const auto& s : out) {
        const auto edges = decode_edge_set(s);
        CHECK(is_steiner_tree(*g, *g->terminals(), edges));
        CHECK(edge_set_weight(*g, edges) == solver.optimum);
      }
    }
  }
}

TEST_CASE("table entries lie between the unrestricted and the degree-restricted tree optimum") {
  auto p = harness::default_params(ProblemKind::steiner);
  p.max_n = 6;
  p.max_terminals = 3;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto gen = harness::generate(ProblemKind::steiner, p, seed);
    auto inst = preprocess(std::make_shared<const Graph>(std::get<Graph>(gen.instance)));
    if (inst.trivial) continue;
    const Graph& a = *inst.augmented;
    const auto& edges = a.edges();
    REQUIRE(edges.size() <= 16);
    DistOracle oracle(inst.augmented);
    SteinerTable table(inst, oracle);

    const std::size_t t = inst.terminals.size();
    const std::size_t slots = (std::size_t{1} << t) * (static_cast<std::size_t>(a.size()) + 1);
    std::vector<Weight> any(slots, kInfinity), leaf(slots, kInfinity), branch(slots, kInfinity);
    auto slot = [&](std::size_t d, Vertex v) { return d * (static_cast<std::size_t>(a.size()) + 1) + v; };

    for (std::uint32_t subset = 1; subset < (1u << edges.size()); ++subset) {
      std::vector<std::size_t> parent(static_cast<std::size_t>(a.size()) + 1);
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      std::vector<int> degree(parent.size(), 0);
      Weight weight = 0;
      bool forest = true;
      std::size_t used = 0;
      for (std::size_t e = 0; e < edges.size() && forest; ++e) {
        if (!(subset >> e & 1u)) continue;
        const auto ru = find(edges[e].u), rv = find(edges[e].v);
        if (ru == rv) forest = false;
        parent[ru] = rv;
        ++degree[edges[e].u];
        ++degree[edges[e].v];
        weight += edges[e].w;
        ++used;
      }
      if (!forest) continue;
      std::size_t touched = 0;
      for (Vertex v = 1; v <= a.size(); ++v) touched += degree[v] > 0 ? 1 : 0;
      if (touched != used + 1) continue;  // not connected
      std::size_t d = 0;
      std::vector<bool> is_pendant(degree.size(), false);
      for (std::size_t i = 0; i < t; ++i) {
        is_pendant[inst.pendant(i)] = true;
        if (degree[inst.pendant(i)] > 0) d |= std::size_t{1} << i;
      }
      if (d == 0) continue;
      std::vector<Vertex> stray_leaves;
      for (Vertex v = 1; v <= a.size(); ++v)
        if (degree[v] == 1 && !is_pendant[v]) stray_leaves.push_back(v);
      for (Vertex v : inst.inner) {
        if (degree[v] == 0) continue;
        auto& best_any = any[slot(d, v)];
        best_any = std::min(best_any, weight);
        // The degree-restricted optimum only counts trees whose leaves lie in D + {v}.
        const bool clean = stray_leaves.empty() || (stray_leaves.size() == 1 && stray_leaves[0] == v);
        if (!clean) continue;
        auto& best = degree[v] == 1 ? leaf[slot(d, v)] : branch[slot(d, v)];
        best = std::min(best, weight);
      }
    }

    for (std::size_t d = 1; d < (std::size_t{1} << t); ++d)
      for (Vertex v : inst.inner) {
        const auto m = static_cast<SteinerTable::Mask>(d);
        CHECK(any[slot(d, v)] <= table.value(m, v, 1));
        CHECK(table.value(m, v, 1) <= leaf[slot(d, v)]);
        CHECK(any[slot(d, v)] <= table.value(m, v, 0));
        CHECK(table.value(m, v, 0) <= branch[slot(d, v)]);
      }
    const Weight root = table.value(table.full(), solve(inst).anchor, 0);
    CHECK(root == any[slot(table.full(), solve(inst).anchor)]);
  }
}

TEST_CASE("a leaf entry can be finite although no tree has v as a leaf") {
  // On the path 1-2-3-4 with K = {1, 4}, vertex 2 is interior to every tree
  // containing the terminals, yet T[K, 2, 1] combines the merge at 3 with
  // the walk back to 2.
  auto inst = preprocess(wgraph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}}, {1, 4}));
  DistOracle oracle(inst.augmented);
  SteinerTable table(inst, oracle);
  CHECK(table.value(0b11, 2, 1) == 4);
  CHECK(table.value(0b11, 3, 0) == 3);
  CHECK(drain(enumerate(solve(inst))) == std::vector<Solution>{"1 2,2 3,3 4"});
}
