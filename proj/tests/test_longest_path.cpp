#include <random>

#include "doctest.h"
#include "enumfpt/errors.hpp"
#include "enumfpt/harness.hpp"
#include "enumfpt/longest_path.hpp"
#include "enumfpt/oracle.hpp"
#include "helpers.hpp"

using namespace enumfpt;
using namespace enumfpt::longest_path;
using testutil::as_set;
using testutil::sorted;

namespace {

Coloring colors(std::vector<int> c) {
  c.insert(c.begin(), 0);
  return c;
}

std::shared_ptr<const Graph> shared(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

unsigned mask_of(const std::vector<Vertex>& path, const Coloring& c) {
  unsigned m = 0;
  for (Vertex v : path) m |= 1u << (c[v] - 1);
  return m;
}

// Does a simple path with exactly the colors `mask` end in (v, u)?
bool colorful_path_ends_in(const Graph& g, const Coloring& c, unsigned mask, Vertex v, Vertex u) {
  const int len = std::popcount(mask);
  std::vector<Vertex> path{u};
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(path.size()) == len)
      return path[1] == v && mask_of(path, c) == mask && static_cast<int>(std::popcount(mask_of(path, c))) == len;
    for (Vertex w : g.neighbors(path.back())) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      if (rec()) return true;
      path.pop_back();
    }
    return false;
  };
  return rec();
}

}  // namespace

TEST_CASE("hash family: trivial and handmade cases") {
  auto single = build_hash_family(4, 4);
  CHECK(verify_perfect(single));
  auto constant = build_hash_family(6, 1);
  REQUIRE(constant.colorings.size() == 1);
  for (Vertex v = 1; v <= 6; ++v) CHECK(constant.colorings[0][v] == 1);

  PerfectHashFamily handmade{4, 2, {colors({1, 2, 1, 2}), colors({1, 1, 2, 2}), colors({1, 2, 2, 1})}};
  CHECK(verify_perfect(handmade));
  handmade.colorings.resize(1);  // {1,3} is monochromatic under the first alone
  CHECK_FALSE(verify_perfect(handmade));
  CHECK(build_hash_family(3, 0).colorings.empty());
  CHECK(build_hash_family(3, 4).colorings.empty());
}

TEST_CASE("hash family: exhaustive verification refuses huge families") {
  CHECK_THROWS_AS(verify_perfect(PerfectHashFamily{60, 8, {}}), TooLarge);
  CHECK_THROWS_AS(verify_perfect(build_hash_family(30, 5), 1000), TooLarge);
}

TEST_CASE("hash family: both constructions are perfect") {
  for (int n = 1; n <= 24; ++n)
    for (int k = 1; k <= std::min(n, 5); ++k) {
      const auto family = build_hash_family(n, k);
      CHECK_MESSAGE(verify_perfect(family), "n=", n, " k=", k);
      for (const auto& c : family.colorings)
        for (Vertex v = 1; v <= n; ++v) CHECK((c[v] >= 1 && c[v] <= k));
    }
  const auto big = build_hash_family(200, 4);
  CHECK(spot_check_perfect(big, 20000, 3));
}

TEST_CASE("path table on the path 1-2-3") {
  const auto g = testutil::graph(3, {{1, 2}, {2, 3}});
  const auto c = colors({1, 2, 3});
  PathTable table(g, 3, c);
  CHECK(table.predecessors(0b011, 2) == std::vector<Vertex>{1});
  CHECK(table.predecessors(0b011, 1) == std::vector<Vertex>{2});
  CHECK(table.predecessors(0b111, 3) == std::vector<Vertex>{2});
  CHECK(table.predecessors(0b111, 1) == std::vector<Vertex>{2});  // path 3 2 1
  CHECK(table.predecessors(0b111, 2).empty());
  PathTable mono(g, 2, colors({1, 1, 2}));
  CHECK(mono.predecessors(0b11, 2) == std::vector<Vertex>{3});
  CHECK(mono.predecessors(0b11, 1).empty());
}

TEST_CASE("path table agrees with brute force") {
  std::mt19937_64 rng(17);
  harness::SizeParams p = harness::default_params(ProblemKind::longest_path);
  p.max_n = 7;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto gen = harness::generate(ProblemKind::longest_path, p, seed);
    const auto& g = std::get<Graph>(gen.instance);
    const int k = std::min<int>(static_cast<int>(gen.k) + 1, 4);
    Coloring c(static_cast<std::size_t>(g.size()) + 1, 0);
    for (Vertex v = 1; v <= g.size(); ++v) c[v] = static_cast<int>(rng() % static_cast<unsigned>(k)) + 1;
    PathTable table(g, k, c);
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      if (std::popcount(mask) < 2) continue;
      for (Vertex u = 1; u <= g.size(); ++u)
        for (Vertex v = 1; v <= g.size(); ++v) {
          const auto& preds = table.predecessors(mask, u);
          const bool member = std::find(preds.begin(), preds.end(), v) != preds.end();
          CHECK(member == colorful_path_ends_in(g, c, mask, v, u));
        }
    }
  }
}

TEST_CASE("colorful paths for one coloring") {
  CHECK(drain(enumerate_colorful_paths(shared(testutil::graph(3, {{1, 2}, {2, 3}})), 3, colors({1, 2, 3}))) ==
        std::vector<Solution>{"1 2 3"});
  auto triangle = shared(testutil::graph(3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(sorted(drain(enumerate_colorful_paths(triangle, 3, colors({1, 2, 3})))) ==
        std::vector<Solution>{"1 2 3", "1 3 2", "2 1 3"});
  CHECK(drain(enumerate_colorful_paths(triangle, 2, colors({1, 1, 1}))).empty());
  CHECK(drain(enumerate_colorful_paths(triangle, 1, colors({1, 1, 1}))).size() == 3);
}

TEST_CASE("is_colorful") {
  const auto g = testutil::graph(3, {{1, 2}, {2, 3}});
  CHECK(is_colorful(g, 3, colors({1, 2, 3}), {1, 2, 3}));
  CHECK_FALSE(is_colorful(g, 3, colors({1, 2, 1}), {1, 2, 3}));
  CHECK_THROWS_AS(is_colorful(g, 2, colors({1, 2, 1}), {1, 3}), InvalidPath);
  CHECK_THROWS_AS(is_colorful(g, 3, colors({1, 2, 3}), {1, 2, 1}), InvalidPath);
  CHECK_THROWS_AS(is_colorful(g, 3, colors({1, 2, 3}), {1, 2}), InvalidPath);
}

TEST_CASE("enumerate examples") {
  CHECK(drain(enumerate(shared(testutil::graph(3, {{1, 2}, {2, 3}})), 3)) == std::vector<Solution>{"1 2 3"});
  auto c4 = shared(testutil::graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
  CHECK(sorted(drain(enumerate(c4, 3, RunOptions{true}))) ==
        sorted({canonical_path({1, 2, 3}), canonical_path({2, 3, 4}), canonical_path({3, 4, 1}),
                canonical_path({4, 1, 2})}));
  CHECK(sorted(drain(enumerate(c4, 1))) == std::vector<Solution>{"1", "2", "3", "4"});
  CHECK(drain(enumerate(c4, 5)).empty());
}

TEST_CASE("oracle equivalence, union cover and dedup across the family") {
  harness::SizeParams p = harness::default_params(ProblemKind::longest_path);
  p.max_n = 9;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto gen = harness::generate(ProblemKind::longest_path, p, seed);
    auto g = shared(std::get<Graph>(gen.instance));
    const int k = static_cast<int>(gen.k);
    const auto expected = oracle::brute_force(gen.instance, ProblemKind::longest_path, gen.k);
    const auto out = drain(enumerate(g, k, RunOptions{true}));
    CHECK_FALSE(testutil::has_duplicates(out));
    CHECK(as_set(out) == expected);
    if (k > g->size()) continue;
    const auto family = build_hash_family(g->size(), k);
    for (const auto& s : expected) {
      const auto path = decode_vertex_list(s);
      CHECK(std::any_of(family.colorings.begin(), family.colorings.end(),
                        [&](const Coloring& c) { return is_colorful(*g, k, c, path); }));
    }
  }
}
