#include "enumfpt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <numeric>
#include <string>

#include "enumfpt/errors.hpp"

namespace enumfpt::oracle {

namespace {

void guard(long double candidates, std::string_view what) {
  if (candidates > static_cast<long double>(kCandidateLimit))
    throw TooLarge(std::string(what) + ": search space exceeds " + std::to_string(kCandidateLimit) + " candidates");
}

long double subsets_up_to(int n, std::size_t k) {
  long double total = 0;
  long double term = 1;
  for (std::size_t i = 0; i <= k && i <= static_cast<std::size_t>(n); ++i) {
    total += term;
    term = term * static_cast<long double>(n - static_cast<int>(i)) / static_cast<long double>(i + 1);
  }
  return total;
}

// Calls visit(subset) for every subset of {1..n} with at most k elements.
void for_each_small_subset(int n, std::size_t k, const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> current;
  std::function<void(Vertex)> rec = [&](Vertex from) {
    visit(current);
    if (current.size() == k) return;
    for (Vertex v = from; v <= n; ++v) {
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
    }
  };
  rec(1);
}

// Kahn's algorithm on the tournament restricted to the kept vertices.
bool acyclic_after_removal(const Tournament& t, const std::vector<bool>& removed) {
  const int n = t.size();
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  int remaining = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (removed[v]) continue;
    ++remaining;
    for (Vertex u = 1; u <= n; ++u)
      if (u != v && !removed[u] && t.beats(u, v)) ++indegree[v];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v)
    if (!removed[v] && indegree[v] == 0) ready.push_back(v);
  int processed = 0;
  while (!ready.empty()) {
    const Vertex u = ready.back();
    ready.pop_back();
    ++processed;
    for (Vertex v = 1; v <= n; ++v)
      if (v != u && !removed[v] && t.beats(u, v) && --indegree[v] == 0) ready.push_back(v);
  }
  return processed == remaining;
}

std::set<Solution> feedback_sets(const Tournament& t, std::size_t k) {
  guard(subsets_up_to(t.size(), k), "fvst");
  std::set<Solution> out;
  for_each_small_subset(t.size(), k, [&](const std::vector<Vertex>& s) {
    std::vector<bool> removed(static_cast<std::size_t>(t.size()) + 1, false);
    for (Vertex v : s) removed[v] = true;
    if (acyclic_after_removal(t, removed)) out.insert(canonical_vertex_set(s));
  });
  return out;
}

std::set<Solution> center_strings(const StringSet& x, std::size_t k) {
  const std::size_t sigma = x.alphabet.size();
  guard(std::pow(static_cast<long double>(sigma), static_cast<long double>(x.length)), "closest-string");
  std::set<Solution> out;
  if (sigma == 0) {
    if (x.length == 0) out.insert("");
    return out;
  }
  std::vector<std::size_t> digits(x.length, 0);
  for (;;) {
    std::string s(x.length, ' ');
    for (std::size_t i = 0; i < x.length; ++i) s[i] = x.alphabet[digits[i]];
    const bool center = std::all_of(x.strings.begin(), x.strings.end(), [&](const std::string& w) {
      std::size_t d = 0;
      for (std::size_t i = 0; i < x.length; ++i) d += s[i] != w[i] ? 1 : 0;
      return d <= k;
    });
    if (center) out.insert(s);
    std::size_t pos = x.length;
    while (pos > 0 && digits[pos - 1] + 1 == sigma) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

std::set<Solution> integer_points(const IlpSystem& system) {
  system.validate();
  long double volume = 1;
  for (const auto& b : system.box) {
    if (b->lo > b->hi) return {};
    volume *= static_cast<long double>(b->hi - b->lo + 1);
  }
  guard(volume, "ilp");
  std::set<Solution> out;
  std::vector<std::int64_t> x(system.k);
  for (std::size_t i = 0; i < system.k; ++i) x[i] = system.box[i]->lo;
  for (;;) {
    const bool feasible = std::all_of(system.rows.begin(), system.rows.end(), [&](const IlpRow& row) {
      std::int64_t lhs = 0;
      for (std::size_t i = 0; i < system.k; ++i) lhs += row.coefficients[i] * x[i];
      return lhs <= row.bound;
    });
    if (feasible) out.insert(canonical_int_vector(x));
    std::size_t pos = system.k;
    while (pos > 0 && x[pos - 1] == system.box[pos - 1]->hi) {
      --pos;
      x[pos] = system.box[pos]->lo;
    }
    if (pos == 0) break;
    ++x[pos - 1];
  }
  return out;
}

std::set<Solution> simple_paths(const Graph& g, std::size_t k) {
  const int n = g.size();
  if (k == 0 || k > static_cast<std::size_t>(n)) return {};
  guard(std::pow(static_cast<long double>(n), static_cast<long double>(k)), "longest-path");
  std::set<Solution> out;
  std::vector<Vertex> seq(k, 1);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < k; ++i)
      for (std::size_t j = i + 1; ok && j < k; ++j) ok = seq[i] != seq[j];
    for (std::size_t i = 0; ok && i + 1 < k; ++i) ok = g.adjacent(seq[i], seq[i + 1]);
    if (ok) {
      std::vector<Vertex> reversed(seq.rbegin(), seq.rend());
      if (seq <= reversed) out.insert(canonical_path(seq));
    }
    std::size_t pos = k;
    while (pos > 0 && seq[pos - 1] == n) seq[--pos] = 1;
    if (pos == 0) break;
    ++seq[pos - 1];
  }
  return out;
}

std::set<Solution> vertex_covers(const Graph& g, std::size_t k) {
  guard(subsets_up_to(g.size(), k), "vertex-cover");
  std::set<Solution> out;
  for_each_small_subset(g.size(), k, [&](const std::vector<Vertex>& s) {
    std::vector<bool> in(static_cast<std::size_t>(g.size()) + 1, false);
    for (Vertex v : s) in[v] = true;
    const bool cover =
        std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return in[e.u] || in[e.v]; });
    if (cover) out.insert(canonical_vertex_set(s));
  });
  return out;
}

// Include/exclude search over the edge list, keeping only forests and
// pruning by weight above the best tree seen so far. Candidates counted are
// the forests visited.
std::set<Solution> steiner_trees(const Graph& g) {
  if (!g.terminals() || g.terminals()->empty()) throw InvariantError("steiner instance needs terminals");
  const auto& terminals = *g.terminals();
  const auto& edges = g.edges();
  const std::size_t n = static_cast<std::size_t>(g.size()) + 1;

  auto is_tree_over_terminals = [&](const std::vector<std::size_t>& chosen) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::vector<bool> touched(n, false);
    for (std::size_t e : chosen) {
      parent[find(static_cast<std::size_t>(edges[e].u))] = find(static_cast<std::size_t>(edges[e].v));
      touched[edges[e].u] = touched[edges[e].v] = true;
    }
    for (Vertex t : terminals) touched[t] = true;
    std::size_t root = n;
    for (std::size_t v = 1; v < n; ++v) {
      if (!touched[v]) continue;
      if (root == n) root = find(v);
      if (find(v) != root) return false;
    }
    return true;
  };

  Weight best = std::numeric_limits<Weight>::max();
  std::vector<std::vector<std::size_t>> optimal;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> parent(n);
  std::uint64_t visited = 0;

  // Cycle test by a fresh union-find on the chosen edges (tiny instances).
  auto creates_cycle = [&](std::size_t candidate) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t e : chosen) parent[find(static_cast<std::size_t>(edges[e].u))] = find(static_cast<std::size_t>(edges[e].v));
    return find(static_cast<std::size_t>(edges[candidate].u)) == find(static_cast<std::size_t>(edges[candidate].v));
  };

  std::function<void(std::size_t, Weight)> rec = [&](std::size_t index, Weight weight) {
    if (++visited > kCandidateLimit) throw TooLarge("steiner: search space exceeds candidate limit");
    if (weight > best) return;
    if (index == edges.size()) {
      if (!is_tree_over_terminals(chosen)) return;
      if (weight < best) {
        best = weight;
        optimal.clear();
      }
      optimal.push_back(chosen);
      return;
    }
    if (!creates_cycle(index)) {
      chosen.push_back(index);
      rec(index + 1, weight + edges[index].w);
      chosen.pop_back();
    }
    rec(index + 1, weight);
  };
  rec(0, 0);

  std::set<Solution> out;
  for (const auto& tree : optimal) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t e : tree) pairs.emplace_back(edges[e].u, edges[e].v);
    out.insert(canonical_edge_set(std::move(pairs)));
  }
  return out;
}

}  // namespace

std::set<Solution> brute_force(const Instance& instance, ProblemKind kind, std::size_t k) {
  switch (kind) {
    case ProblemKind::fvst:
      return feedback_sets(std::get<Tournament>(instance), k);
    case ProblemKind::closest_string:
      return center_strings(std::get<StringSet>(instance), k);
    case ProblemKind::ilp:
      return integer_points(std::get<IlpSystem>(instance));
    case ProblemKind::longest_path:
      return simple_paths(std::get<Graph>(instance), k);
    case ProblemKind::vertex_cover:
      return vertex_covers(std::get<Graph>(instance), k);
    case ProblemKind::steiner:
      return steiner_trees(std::get<Graph>(instance));
  }
  throw InvariantError("unknown problem kind");
}

}  // namespace enumfpt::oracle
