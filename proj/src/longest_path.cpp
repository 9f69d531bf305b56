#include "enumfpt/longest_path.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "enumfpt/errors.hpp"

namespace enumfpt::longest_path {

namespace {

using Mask = std::uint64_t;

bool rainbow(const Coloring& coloring, Mask subset) {
  std::uint64_t seen = 0;
  while (subset) {
    const int bit = std::countr_zero(subset);
    subset &= subset - 1;
    const std::uint64_t color = std::uint64_t{1} << coloring[bit + 1];
    if (seen & color) return false;
    seen |= color;
  }
  return true;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

// All k-subsets of {1..n} as bitmasks (bit v-1 for vertex v), n <= 64.
std::vector<Mask> all_subsets(int n, int k) {
  std::vector<Mask> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Repeatedly adds the best of a batch of random colorings until every
// k-subset is rainbow under some member. If a batch makes no progress, a
// coloring injective on the first uncovered subset is forced in.
std::vector<Coloring> greedy_family(int n, int k) {
  std::vector<Mask> uncovered = all_subsets(n, k);
  std::mt19937_64 rng(0x5eedULL * 1'000'003ULL + static_cast<std::uint64_t>(n) * 131 + static_cast<std::uint64_t>(k));
  std::uniform_int_distribution<int> color(1, k);
  auto random_coloring = [&] {
    Coloring c(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) c[v] = color(rng);
    return c;
  };
  constexpr int kBatch = 32;
  std::vector<Coloring> family;
  while (!uncovered.empty()) {
    Coloring best;
    std::size_t best_gain = 0;
    for (int b = 0; b < kBatch; ++b) {
      Coloring c = random_coloring();
      std::size_t gain = 0;
      for (Mask m : uncovered) gain += rainbow(c, m) ? 1 : 0;
      if (gain > best_gain) {
        best_gain = gain;
        best = std::move(c);
      }
    }
    if (best_gain == 0) {
      best = random_coloring();
      Mask m = uncovered.front();
      int next = 1;
      while (m) {
        best[std::countr_zero(m) + 1] = next++;
        m &= m - 1;
      }
    }
    std::erase_if(uncovered, [&](Mask m) { return rainbow(best, m); });
    family.push_back(std::move(best));
  }
  return family;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PerfectHashFamily build_hash_family(int n, int k) {
  PerfectHashFamily family{n, k, {}};
  if (k <= 0 || k > n) return family;
  if (k == 1) {
    family.colorings.push_back(Coloring(static_cast<std::size_t>(n) + 1, 1));
    family.colorings.front()[0] = 0;
    return family;
  }
  const int range = k * k;
  if (n <= 16 || n <= range) {
    family.colorings = greedy_family(n, k);
    return family;
  }
  // Some a in [1, p) maps any k-subset injectively into [0, k^2) via
  // (a*v mod p) mod k^2; the inner family then rainbows its image.
  int p = n + 1;
  while (!is_prime(p)) ++p;
  const auto inner = greedy_family(range, k);
  for (int a = 1; a < p; ++a) {
    for (const auto& h : inner) {
      Coloring c(static_cast<std::size_t>(n) + 1, 0);
      for (int v = 1; v <= n; ++v) {
        const auto slot = static_cast<int>((static_cast<std::int64_t>(a) * v % p) % range);
        c[v] = h[slot + 1];
      }
      family.colorings.push_back(std::move(c));
    }
  }
  return family;
}

bool verify_perfect(const PerfectHashFamily& family, std::uint64_t limit) {
  const int n = family.n;
  const int k = family.k;
  if (k <= 0 || k > n) return true;
  if (n > 64 || binomial(n, k) > limit)
    throw TooLarge("C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds exhaustive verification limit");
  for (Mask m : all_subsets(n, k)) {
    bool covered = std::any_of(family.colorings.begin(), family.colorings.end(),
                               [&](const Coloring& c) { return rainbow(c, m); });
    if (!covered) return false;
  }
  return true;
}

bool spot_check_perfect(const PerfectHashFamily& family, std::size_t samples, std::uint64_t seed) {
  const int n = family.n;
  const int k = family.k;
  if (k <= 0 || k > n) return true;
  std::mt19937_64 rng(seed);
  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertices[v] = v + 1;
  for (std::size_t s = 0; s < samples; ++s) {
    std::shuffle(vertices.begin(), vertices.end(), rng);
    bool covered = std::any_of(family.colorings.begin(), family.colorings.end(), [&](const Coloring& c) {
      std::uint64_t seen = 0;
      for (int i = 0; i < k; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << c[vertices[i]];
        if (seen & bit) return false;
        seen |= bit;
      }
      return true;
    });
    if (!covered) return false;
  }
  return true;
}

PathTable::PathTable(const Graph& g, int k, const Coloring& coloring)
    : k_(k), stride_(static_cast<std::size_t>(g.size()) + 1), table_((std::size_t{1} << k) * stride_) {
  auto bit = [&](Vertex v) { return 1u << (coloring[v] - 1); };
  auto cell = [&](unsigned colors, Vertex u) -> std::vector<Vertex>& {
    return table_[colors * stride_ + static_cast<std::size_t>(u)];
  };
  for (const auto& e : g.edges()) {
    if (coloring[e.u] == coloring[e.v]) continue;
    const unsigned colors = bit(e.u) | bit(e.v);
    cell(colors, e.v).push_back(e.u);
    cell(colors, e.u).push_back(e.v);
  }
  for (int size = 3; size <= k; ++size) {
    for (unsigned colors = 0; colors < (1u << k); ++colors) {
      if (std::popcount(colors) != size) continue;
      for (Vertex u = 1; u <= g.size(); ++u) {
        if (!(colors & bit(u))) continue;
        const unsigned rest = colors & ~bit(u);
        auto& out = cell(colors, u);
        for (Vertex v : g.neighbors(u))
          if (!predecessors(rest, v).empty()) out.push_back(v);
      }
    }
  }
  for (auto& preds : table_) std::sort(preds.begin(), preds.end());
}

SolutionStream enumerate_colorful_paths(std::shared_ptr<const Graph> g, int k, Coloring coloring) {
  if (k <= 0 || k > g->size()) return empty_stream<Solution>();
  if (k == 1) {
    std::vector<Solution> singles;
    for (Vertex v = 1; v <= g->size(); ++v) singles.push_back(std::to_string(v));
    return stream_of(std::move(singles));
  }

  // The k nested loops of the path reconstruction, unrolled into a cursor
  // stack: level i walks the candidates for the (i+1)-th vertex.
  struct Level {
    const std::vector<Vertex>* candidates;
    std::size_t next = 0;
  };
  struct State {
    std::shared_ptr<const Graph> g;
    int k;
    Coloring coloring;
    std::optional<PathTable> table;
    std::vector<Vertex> ends;  // vertices with a full colorful path ending there
    std::vector<Level> levels;
    std::vector<Vertex> path;
  };
  auto state = std::make_unique<State>(State{std::move(g), k, std::move(coloring), std::nullopt, {}, {}, {}});

  return make_stream<Solution>([st = std::move(state)]() mutable -> std::optional<Solution> {
    State& s = *st;
    if (!s.table) {
      s.table.emplace(*s.g, s.k, s.coloring);
      for (Vertex v = 1; v <= s.g->size(); ++v)
        if (!s.table->predecessors(s.table->full_mask(), v).empty()) s.ends.push_back(v);
      s.levels.push_back(Level{&s.ends});
    }
    const unsigned full = s.table->full_mask();
    while (!s.levels.empty()) {
      Level& top = s.levels.back();
      const std::size_t depth = s.levels.size() - 1;
      if (s.path.size() > depth) s.path.pop_back();
      if (top.next == top.candidates->size()) {
        s.levels.pop_back();
        continue;
      }
      const Vertex v = (*top.candidates)[top.next++];
      s.path.push_back(v);
      if (s.path.size() == static_cast<std::size_t>(s.k)) {
        // Each path shows up once per orientation; keep the smaller one.
        std::vector<Vertex> reversed(s.path.rbegin(), s.path.rend());
        if (s.path < reversed) return canonical_path(s.path);
        continue;
      }
      // Colors still unused by the path, apart from the last vertex's.
      unsigned colors = full;
      for (std::size_t i = 0; i + 1 < s.path.size(); ++i) colors &= ~(1u << (s.coloring[s.path[i]] - 1));
      s.levels.push_back(Level{&s.table->predecessors(colors, v)});
    }
    return std::nullopt;
  });
}

bool is_colorful(const Graph& g, int k, const Coloring& coloring, const std::vector<Vertex>& path) {
  if (k < 1 || path.size() != static_cast<std::size_t>(k)) throw InvalidPath("path does not have k vertices");
  for (Vertex v : path)
    if (v < 1 || v > g.size()) throw InvalidPath("vertex " + std::to_string(v) + " out of range");
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j)
      if (path[i] == path[j]) throw InvalidPath("vertex " + std::to_string(path[i]) + " repeats");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.adjacent(path[i], path[i + 1]))
      throw InvalidPath(std::to_string(path[i]) + " and " + std::to_string(path[i + 1]) + " are not adjacent");
  std::uint64_t seen = 0;
  for (Vertex v : path) {
    const std::uint64_t bit = std::uint64_t{1} << coloring[v];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

UnionSpec<Coloring> make_union_spec(std::shared_ptr<const Graph> g, int k, PerfectHashFamily family) {
  UnionSpec<Coloring> spec;
  spec.identifiers = [family = std::move(family)] { return family.colorings; };
  spec.stream_for = [g, k](const Coloring& c) { return enumerate_colorful_paths(g, k, c); };
  spec.member = [g, k](const Coloring& c, const Solution& s) { return is_colorful(*g, k, c, decode_vertex_list(s)); };
  return spec;
}

SolutionStream enumerate(std::shared_ptr<const Graph> g, int k, const PerfectHashFamily& family, RunOptions options,
                         UnionObserver observer) {
  if (k <= 0 || k > g->size()) return empty_stream<Solution>();
  return run_union(make_union_spec(std::move(g), k, family), options, std::move(observer));
}

SolutionStream enumerate(std::shared_ptr<const Graph> g, int k, RunOptions options) {
  if (k <= 0 || k > g->size()) return empty_stream<Solution>();
  auto family = build_hash_family(g->size(), k);
  return enumerate(std::move(g), k, family, options);
}

}  // namespace enumfpt::longest_path
