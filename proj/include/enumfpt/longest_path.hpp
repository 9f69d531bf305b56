#pragma once

// Simple paths on exactly k vertices, enumerated as a duplicate-free union of
// colorful-path streams over a perfect hash family (derandomized color
// coding). A path and its reversal are the same solution.

#include <cstdint>
#include <memory>
#include <vector>

#include "enumfpt/instances.hpp"
#include "enumfpt/schemes.hpp"

namespace enumfpt::longest_path {

// coloring[v] in 1..k for v in 1..n; index 0 unused.
using Coloring = std::vector<int>;

struct PerfectHashFamily {
  int n = 0;
  int k = 0;
  std::vector<Coloring> colorings;
};

// Greedy cover of all k-subsets for small n; for larger n, prime-modulus maps
// into a k^2-sized range composed with a greedy family on that range.
PerfectHashFamily build_hash_family(int n, int k);

// True iff every k-subset of 1..n is injectively colored by some member.
// Exhaustive; throws TooLarge when C(n,k) exceeds `limit`.
bool verify_perfect(const PerfectHashFamily& family, std::uint64_t limit = 1'000'000);

// Checks `samples` pseudo-random k-subsets instead of all of them.
bool spot_check_perfect(const PerfectHashFamily& family, std::size_t samples, std::uint64_t seed);

// P(C, u): predecessors of u on C-colorful paths ending in u, for color sets
// C given as bitmasks over colors 1..k (bit c-1 for color c).
class PathTable {
 public:
  PathTable(const Graph& g, int k, const Coloring& coloring);

  const std::vector<Vertex>& predecessors(unsigned colors, Vertex u) const {
    return table_[colors * stride_ + static_cast<std::size_t>(u)];
  }
  unsigned full_mask() const noexcept { return (1u << k_) - 1; }

 private:
  int k_;
  std::size_t stride_;
  std::vector<std::vector<Vertex>> table_;
};

// Colorful paths for one coloring, each once in canonical (reversal-folded)
// form. The table is built lazily on the first pull.
SolutionStream enumerate_colorful_paths(std::shared_ptr<const Graph> g, int k, Coloring coloring);

// Throws InvalidPath unless `path` is k distinct vertices joined by edges.
bool is_colorful(const Graph& g, int k, const Coloring& coloring, const std::vector<Vertex>& path);

UnionSpec<Coloring> make_union_spec(std::shared_ptr<const Graph> g, int k, PerfectHashFamily family);

SolutionStream enumerate(std::shared_ptr<const Graph> g, int k, const PerfectHashFamily& family,
                         RunOptions options = {}, UnionObserver observer = {});
SolutionStream enumerate(std::shared_ptr<const Graph> g, int k, RunOptions options = {});

}  // namespace enumfpt::longest_path
