#pragma once

// Feedback vertex sets of size <= k in tournaments, enumerated through a
// bounded search tree over the generalized problem (T, C, F, k): C is
// committed to deletion, F to retention.

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "enumfpt/instances.hpp"
#include "enumfpt/schemes.hpp"

namespace enumfpt::fvst {

// Characteristic vector over 1..n; index 0 is unused.
using VertexMask = std::vector<bool>;

struct GfvstNode {
  std::shared_ptr<const Tournament> tournament;
  VertexMask committed;  // C
  VertexMask retained;   // F
  std::size_t budget;    // k - |C|

  static GfvstNode root(std::shared_ptr<const Tournament> t, std::size_t k);
};

// Lexicographically first directed triangle of T[V \ excluded], listed along
// its cycle starting from the smallest vertex. O(n^3).
std::optional<std::array<Vertex, 3>> find_triangle(const Tournament& t, const VertexMask& excluded);

std::vector<GfvstNode> split(const GfvstNode& node);
std::size_t measure(const GfvstNode& node);
SolutionStream leaf_enum(const GfvstNode& node);

BoundedTreeAdapter<GfvstNode> make_adapter(std::size_t k);

SolutionStream enumerate(std::shared_ptr<const Tournament> t, std::size_t k, RunOptions options = {},
                         TraversalObserver observer = {});

}  // namespace enumfpt::fvst
