#pragma once

// Vertex covers of size <= k, enumerated by iterative compression: vertices
// are introduced one at a time and each oversized cover is compressed by
// guessing its intersection with the solution.

#include <memory>
#include <vector>

#include "enumfpt/instances.hpp"
#include "enumfpt/schemes.hpp"

namespace enumfpt::vertex_cover {

using Cover = std::vector<Vertex>;  // sorted ascending

// Graph plus a vertex introduction order; prefix i is the subgraph induced by
// the first i vertices of the order.
class OrderedGraph {
 public:
  explicit OrderedGraph(std::shared_ptr<const Graph> g);
  OrderedGraph(std::shared_ptr<const Graph> g, std::vector<Vertex> order);

  const Graph& graph() const noexcept { return *g_; }
  std::size_t size() const noexcept { return order_.size(); }
  Vertex vertex(std::size_t i) const { return order_[i]; }  // 0-based position
  // Is v among the first i introduced vertices?
  bool in_prefix(Vertex v, std::size_t i) const { return position_[v] < i; }
  bool covers(std::size_t i, const Cover& cover) const;

 private:
  std::shared_ptr<const Graph> g_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
};

struct CoverState {
  std::size_t introduced = 0;  // i
  Cover cover;                 // S_i
};

// S_i plus the next vertex: a cover of prefix i+1 with at most k+1 vertices.
Cover grow(const OrderedGraph& g, const CoverState& state);

// Covers of prefix i with at most k vertices, grouped by their intersection
// C with `oversized`: for every split oversized = C + F with F independent and
// |C + N(F)| <= k, yields C + N(F) and, if emit_all, each extension of it by
// vertices outside oversized + N(F) that stays within k.
Stream<Cover> compress(std::shared_ptr<const OrderedGraph> g, std::size_t i, std::size_t k, Cover oversized,
                       bool emit_all);

CompressionSpec<Cover> make_spec(std::shared_ptr<const OrderedGraph> g);

SolutionStream enumerate(std::shared_ptr<const OrderedGraph> g, std::size_t k, RunOptions options = {});
SolutionStream enumerate(std::shared_ptr<const Graph> g, std::size_t k, RunOptions options = {});

}  // namespace enumfpt::vertex_cover
