#pragma once

// All minimum-weight Steiner trees, enumerated through the subset DP
// T[D, v, b] with backlinks whose provenance is unique:
//   * terminals are ordered by ascending vertex id,
//   * b = 1 iff v has degree 1 in the represented trees,
//   * a merge at v always puts the smallest terminal of D on the left
//     operand, and the left operand has b = 1.
//
// Unless every terminal already is a leaf hanging off a non-terminal, each
// terminal t gets a fresh pendant neighbour (weight 1) that takes over its
// terminal role. The pendants are stripped on output.

#include <cstdint>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "enumfpt/instances.hpp"
#include "enumfpt/schemes.hpp"

namespace enumfpt::steiner {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

struct SteinerInstance {
  std::shared_ptr<const Graph> original;
  std::vector<Vertex> terminals;  // original ids, ascending; terminal i is bit i
  // |K| <= 1: the only minimum tree is K itself without edges.
  bool trivial = false;
  // False if the original was already in normal form and is used as is.
  bool pendants_added = false;
  // Original graph plus pendants: pendant of terminal i is vertex n + 1 + i.
  std::shared_ptr<const Graph> augmented;
  // Non-terminals of the augmented graph, ascending; the table's v range.
  std::vector<Vertex> inner;

  int original_size() const { return original->size(); }
  Vertex pendant(std::size_t terminal_index) const {
    return pendants_added ? original->size() + 1 + static_cast<Vertex>(terminal_index) : terminals[terminal_index];
  }
};

// Throws InvariantError without terminals, DisconnectedTerminals if the
// terminals do not share a connected component.
SteinerInstance preprocess(std::shared_ptr<const Graph> g, std::vector<Vertex> terminals);
SteinerInstance preprocess(std::shared_ptr<const Graph> g);  // uses g->terminals()

// All-pairs shortest path distances with every minimum-weight path
// recoverable from the tight-edge DAG.
class DistOracle {
 public:
  explicit DistOracle(std::shared_ptr<const Graph> g);

  Weight dist(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
  const Graph& graph() const noexcept { return *g_; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * (static_cast<std::size_t>(g_->size()) + 1) + static_cast<std::size_t>(v);
  }

  std::shared_ptr<const Graph> g_;
  std::vector<Weight> dist_;
};

// Every minimum-weight u-v path exactly once, as its edge list (u = v yields
// the empty path only).
Stream<EdgeList> enumerate_min_paths(std::shared_ptr<const DistOracle> oracle, Vertex u, Vertex v);

class SteinerTable {
 public:
  using Mask = std::uint32_t;

  // Merge witness of T[D, v, 0]: T[left, v, 1] + T[D \ left, v, right_bit].
  struct Merge {
    Mask left;
    int right_bit;
  };

  SteinerTable(const SteinerInstance& inst, const DistOracle& oracle);

  std::size_t terminal_count() const noexcept { return terminals_; }
  Mask full() const noexcept { return (Mask{1} << terminals_) - 1; }
  // v ranges over SteinerInstance::inner; other v read as infinity.
  Weight value(Mask d, Vertex v, int b) const { return values_[slot(d, v, b)]; }
  const std::vector<Merge>& merges(Mask d, Vertex v) const { return merges_[slot(d, v, 0)]; }
  // T[D, v, 1] for |D| >= 2: merge points u != v reached by a shortest path.
  const std::vector<Vertex>& extensions(Mask d, Vertex v) const { return extensions_[slot(d, v, 1)]; }

 private:
  std::size_t slot(Mask d, Vertex v, int b) const {
    return (static_cast<std::size_t>(d) * stride_ + static_cast<std::size_t>(v)) * 2 + static_cast<std::size_t>(b);
  }

  std::size_t terminals_;
  std::size_t stride_;
  std::vector<Weight> values_;
  std::vector<std::vector<Merge>> merges_;
  std::vector<std::vector<Vertex>> extensions_;
};

// Table fill plus the root entry T[K, v_k, 0] at the pendant's anchor v_k.
struct SteinerSolver {
  SteinerInstance instance;
  std::shared_ptr<const DistOracle> oracle;
  std::shared_ptr<const SteinerTable> table;
  Vertex anchor = 0;   // v_k, neighbour of the first terminal's pendant
  Weight optimum = 0;  // weight in the original graph (pendants removed)
};

SteinerSolver solve(SteinerInstance instance);

// Minimum-weight Steiner trees as canonical edge sets of the original graph.
// In verification mode every output is checked to be a tree of optimum
// weight spanning the terminals (ContractViolation otherwise).
SolutionStream enumerate(const SteinerSolver& solver, RunOptions options = {});
SolutionStream enumerate(std::shared_ptr<const Graph> g, RunOptions options = {});

// Sum of edge weights of an edge set of `g`; throws InvariantError if some
// pair is not an edge.
Weight edge_set_weight(const Graph& g, const EdgeList& edges);
// Connected, acyclic, and touching every terminal (K alone for empty sets).
bool is_steiner_tree(const Graph& g, const std::vector<Vertex>& terminals, const EdgeList& edges);

}  // namespace enumfpt::steiner
