#pragma once

// Integer points of a box-bounded system Ax <= b in k variables, enumerated
// by solution search: find one point, then split the remaining points by the
// first coordinate where they deviate from it.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "enumfpt/instances.hpp"
#include "enumfpt/schemes.hpp"

namespace enumfpt::ilp {

using Point = std::vector<std::int64_t>;

// Constraints added on top of the base system for one variable. Fixing a
// value drops the tightened bounds and repeated bounds are merged, so a
// variable never carries more than two extra (in)equalities.
struct ExtraConstraints {
  std::optional<std::int64_t> fixed;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;

  std::size_t count() const noexcept { return (fixed ? 1 : 0) + (lower ? 1 : 0) + (upper ? 1 : 0); }
};

struct IlpNode {
  std::shared_ptr<const IlpSystem> system;
  std::vector<ExtraConstraints> extra;

  static IlpNode root(std::shared_ptr<const IlpSystem> system);

  // Box of variable j after merging the extras; lo > hi means empty.
  Bounds effective_bounds(std::size_t j) const;
  bool box_empty() const;
};

bool is_feasible(const IlpNode& node, const Point& x);

// First feasible point in lexicographic order (variables in index order,
// values ascending), via depth-first branch and bound with row propagation.
std::optional<Point> find_solution(const IlpNode& node);

// The 2k children (x_1..x_i fixed to S, x_{i+1} > s_{i+1}) and
// (x_1..x_i fixed to S, x_{i+1} < s_{i+1}), i = 0..k-1, in that order, with
// no pruning. Empty if S is not a feasible point of the node.
std::vector<IlpNode> split_all(const IlpNode& node, const Point& s);

// split_all minus the children whose merged box is empty.
std::vector<IlpNode> split(const IlpNode& node, const Point& s);

SolutionSearchAdapter<IlpNode, Point> make_adapter();

// Throws UnboundedInstance if some variable has no box.
SolutionStream enumerate(std::shared_ptr<const IlpSystem> system, RunOptions options = {},
                         TraversalObserver observer = {});

}  // namespace enumfpt::ilp
