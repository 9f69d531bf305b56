#include "enumfpt/ilp.hpp"

#include <algorithm>

#include "enumfpt/errors.hpp"

namespace enumfpt::ilp {

namespace {

// Smallest value row . x can take with x_0..x_{assigned-1} fixed to `x` and
// the rest free within their boxes.
std::int64_t row_minimum(const IlpRow& row, const Point& x, std::size_t assigned, const std::vector<Bounds>& box) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < row.coefficients.size(); ++j) {
    const std::int64_t a = row.coefficients[j];
    if (j < assigned)
      total += a * x[j];
    else
      total += a >= 0 ? a * box[j].lo : a * box[j].hi;
  }
  return total;
}

bool rows_satisfiable(const IlpSystem& sys, const Point& x, std::size_t assigned, const std::vector<Bounds>& box) {
  return std::all_of(sys.rows.begin(), sys.rows.end(),
                     [&](const IlpRow& row) { return row_minimum(row, x, assigned, box) <= row.bound; });
}

bool descend(const IlpSystem& sys, const std::vector<Bounds>& box, Point& x, std::size_t j) {
  if (!rows_satisfiable(sys, x, j, box)) return false;
  if (j == sys.k) return true;
  for (std::int64_t value = box[j].lo; value <= box[j].hi; ++value) {
    x[j] = value;
    if (descend(sys, box, x, j + 1)) return true;
  }
  return false;
}

}  // namespace

IlpNode IlpNode::root(std::shared_ptr<const IlpSystem> system) {
  system->validate();
  const std::size_t k = system->k;
  return IlpNode{std::move(system), std::vector<ExtraConstraints>(k)};
}

Bounds IlpNode::effective_bounds(std::size_t j) const {
  Bounds b = *system->box[j];
  const auto& e = extra[j];
  if (e.fixed) b = Bounds{std::max(b.lo, *e.fixed), std::min(b.hi, *e.fixed)};
  if (e.lower) b.lo = std::max(b.lo, *e.lower);
  if (e.upper) b.hi = std::min(b.hi, *e.upper);
  return b;
}

bool IlpNode::box_empty() const {
  for (std::size_t j = 0; j < extra.size(); ++j) {
    auto b = effective_bounds(j);
    if (b.lo > b.hi) return true;
  }
  return false;
}

bool is_feasible(const IlpNode& node, const Point& x) {
  const IlpSystem& sys = *node.system;
  if (x.size() != sys.k) return false;
  for (std::size_t j = 0; j < sys.k; ++j) {
    auto b = node.effective_bounds(j);
    if (x[j] < b.lo || x[j] > b.hi) return false;
  }
  for (const auto& row : sys.rows) {
    std::int64_t lhs = 0;
    for (std::size_t j = 0; j < sys.k; ++j) lhs += row.coefficients[j] * x[j];
    if (lhs > row.bound) return false;
  }
  return true;
}

std::optional<Point> find_solution(const IlpNode& node) {
  const IlpSystem& sys = *node.system;
  std::vector<Bounds> box(sys.k);
  for (std::size_t j = 0; j < sys.k; ++j) {
    box[j] = node.effective_bounds(j);
    if (box[j].lo > box[j].hi) return std::nullopt;
  }
  Point x(sys.k, 0);
  if (descend(sys, box, x, 0)) return x;
  return std::nullopt;
}

std::vector<IlpNode> split_all(const IlpNode& node, const Point& s) {
  std::vector<IlpNode> children;
  if (!is_feasible(node, s)) return children;
  const std::size_t k = node.system->k;
  children.reserve(2 * k);
  IlpNode prefix = node;  // x_0..x_{i-1} fixed to s
  for (std::size_t i = 0; i < k; ++i) {
    IlpNode above = prefix;
    auto& up = above.extra[i];
    up.lower = std::max(up.lower.value_or(s[i] + 1), s[i] + 1);
    children.push_back(std::move(above));

    IlpNode below = prefix;
    auto& down = below.extra[i];
    down.upper = std::min(down.upper.value_or(s[i] - 1), s[i] - 1);
    children.push_back(std::move(below));

    prefix.extra[i] = ExtraConstraints{s[i], std::nullopt, std::nullopt};
  }
  return children;
}

std::vector<IlpNode> split(const IlpNode& node, const Point& s) {
  auto children = split_all(node, s);
  std::erase_if(children, [](const IlpNode& child) { return child.box_empty(); });
  return children;
}

SolutionSearchAdapter<IlpNode, Point> make_adapter() {
  SolutionSearchAdapter<IlpNode, Point> adapter;
  adapter.find_solution = find_solution;
  adapter.split_excluding = split;
  adapter.encode = canonical_int_vector;
  return adapter;
}

SolutionStream enumerate(std::shared_ptr<const IlpSystem> system, RunOptions options, TraversalObserver observer) {
  return run_solution_search(make_adapter(), IlpNode::root(std::move(system)), options, std::move(observer));
}

}  // namespace enumfpt::ilp
