#include "enumfpt/fvst.hpp"

#include "enumfpt/subsets.hpp"

namespace enumfpt::fvst {

namespace {

VertexMask complement(const VertexMask& mask) {
  VertexMask out(mask.size(), false);
  for (std::size_t v = 1; v < mask.size(); ++v) out[v] = !mask[v];
  return out;
}

bool has_cycle_outside(const Tournament& t, const VertexMask& excluded) {
  return find_triangle(t, excluded).has_value();
}

}  // namespace

GfvstNode GfvstNode::root(std::shared_ptr<const Tournament> t, std::size_t k) {
  const auto size = static_cast<std::size_t>(t->size()) + 1;
  return GfvstNode{std::move(t), VertexMask(size, false), VertexMask(size, false), k};
}

std::optional<std::array<Vertex, 3>> find_triangle(const Tournament& t, const VertexMask& excluded) {
  const int n = t.size();
  for (Vertex a = 1; a <= n; ++a) {
    if (excluded[a]) continue;
    for (Vertex b = a + 1; b <= n; ++b) {
      if (excluded[b]) continue;
      for (Vertex c = b + 1; c <= n; ++c) {
        if (excluded[c]) continue;
        if (t.beats(a, b) && t.beats(b, c) && t.beats(c, a)) return std::array{a, b, c};
        if (t.beats(a, c) && t.beats(c, b) && t.beats(b, a)) return std::array{a, c, b};
      }
    }
  }
  return std::nullopt;
}

std::vector<GfvstNode> split(const GfvstNode& node) {
  auto triangle = find_triangle(*node.tournament, node.committed);
  if (!triangle || node.budget == 0) return {};
  std::vector<GfvstNode> children;
  // Delta ranges over the nonempty subsets of the triangle, by bitmask.
  for (unsigned delta = 1; delta < 8; ++delta) {
    std::size_t size = 0;
    bool allowed = true;
    for (int i = 0; i < 3; ++i) {
      if (!(delta & (1u << i))) continue;
      ++size;
      if (node.retained[(*triangle)[i]]) allowed = false;
    }
    if (!allowed || size > node.budget) continue;
    GfvstNode child = node;
    for (int i = 0; i < 3; ++i) {
      Vertex v = (*triangle)[i];
      if (delta & (1u << i))
        child.committed[v] = true;
      else
        child.retained[v] = true;
    }
    child.budget -= size;
    children.push_back(std::move(child));
  }
  return children;
}

std::size_t measure(const GfvstNode& node) {
  const Tournament& t = *node.tournament;
  if (!has_cycle_outside(t, node.committed)) return 0;
  if (has_cycle_outside(t, complement(node.retained))) return 0;
  return node.budget;
}

SolutionStream leaf_enum(const GfvstNode& node) {
  const Tournament& t = *node.tournament;
  if (has_cycle_outside(t, complement(node.retained)) || has_cycle_outside(t, node.committed))
    return empty_stream<Solution>();
  std::vector<Vertex> base;
  std::vector<Vertex> free;
  for (Vertex v = 1; v <= t.size(); ++v) {
    if (node.committed[v])
      base.push_back(v);
    else if (!node.retained[v])
      free.push_back(v);
  }
  // Deleting more vertices from an acyclic tournament keeps it acyclic, so
  // every small enough extension of C is a solution.
  SubsetCursor cursor(free.size(), node.budget);
  return make_stream<Solution>([base = std::move(base), free = std::move(free),
                                cursor = std::move(cursor)]() mutable -> std::optional<Solution> {
    auto pick = cursor.next();
    if (!pick) return std::nullopt;
    std::vector<Vertex> s = base;
    for (auto i : *pick) s.push_back(free[i]);
    return canonical_vertex_set(std::move(s));
  });
}

BoundedTreeAdapter<GfvstNode> make_adapter(std::size_t k) {
  BoundedTreeAdapter<GfvstNode> adapter;
  adapter.split = split;
  adapter.measure = measure;
  adapter.leaf_enum = leaf_enum;
  adapter.breadth_bound = 7;
  adapter.depth_bound = k;
  return adapter;
}

SolutionStream enumerate(std::shared_ptr<const Tournament> t, std::size_t k, RunOptions options,
                         TraversalObserver observer) {
  return run_bounded_tree(make_adapter(k), GfvstNode::root(std::move(t), k), options, std::move(observer));
}

}  // namespace enumfpt::fvst
