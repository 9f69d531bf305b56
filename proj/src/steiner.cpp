#include "enumfpt/steiner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "enumfpt/errors.hpp"

namespace enumfpt::steiner {

namespace {

using Mask = SteinerTable::Mask;

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

SteinerInstance preprocess(std::shared_ptr<const Graph> g, std::vector<Vertex> terminals) {
  if (terminals.empty()) throw InvariantError("steiner tree needs at least one terminal");
  std::sort(terminals.begin(), terminals.end());
  if (std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end())
    throw InvariantError("terminal listed twice");
  for (Vertex t : terminals)
    if (t < 1 || t > g->size()) throw InvariantError("terminal " + std::to_string(t) + " is not a vertex");
  if (terminals.size() > 30) throw InvariantError("at most 30 terminals are supported");

  SteinerInstance inst;
  inst.original = g;
  inst.terminals = terminals;
  if (terminals.size() <= 1) {
    inst.trivial = true;
    return inst;
  }

  DisjointSets components(static_cast<std::size_t>(g->size()) + 1);
  for (const auto& e : g->edges()) components.unite(e.u, e.v);
  for (Vertex t : terminals)
    if (components.find(t) != components.find(terminals.front()))
      throw DisconnectedTerminals("terminals " + std::to_string(terminals.front()) + " and " + std::to_string(t) +
                                  " lie in different components");

  std::vector<bool> is_terminal(static_cast<std::size_t>(g->size()) + 1, false);
  for (Vertex t : terminals) is_terminal[t] = true;
  const bool normal_form = std::all_of(terminals.begin(), terminals.end(), [&](Vertex t) {
    return g->neighbors(t).size() == 1 && !is_terminal[g->neighbors(t).front()];
  });
  if (normal_form) {
    inst.augmented = g;
    for (Vertex v = 1; v <= g->size(); ++v)
      if (!is_terminal[v]) inst.inner.push_back(v);
    return inst;
  }
  auto augmented = std::make_shared<Graph>(g->size() + static_cast<int>(terminals.size()));
  augmented->set_weighted(true);
  for (const auto& e : g->edges()) augmented->add_edge(e.u, e.v, e.w);
  inst.pendants_added = true;
  for (std::size_t i = 0; i < terminals.size(); ++i) augmented->add_edge(terminals[i], inst.pendant(i), 1);
  inst.augmented = std::move(augmented);
  for (Vertex v = 1; v <= g->size(); ++v) inst.inner.push_back(v);
  return inst;
}

SteinerInstance preprocess(std::shared_ptr<const Graph> g) {
  if (!g->terminals()) throw InvariantError("graph has no terminals block");
  auto terminals = *g->terminals();
  return preprocess(std::move(g), std::move(terminals));
}

DistOracle::DistOracle(std::shared_ptr<const Graph> g) : g_(std::move(g)) {
  const auto n = static_cast<std::size_t>(g_->size());
  dist_.assign((n + 1) * (n + 1), kInfinity);
  using Item = std::pair<Weight, Vertex>;
  for (Vertex source = 1; source <= g_->size(); ++source) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist_[index(source, source)] = 0;
    queue.emplace(0, source);
    while (!queue.empty()) {
      auto [d, x] = queue.top();
      queue.pop();
      if (d != dist_[index(source, x)]) continue;
      for (Vertex y : g_->neighbors(x)) {
        const Weight nd = d + *g_->weight(x, y);
        if (nd < dist_[index(source, y)]) {
          dist_[index(source, y)] = nd;
          queue.emplace(nd, y);
        }
      }
    }
  }
}

Stream<EdgeList> enumerate_min_paths(std::shared_ptr<const DistOracle> oracle, Vertex u, Vertex v) {
  if (u == v) return stream_of<EdgeList>({EdgeList{}});
  if (oracle->dist(u, v) >= kInfinity) return empty_stream<EdgeList>();

  // Walks back from v along tight edges; every such walk ends in u because
  // the distance to u strictly drops with each step.
  struct Frame {
    Vertex at;
    std::vector<Vertex> tight;
    std::size_t next = 0;
  };
  auto tight_predecessors = [oracle, u](Vertex x) {
    std::vector<Vertex> out;
    const Graph& g = oracle->graph();
    for (Vertex y : g.neighbors(x))
      if (oracle->dist(u, y) + *g.weight(y, x) == oracle->dist(u, x)) out.push_back(y);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Frame> frames;
  frames.push_back(Frame{v, tight_predecessors(v)});
  return make_stream<EdgeList>([u, frames = std::move(frames), edges = EdgeList{},
                                tight_predecessors]() mutable -> std::optional<EdgeList> {
    while (!frames.empty()) {
      Frame& top = frames.back();
      if (top.at == u) {
        EdgeList out = edges;
        frames.pop_back();
        edges.pop_back();
        return out;
      }
      if (top.next == top.tight.size()) {
        frames.pop_back();
        if (!edges.empty()) edges.pop_back();
        continue;
      }
      const Vertex y = top.tight[top.next++];
      edges.emplace_back(y, top.at);
      frames.push_back(Frame{y, tight_predecessors(y)});
    }
    return std::nullopt;
  });
}

SteinerTable::SteinerTable(const SteinerInstance& inst, const DistOracle& oracle)
    : terminals_(inst.terminals.size()), stride_(static_cast<std::size_t>(inst.original_size()) + 1) {
  const std::size_t cells = (std::size_t{1} << terminals_) * stride_ * 2;
  values_.assign(cells, kInfinity);
  merges_.assign(cells, {});
  extensions_.assign(cells, {});
  const auto& inner = inst.inner;

  // Every proper subset of D is numerically smaller than D, so increasing
  // mask order fills all operands before they are needed.
  for (Mask d = 1; d <= full(); ++d) {
    if (std::has_single_bit(d)) {
      const auto t = static_cast<std::size_t>(std::countr_zero(d));
      for (Vertex v : inner) values_[slot(d, v, 1)] = oracle.dist(inst.pendant(t), v);
      continue;
    }
    const Mask lowest = d & (~d + 1);
    for (Vertex v : inner) {
      Weight best = kInfinity;
      std::vector<Merge> witnesses;
      for (Mask left = (d - 1) & d; left != 0; left = (left - 1) & d) {
        if (!(left & lowest)) continue;
        const Weight l = value(left, v, 1);
        if (l >= kInfinity) continue;
        for (int b = 0; b < 2; ++b) {
          const Weight r = value(d ^ left, v, b);
          if (r >= kInfinity) continue;
          const Weight total = l + r;
          if (total < best) {
            best = total;
            witnesses.clear();
          }
          if (total == best) witnesses.push_back(Merge{left, b});
        }
      }
      values_[slot(d, v, 0)] = best;
      merges_[slot(d, v, 0)] = std::move(witnesses);
    }
    for (Vertex v : inner) {
      Weight best = kInfinity;
      std::vector<Vertex> witnesses;
      for (Vertex u : inner) {
        if (u == v) continue;
        const Weight base = value(d, u, 0);
        const Weight link = oracle.dist(u, v);
        if (base >= kInfinity || link >= kInfinity) continue;
        const Weight total = base + link;
        if (total < best) {
          best = total;
          witnesses.clear();
        }
        if (total == best) witnesses.push_back(u);
      }
      values_[slot(d, v, 1)] = best;
      extensions_[slot(d, v, 1)] = std::move(witnesses);
    }
  }
}

SteinerSolver solve(SteinerInstance instance) {
  SteinerSolver solver;
  solver.instance = std::move(instance);
  if (solver.instance.trivial) return solver;
  solver.oracle = std::make_shared<const DistOracle>(solver.instance.augmented);
  solver.table = std::make_shared<const SteinerTable>(solver.instance, *solver.oracle);
  const auto& inst = solver.instance;
  solver.anchor = inst.augmented->neighbors(inst.pendant(0)).front();
  const Weight root = solver.table->value(solver.table->full(), solver.anchor, 0);
  solver.optimum = root - (inst.pendants_added ? static_cast<Weight>(inst.terminals.size()) : 0);
  return solver;
}

namespace {

using Factory = std::function<Stream<EdgeList>()>;

Stream<EdgeList> concat(std::vector<Factory> parts) {
  return make_stream<EdgeList>([parts = std::move(parts), index = std::size_t{0},
                                current = std::optional<Stream<EdgeList>>()]() mutable -> std::optional<EdgeList> {
    for (;;) {
      if (!current) {
        if (index == parts.size()) return std::nullopt;
        current = parts[index++]();
      }
      if (auto item = current->next()) return item;
      current.reset();
    }
  });
}

// Every combination of an item of outer() with an item of inner(); inner is
// restarted for each outer item.
Stream<EdgeList> product(Factory outer, Factory inner) {
  return make_stream<EdgeList>([outer_stream = outer(), inner = std::move(inner), left = std::optional<EdgeList>(),
                                right_stream = std::optional<Stream<EdgeList>>()]() mutable
                               -> std::optional<EdgeList> {
    for (;;) {
      if (!left) {
        left = outer_stream.next();
        if (!left) return std::nullopt;
        right_stream = inner();
      }
      if (auto right = right_stream->next()) {
        EdgeList combined = *left;
        combined.insert(combined.end(), right->begin(), right->end());
        return combined;
      }
      left.reset();
    }
  });
}

struct Context {
  SteinerInstance instance;
  std::shared_ptr<const DistOracle> oracle;
  std::shared_ptr<const SteinerTable> table;
};

// Trees of S[D, v, b] by walking the backlinks; each recursion level is a
// nested loop over (left subtree, right subtree) or (subtree, path).
Stream<EdgeList> entry_stream(std::shared_ptr<const Context> ctx, Mask d, Vertex v, int b) {
  const SteinerTable& table = *ctx->table;
  if (std::has_single_bit(d)) {
    if (b == 0) return empty_stream<EdgeList>();
    const auto t = static_cast<std::size_t>(std::countr_zero(d));
    return enumerate_min_paths(ctx->oracle, ctx->instance.pendant(t), v);
  }
  std::vector<Factory> parts;
  if (b == 0) {
    for (const auto& m : table.merges(d, v)) {
      parts.push_back([ctx, d, v, m] {
        return product([ctx, v, m] { return entry_stream(ctx, m.left, v, 1); },
                       [ctx, d, v, m] { return entry_stream(ctx, d ^ m.left, v, m.right_bit); });
      });
    }
  } else {
    for (Vertex u : table.extensions(d, v)) {
      parts.push_back([ctx, d, v, u] {
        return product([ctx, d, u] { return entry_stream(ctx, d, u, 0); },
                       [ctx, u, v] { return enumerate_min_paths(ctx->oracle, u, v); });
      });
    }
  }
  return concat(std::move(parts));
}

}  // namespace

Weight edge_set_weight(const Graph& g, const EdgeList& edges) {
  Weight total = 0;
  for (auto [u, v] : edges) {
    auto w = g.weight(u, v);
    if (!w) throw InvariantError(std::to_string(u) + " " + std::to_string(v) + " is not an edge");
    total += *w;
  }
  return total;
}

bool is_steiner_tree(const Graph& g, const std::vector<Vertex>& terminals, const EdgeList& edges) {
  std::set<Vertex> vertices(terminals.begin(), terminals.end());
  std::set<std::pair<Vertex, Vertex>> distinct;
  for (auto [u, v] : edges) {
    if (!g.adjacent(u, v)) return false;
    if (!distinct.insert(std::minmax(u, v)).second) return false;
    vertices.insert(u);
    vertices.insert(v);
  }
  if (vertices.empty()) return true;
  if (edges.size() + 1 != vertices.size()) return false;
  DisjointSets sets(static_cast<std::size_t>(g.size()) + 1);
  std::size_t merged = 0;
  for (auto [u, v] : edges) merged += sets.unite(u, v) ? 1 : 0;
  return merged == edges.size();
}

SolutionStream enumerate(const SteinerSolver& solver, RunOptions options) {
  const SteinerInstance& inst = solver.instance;
  if (inst.trivial) return stream_of<Solution>({canonical_edge_set({})});
  auto ctx = std::make_shared<const Context>(Context{inst, solver.oracle, solver.table});
  auto trees = entry_stream(ctx, solver.table->full(), solver.anchor, 0);
  const Vertex n = inst.original_size();  // pendants are numbered above n
  return map_stream(std::move(trees), [inst, n, optimum = solver.optimum, verify = options.verify](EdgeList edges) {
    std::erase_if(edges, [n](const auto& e) { return e.first > n || e.second > n; });
    if (verify) {
      if (!is_steiner_tree(*inst.original, inst.terminals, edges))
        throw ContractViolation("backlink combination is not a Steiner tree: " + canonical_edge_set(edges));
      if (edge_set_weight(*inst.original, edges) != optimum)
        throw ContractViolation("backlink combination has non-optimal weight: " + canonical_edge_set(edges));
    }
    return canonical_edge_set(std::move(edges));
  });
}

SolutionStream enumerate(std::shared_ptr<const Graph> g, RunOptions options) {
  return enumerate(solve(preprocess(std::move(g))), options);
}

}  // namespace enumfpt::steiner
