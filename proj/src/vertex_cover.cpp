#include "enumfpt/vertex_cover.hpp"

#include <algorithm>
#include <numeric>

#include "enumfpt/errors.hpp"
#include "enumfpt/subsets.hpp"

namespace enumfpt::vertex_cover {

OrderedGraph::OrderedGraph(std::shared_ptr<const Graph> g)
    : OrderedGraph(g, [&] {
        std::vector<Vertex> order(static_cast<std::size_t>(g->size()));
        std::iota(order.begin(), order.end(), 1);
        return order;
      }()) {}

OrderedGraph::OrderedGraph(std::shared_ptr<const Graph> g, std::vector<Vertex> order)
    : g_(std::move(g)), order_(std::move(order)), position_(static_cast<std::size_t>(g_->size()) + 1, 0) {
  if (order_.size() != static_cast<std::size_t>(g_->size()))
    throw InvariantError("vertex order must list every vertex once");
  std::vector<bool> seen(position_.size(), false);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const Vertex v = order_[i];
    if (v < 1 || v > g_->size() || seen[v]) throw InvariantError("vertex order must list every vertex once");
    seen[v] = true;
    position_[v] = i;
  }
}

bool OrderedGraph::covers(std::size_t i, const Cover& cover) const {
  std::vector<bool> in(position_.size(), false);
  for (Vertex v : cover) {
    if (!in_prefix(v, i)) return false;
    in[v] = true;
  }
  for (const auto& e : g_->edges())
    if (in_prefix(e.u, i) && in_prefix(e.v, i) && !in[e.u] && !in[e.v]) return false;
  return true;
}

Cover grow(const OrderedGraph& g, const CoverState& state) {
  Cover next = state.cover;
  next.push_back(g.vertex(state.introduced));
  std::sort(next.begin(), next.end());
  return next;
}

namespace {

// Walks the splits oversized = C + F, C by decreasing size and
// lexicographically within a size, then the extensions of each feasible base.
class CompressSource final : public Stream<Cover>::Source {
 public:
  CompressSource(std::shared_ptr<const OrderedGraph> g, std::size_t i, std::size_t k, Cover oversized, bool emit_all)
      : g_(std::move(g)), prefix_(i), k_(k), oversized_(std::move(oversized)), emit_all_(emit_all) {
    c_size_ = oversized_.size();
    reset_combination();
  }

  std::optional<Cover> next() override {
    for (;;) {
      if (extensions_) {
        if (auto pick = extensions_->next()) {
          Cover s = base_;
          for (auto idx : *pick) s.push_back(free_[idx]);
          std::sort(s.begin(), s.end());
          return s;
        }
        extensions_.reset();
      }
      if (done_) return std::nullopt;
      std::vector<bool> in_c(oversized_.size(), false);
      for (auto idx : combination_) in_c[idx] = true;
      const bool feasible = evaluate(in_c);
      advance();
      if (!feasible) continue;
      if (emit_all_) {
        extensions_.emplace(free_.size(), k_ - base_.size());
        extensions_->next();  // the empty extension is the base itself
      } else {
        done_ = true;
      }
      return base_;
    }
  }

 private:
  void reset_combination() {
    combination_.resize(c_size_);
    std::iota(combination_.begin(), combination_.end(), std::size_t{0});
  }

  void advance() {
    const std::size_t s = oversized_.size();
    const std::size_t c = combination_.size();
    std::size_t i = c;
    while (i > 0 && combination_[i - 1] == s - c + (i - 1)) --i;
    if (i > 0) {
      ++combination_[i - 1];
      for (std::size_t j = i; j < c; ++j) combination_[j] = combination_[j - 1] + 1;
      return;
    }
    if (c_size_ == 0) {
      done_ = true;
      return;
    }
    --c_size_;
    reset_combination();
  }

  // Fills base_ and free_ for the split with C = {oversized[i] : in_c[i]}.
  bool evaluate(const std::vector<bool>& in_c) {
    const Graph& graph = g_->graph();
    std::vector<char> role(static_cast<std::size_t>(graph.size()) + 1, 0);  // 1: C, 2: F, 3: N(F)
    for (std::size_t i = 0; i < oversized_.size(); ++i) role[oversized_[i]] = in_c[i] ? 1 : 2;
    base_.clear();
    for (std::size_t i = 0; i < oversized_.size(); ++i) {
      const Vertex f = oversized_[i];
      if (in_c[i]) continue;
      for (Vertex w : graph.neighbors(f)) {
        if (!g_->in_prefix(w, prefix_)) continue;
        if (role[w] == 2) return false;  // F is not independent
        if (role[w] == 0) role[w] = 3;
      }
    }
    for (Vertex v = 1; v <= graph.size(); ++v)
      if (role[v] == 1 || role[v] == 3) base_.push_back(v);
    if (base_.size() > k_) return false;
    free_.clear();
    if (emit_all_)
      for (std::size_t i = 0; i < prefix_; ++i) {
        const Vertex v = g_->vertex(i);
        if (role[v] == 0) free_.push_back(v);
      }
    std::sort(free_.begin(), free_.end());
    return true;
  }

  std::shared_ptr<const OrderedGraph> g_;
  std::size_t prefix_;
  std::size_t k_;
  Cover oversized_;
  bool emit_all_;
  std::size_t c_size_;
  std::vector<std::size_t> combination_;
  bool done_ = false;
  Cover base_;
  std::vector<Vertex> free_;
  std::optional<SubsetCursor> extensions_;
};

}  // namespace

Stream<Cover> compress(std::shared_ptr<const OrderedGraph> g, std::size_t i, std::size_t k, Cover oversized,
                       bool emit_all) {
  return Stream<Cover>(std::make_unique<CompressSource>(std::move(g), i, k, std::move(oversized), emit_all));
}

CompressionSpec<Cover> make_spec(std::shared_ptr<const OrderedGraph> g) {
  CompressionSpec<Cover> spec;
  spec.units = g->size();
  spec.initial = [] { return Cover{}; };
  spec.grow = [g](std::size_t i, std::size_t, const Cover& s) { return grow(*g, CoverState{i, s}); };
  spec.compress = [g](std::size_t i, std::size_t k, const Cover& oversized, bool emit_all) {
    return compress(g, i, k, oversized, emit_all);
  };
  spec.is_solution = [g](std::size_t i, std::size_t k, const Cover& s) { return s.size() <= k && g->covers(i, s); };
  spec.encode = [](const Cover& s) { return canonical_vertex_set(s); };
  return spec;
}

SolutionStream enumerate(std::shared_ptr<const OrderedGraph> g, std::size_t k, RunOptions options) {
  return run_iterative_compression(make_spec(std::move(g)), k, options);
}

SolutionStream enumerate(std::shared_ptr<const Graph> g, std::size_t k, RunOptions options) {
  return enumerate(std::make_shared<const OrderedGraph>(std::move(g)), k, options);
}

}  // namespace enumfpt::vertex_cover
