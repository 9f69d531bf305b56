#pragma once

// Generic runners for the five enumeration schemes. Each runner consumes a
// problem-agnostic adapter and returns a lazily evaluated, duplicate-free
// SolutionStream. All traversals keep their state on an explicit stack so a
// stream can be paused between any two pulls.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "enumfpt/errors.hpp"
#include "enumfpt/stream.hpp"

namespace enumfpt {

struct RunOptions {
  // Enables contract checks (breadth/depth bounds, flashlight soundness,
  // membership consistency, grow validity, global duplicate detection).
  bool verify = false;
};

// Optional hooks for instrumented runs. Unset members are ignored.
struct TraversalObserver {
  // A node with nonzero measure (or any node, for solution search) was split.
  std::function<void(std::size_t depth, std::size_t children)> on_expand;
  // A node was handed to its leaf enumerator.
  std::function<void(std::size_t depth)> on_leaf;
  // Solution search emitted the solution found at a node, either before or
  // after descending into its children.
  std::function<void(std::size_t depth, bool before_children)> on_output;
};

// Splitting f, measure gamma, leaf enumerator f0, breadth bound b(k) and depth
// bound h(k) of a bounded search tree partition algorithm.
template <class Node>
struct BoundedTreeAdapter {
  std::function<std::vector<Node>(const Node&)> split;
  std::function<std::size_t(const Node&)> measure;
  std::function<SolutionStream(const Node&)> leaf_enum;
  std::size_t breadth_bound = 0;
  std::size_t depth_bound = 0;
};

// Like BoundedTreeAdapter, but split() must only return children that have at
// least one solution. `has_solution` and `measure_bound` are only consulted in
// verification mode; leave them empty/zero to skip the corresponding check.
template <class Node>
struct FlashlightAdapter {
  std::function<std::vector<Node>(const Node&)> split;
  std::function<std::size_t(const Node&)> measure;
  std::function<SolutionStream(const Node&)> leaf_enum;
  std::function<bool(const Node&)> has_solution;
  std::size_t measure_bound = 0;
};

// g finds some solution of a node; f splits the node's remaining solutions
// (all but the found one) into disjoint children.
template <class Node, class Value>
struct SolutionSearchAdapter {
  std::function<std::optional<Value>(const Node&)> find_solution;
  std::function<std::vector<Node>(const Node&, const Value&)> split_excluding;
  std::function<Solution(const Value&)> encode;
};

// c, f and g of a union enumeration algorithm. The instance is bound into the
// closures; identifiers() is evaluated once, on the first pull.
template <class Id>
struct UnionSpec {
  std::function<std::vector<Id>()> identifiers;
  std::function<SolutionStream(const Id&)> stream_for;
  std::function<bool(const Id&, const Solution&)> member;
};

struct UnionObserver {
  // Every candidate pulled from stream `index`, and whether it was emitted
  // (true) or deferred to a later stream (false).
  std::function<void(std::size_t index, const Solution&, bool emitted)> on_candidate;
};

// Iterative compression over an instance made of `units` units. Prefix i is
// the sub-instance of the first i units.
//   initial()                      solution of the empty prefix
//   grow(i, k, S)                  S solves (prefix i, k); returns a solution
//                                  of (prefix i+1, k+1)
//   compress(i, k, S', emit_all)   S' solves (prefix i, k+1); streams the
//                                  solutions of (prefix i, k), all of them if
//                                  emit_all, otherwise at least the first
//   is_solution(i, k, S)           predicate used by verification mode only
template <class Sol>
struct CompressionSpec {
  std::size_t units = 0;
  std::function<Sol()> initial;
  std::function<Sol(std::size_t, std::size_t, const Sol&)> grow;
  std::function<Stream<Sol>(std::size_t, std::size_t, const Sol&, bool)> compress;
  std::function<bool(std::size_t, std::size_t, const Sol&)> is_solution;
  std::function<Solution(const Sol&)> encode;
};

namespace detail {

template <class Node>
struct PartitionCallbacks {
  std::function<std::vector<Node>(const Node&)> split;
  std::function<std::size_t(const Node&)> measure;
  std::function<SolutionStream(const Node&)> leaf_enum;
  std::function<bool(const Node&)> has_solution;
  std::size_t breadth_bound = 0;
  std::size_t depth_bound = 0;
  std::size_t measure_bound = 0;
};

// Depth-first traversal shared by the bounded-tree and flashlight runners.
template <class Node>
class PartitionSource final : public SolutionStream::Source {
 public:
  PartitionSource(PartitionCallbacks<Node> cb, Node root, RunOptions options, TraversalObserver observer)
      : cb_(std::move(cb)), options_(options), observer_(std::move(observer)) {
    stack_.push_back(Frame{std::move(root), 0, std::nullopt});
  }

  std::optional<Solution> next() override {
    for (;;) {
      if (leaf_) {
        if (auto s = leaf_->next()) {
          if (options_.verify && !seen_.insert(*s).second)
            throw ContractViolation("partition violated: solution '" + *s + "' produced by two leaves");
          return s;
        }
        leaf_.reset();
      }
      if (stack_.empty()) return std::nullopt;

      Frame& top = stack_.back();
      if (!top.expanded) {
        top.expanded = true;
        const std::size_t m = cb_.measure(top.node);
        if (top.parent_measure && m >= *top.parent_measure)
          throw MeasureViolation("measure " + std::to_string(m) + " at depth " + std::to_string(top.depth) +
                                 " does not drop below parent measure " + std::to_string(*top.parent_measure));
        if (options_.verify) check_node(top, m);
        if (m == 0) {
          if (observer_.on_leaf) observer_.on_leaf(top.depth);
          leaf_ = cb_.leaf_enum(top.node);
          stack_.pop_back();
          continue;
        }
        top.measure = m;
        top.children = cb_.split(top.node);
        if (options_.verify && cb_.breadth_bound != 0 && top.children.size() > cb_.breadth_bound)
          throw ContractViolation("split produced " + std::to_string(top.children.size()) +
                                  " children, breadth bound is " + std::to_string(cb_.breadth_bound));
        if (observer_.on_expand) observer_.on_expand(top.depth, top.children.size());
        continue;
      }
      if (top.cursor < top.children.size()) {
        Frame child{std::move(top.children[top.cursor]), top.depth + 1, top.measure};
        ++top.cursor;
        stack_.push_back(std::move(child));
        continue;
      }
      stack_.pop_back();
    }
  }

 private:
  struct Frame {
    Node node;
    std::size_t depth;
    std::optional<std::size_t> parent_measure;
    std::size_t measure = 0;
    std::vector<Node> children{};
    std::size_t cursor = 0;
    bool expanded = false;
  };

  void check_node(const Frame& frame, std::size_t m) const {
    if (cb_.depth_bound != 0 && frame.depth > cb_.depth_bound)
      throw ContractViolation("depth " + std::to_string(frame.depth) + " exceeds bound " +
                              std::to_string(cb_.depth_bound));
    if (cb_.measure_bound != 0 && m > cb_.measure_bound)
      throw ContractViolation("measure " + std::to_string(m) + " exceeds bound " +
                              std::to_string(cb_.measure_bound));
    // The root may legitimately be solution-free; every child must not be.
    if (frame.depth > 0 && cb_.has_solution && !cb_.has_solution(frame.node))
      throw ContractViolation("flashlight expanded a child without solutions at depth " +
                              std::to_string(frame.depth));
  }

  PartitionCallbacks<Node> cb_;
  RunOptions options_;
  TraversalObserver observer_;
  std::vector<Frame> stack_;
  std::optional<SolutionStream> leaf_;
  std::unordered_set<Solution> seen_;
};

template <class Node, class Value>
class SolutionSearchSource final : public SolutionStream::Source {
 public:
  SolutionSearchSource(SolutionSearchAdapter<Node, Value> adapter, Node root, RunOptions options,
                       TraversalObserver observer)
      : adapter_(std::move(adapter)), options_(options), observer_(std::move(observer)) {
    stack_.push_back(Frame{std::move(root), 0});
  }

  std::optional<Solution> next() override {
    for (;;) {
      if (stack_.empty()) return std::nullopt;
      Frame& top = stack_.back();
      if (!top.expanded) {
        top.expanded = true;
        auto found = adapter_.find_solution(top.node);
        if (!found) {
          stack_.pop_back();
          continue;
        }
        top.children = adapter_.split_excluding(top.node, *found);
        if (observer_.on_expand) observer_.on_expand(top.depth, top.children.size());
        // Alternating output: even depths report before their subtree, odd
        // depths after it, so no stretch of backtracking runs without output.
        if (top.depth % 2 == 0) {
          if (observer_.on_output) observer_.on_output(top.depth, true);
          return emit(*found);
        }
        top.found = std::move(found);
        continue;
      }
      if (top.cursor < top.children.size()) {
        Frame child{std::move(top.children[top.cursor]), top.depth + 1};
        ++top.cursor;
        stack_.push_back(std::move(child));
        continue;
      }
      std::optional<Value> found = std::move(top.found);
      const std::size_t depth = top.depth;
      stack_.pop_back();
      if (found) {
        if (observer_.on_output) observer_.on_output(depth, false);
        return emit(*found);
      }
    }
  }

 private:
  struct Frame {
    Node node;
    std::size_t depth;
    std::optional<Value> found{};
    std::vector<Node> children{};
    std::size_t cursor = 0;
    bool expanded = false;
  };

  Solution emit(const Value& value) {
    Solution s = adapter_.encode(value);
    if (options_.verify && !seen_.insert(s).second)
      throw ContractViolation("split_excluding is not a partition: '" + s + "' found twice");
    return s;
  }

  SolutionSearchAdapter<Node, Value> adapter_;
  RunOptions options_;
  TraversalObserver observer_;
  std::vector<Frame> stack_;
  std::unordered_set<Solution> seen_;
};

template <class Id>
class UnionSource final : public SolutionStream::Source {
 public:
  UnionSource(UnionSpec<Id> spec, RunOptions options, UnionObserver observer)
      : spec_(std::move(spec)), options_(options), observer_(std::move(observer)) {}

  std::optional<Solution> next() override {
    if (!initialized_) initialize();
    for (;;) {
      bool pulled = false;
      // One round: walk the streams in order until some candidate is not
      // claimed by any later stream.
      for (std::size_t i = 0; i < streams_.size(); ++i) {
        if (done_[i]) continue;
        auto candidate = streams_[i].next();
        if (!candidate) {
          done_[i] = true;
          continue;
        }
        pulled = true;
        if (options_.verify && !spec_.member(ids_[i], *candidate))
          throw MembershipContradiction("stream " + std::to_string(i) + " yielded '" + *candidate +
                                        "' but member() rejects it");
        if (claimed_later(i, *candidate)) {
          if (observer_.on_candidate) observer_.on_candidate(i, *candidate, false);
          if (options_.verify) deferred_.insert(*candidate);
          continue;
        }
        if (observer_.on_candidate) observer_.on_candidate(i, *candidate, true);
        if (options_.verify && !emitted_.insert(*candidate).second)
          throw MembershipContradiction("'" + *candidate + "' emitted twice");
        return candidate;
      }
      if (!pulled) break;
    }
    if (options_.verify) {
      for (const auto& s : deferred_)
        if (!emitted_.contains(s))
          throw MembershipContradiction("deferred solution '" + s + "' was never emitted by a later stream");
    }
    return std::nullopt;
  }

 private:
  void initialize() {
    initialized_ = true;
    ids_ = spec_.identifiers();
    streams_.reserve(ids_.size());
    for (const auto& id : ids_) streams_.push_back(spec_.stream_for(id));
    done_.assign(ids_.size(), false);
  }

  // Probes later identifiers in ascending order.
  bool claimed_later(std::size_t i, const Solution& s) const {
    for (std::size_t j = i + 1; j < ids_.size(); ++j)
      if (spec_.member(ids_[j], s)) return true;
    return false;
  }

  UnionSpec<Id> spec_;
  RunOptions options_;
  UnionObserver observer_;
  bool initialized_ = false;
  std::vector<Id> ids_;
  std::vector<SolutionStream> streams_;
  std::vector<bool> done_;
  std::unordered_set<Solution> deferred_;
  std::unordered_set<Solution> emitted_;
};

template <class Sol>
class CompressionSource final : public SolutionStream::Source {
 public:
  CompressionSource(CompressionSpec<Sol> spec, std::size_t k, RunOptions options)
      : spec_(std::move(spec)), k_(k), options_(options) {}

  std::optional<Solution> next() override {
    if (!started_) {
      started_ = true;
      build_final();
    }
    if (!final_) return std::nullopt;
    auto s = final_->next();
    if (!s) {
      final_.reset();
      return std::nullopt;
    }
    if (options_.verify && spec_.is_solution && !spec_.is_solution(spec_.units, k_, *s))
      throw ContractViolation("compress produced a non-solution");
    Solution encoded = spec_.encode(*s);
    if (options_.verify && !seen_.insert(encoded).second)
      throw ContractViolation("compress produced '" + encoded + "' twice");
    return encoded;
  }

 private:
  // Grows the instance one unit at a time, keeping only the first compressed
  // solution of every intermediate prefix.
  void build_final() {
    Sol current = spec_.initial();
    if (spec_.units == 0) {
      final_ = spec_.compress(0, k_, current, true);
      return;
    }
    for (std::size_t i = 0; i < spec_.units; ++i) {
      Sol oversized = spec_.grow(i, k_, current);
      if (options_.verify && spec_.is_solution && !spec_.is_solution(i + 1, k_ + 1, oversized))
        throw GrowContractViolation("grow output is not a solution of prefix " + std::to_string(i + 1) +
                                    " at parameter k+1");
      const bool last = i + 1 == spec_.units;
      if (last) {
        final_ = spec_.compress(i + 1, k_, oversized, true);
        return;
      }
      auto first = spec_.compress(i + 1, k_, oversized, false).next();
      // A prefix without solutions rules out the whole instance.
      if (!first) return;
      current = std::move(*first);
    }
  }

  CompressionSpec<Sol> spec_;
  std::size_t k_;
  RunOptions options_;
  bool started_ = false;
  std::optional<Stream<Sol>> final_;
  std::unordered_set<Solution> seen_;
};

}  // namespace detail

template <class Node>
SolutionStream run_bounded_tree(BoundedTreeAdapter<Node> adapter, Node root, RunOptions options = {},
                                TraversalObserver observer = {}) {
  detail::PartitionCallbacks<Node> cb{std::move(adapter.split), std::move(adapter.measure),
                                      std::move(adapter.leaf_enum), {}, adapter.breadth_bound,
                                      adapter.depth_bound, adapter.depth_bound};
  return SolutionStream(std::make_unique<detail::PartitionSource<Node>>(std::move(cb), std::move(root), options,
                                                                        std::move(observer)));
}

template <class Node>
SolutionStream run_flashlight(FlashlightAdapter<Node> adapter, Node root, RunOptions options = {},
                              TraversalObserver observer = {}) {
  detail::PartitionCallbacks<Node> cb{std::move(adapter.split), std::move(adapter.measure),
                                      std::move(adapter.leaf_enum), std::move(adapter.has_solution), 0, 0,
                                      adapter.measure_bound};
  return SolutionStream(std::make_unique<detail::PartitionSource<Node>>(std::move(cb), std::move(root), options,
                                                                        std::move(observer)));
}

template <class Node, class Value>
SolutionStream run_solution_search(SolutionSearchAdapter<Node, Value> adapter, Node root, RunOptions options = {},
                                   TraversalObserver observer = {}) {
  return SolutionStream(std::make_unique<detail::SolutionSearchSource<Node, Value>>(
      std::move(adapter), std::move(root), options, std::move(observer)));
}

template <class Id>
SolutionStream run_union(UnionSpec<Id> spec, RunOptions options = {}, UnionObserver observer = {}) {
  return SolutionStream(std::make_unique<detail::UnionSource<Id>>(std::move(spec), options, std::move(observer)));
}

template <class Sol>
SolutionStream run_iterative_compression(CompressionSpec<Sol> spec, std::size_t k, RunOptions options = {}) {
  return SolutionStream(std::make_unique<detail::CompressionSource<Sol>>(std::move(spec), k, options));
}

}  // namespace enumfpt
