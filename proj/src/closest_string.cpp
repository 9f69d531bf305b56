#include "enumfpt/closest_string.hpp"

#include <algorithm>

namespace enumfpt::closest_string {

namespace {

// Bounded search over suffixes. Invariant: if the node has a solution t, some
// solution is within `budget` flips of `candidate`. Each level flips one
// position of the candidate toward the first string whose residual it breaks;
// one of the first residual+1 mismatches must be right, so branching is at
// most k+1 and depth at most k.
bool search(const StringSet& set, std::size_t offset, const std::vector<std::int64_t>& residual,
            std::string& candidate, std::int64_t budget) {
  const std::size_t len = candidate.size();
  for (std::size_t j = 0; j < set.strings.size(); ++j) {
    const std::string& x = set.strings[j];
    std::vector<std::size_t> mismatches;
    for (std::size_t p = 0; p < len; ++p)
      if (candidate[p] != x[offset + p]) mismatches.push_back(p);
    const auto distance = static_cast<std::int64_t>(mismatches.size());
    if (distance <= residual[j]) continue;
    if (budget == 0 || distance > residual[j] + budget) return false;
    const auto branches = static_cast<std::size_t>(residual[j] + 1);
    for (std::size_t b = 0; b < branches; ++b) {
      const std::size_t p = mismatches[b];
      const char saved = candidate[p];
      candidate[p] = x[offset + p];
      const bool found = search(set, offset, residual, candidate, budget - 1);
      candidate[p] = saved;
      if (found) return true;
    }
    return false;
  }
  return true;
}

}  // namespace

PrefixNode PrefixNode::root(std::shared_ptr<const StringSet> strings, std::size_t k) {
  std::vector<std::int64_t> residual(strings->strings.size(), static_cast<std::int64_t>(k));
  return PrefixNode{std::move(strings), std::string(), std::move(residual)};
}

bool decide(const PrefixNode& node) {
  const StringSet& set = *node.strings;
  if (std::any_of(node.residual.begin(), node.residual.end(), [](auto r) { return r < 0; })) return false;
  const std::size_t offset = node.prefix.size();
  const std::size_t rest = set.length - offset;
  if (set.strings.empty()) return rest == 0 || !set.alphabet.empty();
  std::string candidate = set.strings.front().substr(offset);
  return search(set, offset, node.residual, candidate, node.residual.front());
}

std::vector<PrefixNode> split(const PrefixNode& node) {
  const StringSet& set = *node.strings;
  std::vector<PrefixNode> children;
  if (node.prefix.size() >= set.length) return children;
  const std::size_t pos = node.prefix.size();
  for (char sigma : set.alphabet) {
    PrefixNode child{node.strings, node.prefix + sigma, node.residual};
    for (std::size_t j = 0; j < set.strings.size(); ++j)
      if (set.strings[j][pos] != sigma) --child.residual[j];
    if (decide(child)) children.push_back(std::move(child));
  }
  return children;
}

std::size_t measure(const PrefixNode& node) { return node.strings->length - node.prefix.size(); }

SolutionStream leaf_enum(const PrefixNode& node) { return stream_of<Solution>({node.prefix}); }

FlashlightAdapter<PrefixNode> make_adapter(const StringSet& strings) {
  FlashlightAdapter<PrefixNode> adapter;
  adapter.split = split;
  adapter.measure = measure;
  adapter.leaf_enum = leaf_enum;
  adapter.has_solution = decide;
  adapter.measure_bound = strings.length;
  return adapter;
}

SolutionStream enumerate(std::shared_ptr<const StringSet> strings, std::size_t k, RunOptions options,
                         TraversalObserver observer) {
  auto adapter = make_adapter(*strings);
  return run_flashlight(std::move(adapter), PrefixNode::root(std::move(strings), k), options, std::move(observer));
}

}  // namespace enumfpt::closest_string
