#pragma once

// Center strings within Hamming distance k of every input string, enumerated
// with a flashlight search over prefixes.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "enumfpt/instances.hpp"
#include "enumfpt/schemes.hpp"

namespace enumfpt::closest_string {

struct PrefixNode {
  std::shared_ptr<const StringSet> strings;
  std::string prefix;
  // residual[j] = k - d_H(prefix, strings[j][0 .. |prefix|)); may go negative.
  std::vector<std::int64_t> residual;

  static PrefixNode root(std::shared_ptr<const StringSet> strings, std::size_t k);
};

// Is there a completion of the prefix within every residual budget?
bool decide(const PrefixNode& node);

std::vector<PrefixNode> split(const PrefixNode& node);
std::size_t measure(const PrefixNode& node);
SolutionStream leaf_enum(const PrefixNode& node);

FlashlightAdapter<PrefixNode> make_adapter(const StringSet& strings);

SolutionStream enumerate(std::shared_ptr<const StringSet> strings, std::size_t k, RunOptions options = {},
                         TraversalObserver observer = {});

}  // namespace enumfpt::closest_string
