#pragma once

// Exhaustive reference enumerators. They test every candidate against the
// defining predicate of each problem and share nothing with the scheme
// adapters beyond instance types and canonical encodings.

#include <cstddef>
#include <cstdint>
#include <set>

#include "enumfpt/instances.hpp"

namespace enumfpt::oracle {

inline constexpr std::uint64_t kCandidateLimit = 10'000'000;

// All solutions of (instance, k). `k` is ignored for ilp (the parameter is
// the variable count) and for steiner (minimum-weight trees only).
// Throws TooLarge when the candidate space exceeds kCandidateLimit.
std::set<Solution> brute_force(const Instance& instance, ProblemKind kind, std::size_t k);

}  // namespace enumfpt::oracle
