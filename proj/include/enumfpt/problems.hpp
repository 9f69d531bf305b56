#pragma once

// One entry point over all six problems.

#include <cstddef>

#include "enumfpt/instances.hpp"
#include "enumfpt/schemes.hpp"

namespace enumfpt {

// `k` is ignored for ilp and steiner. Throws std::bad_variant_access if the
// instance does not match `kind`.
SolutionStream enumerate(ProblemKind kind, const Instance& instance, std::size_t k, RunOptions options = {});

}  // namespace enumfpt
