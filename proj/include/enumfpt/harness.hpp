#pragma once

// Delay measurement, seeded instance generation and the oracle equivalence
// driver.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "enumfpt/instances.hpp"
#include "enumfpt/schemes.hpp"

namespace enumfpt::harness {

// All durations in nanoseconds. The delay intervals are: start to first
// solution, between consecutive solutions, and last solution to exhaustion.
struct DelayReport {
  std::size_t count = 0;
  std::int64_t first_ns = 0;
  std::int64_t max_ns = 0;
  std::int64_t mean_ns = 0;
  std::int64_t post_last_ns = 0;
  std::int64_t total_ns = 0;
  std::vector<std::int64_t> timestamps;  // offsets from start, one per solution
};

// Pulls the stream to exhaustion (or `limit` solutions) and times every pull.
// on_solution, if set, runs outside the timed region.
DelayReport measure(SolutionStream& stream, std::optional<std::size_t> limit = std::nullopt,
                    const std::function<void(const Solution&, std::int64_t delay_ns)>& on_solution = {});

// Upper bounds for random instances. Every concrete size is drawn uniformly
// from [min, max]; unused fields are ignored by a kind.
struct SizeParams {
  int max_n = 7;           // vertices, or strings for closest-string
  int max_k = 3;           // parameter (vertex-cover: up to n if negative)
  int max_length = 6;      // closest-string L
  int max_alphabet = 3;    // closest-string |Sigma|
  int max_width = 8;       // ilp box width
  int max_rows = 5;        // ilp rows
  int max_terminals = 4;   // steiner |K|
  int max_weight = 3;      // steiner edge weights
  double density = 0.4;    // edge probability for graphs
};

// The bounds used by the acceptance suite for each problem.
SizeParams default_params(ProblemKind kind);
nlohmann::json params_json(const SizeParams& params);

struct Generated {
  Instance instance;
  std::size_t k = 0;
};

// Deterministic in (kind, params, seed).
Generated generate(ProblemKind kind, const SizeParams& params, std::uint64_t seed);

// Perfect matching on 2m vertices: edges {2i-1, 2i}.
Graph matching_graph(int m);

using Enumerator = std::function<SolutionStream(ProblemKind, const Instance&, std::size_t k)>;

struct Mismatch {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  std::string instance_text;
  std::vector<Solution> missing;
  std::vector<Solution> duplicates;
  std::vector<Solution> extraneous;
  std::string error;  // exception raised by the enumerator, if any
};

struct SuiteReport {
  ProblemKind kind{};
  std::size_t trials = 0;
  std::size_t solutions = 0;  // total over all trials
  std::optional<Mismatch> mismatch;

  bool pass() const noexcept { return !mismatch; }
};

// Trial i uses seed + i. Stops at the first mismatch. The default enumerator
// is the library's, run in verification mode.
SuiteReport equivalence_suite(ProblemKind kind, std::size_t trials, const SizeParams& params, std::uint64_t seed,
                              Enumerator enumerator = {});

nlohmann::json mismatch_json(ProblemKind kind, const Mismatch& m);

// {problem, seed, params, count, first_ns, max_ns, mean_ns, pass}
nlohmann::json report_json(ProblemKind kind, std::uint64_t seed, const nlohmann::json& params,
                           const DelayReport& report, bool pass);

}  // namespace enumfpt::harness
