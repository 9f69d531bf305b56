#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "enumfpt/errors.hpp"
#include "enumfpt/harness.hpp"
#include "enumfpt/longest_path.hpp"
#include "enumfpt/problems.hpp"

using namespace enumfpt;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitContract = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ENUMFPT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric ENUMFPT_SEED\n";
    }
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvariantError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool needs_k(ProblemKind kind) { return kind != ProblemKind::ilp && kind != ProblemKind::steiner; }

struct SolveArgs {
  std::string problem;
  std::string input;
  std::optional<std::size_t> k;
  std::optional<std::size_t> limit;
  std::string format = "lines";
  std::string stats;
  bool verify = false;
  bool family_size_report = false;
};

int cmd_solve(const SolveArgs& args) {
  const ProblemKind kind = parse_problem_kind(args.problem);
  if (needs_k(kind) && !args.k) throw InvariantError("--k is required for " + args.problem);
  const std::size_t k = args.k.value_or(0);
  const Instance instance = parse_instance(read_file(args.input), kind);

  if (args.family_size_report && kind == ProblemKind::longest_path) {
    const auto& g = std::get<Graph>(instance);
    std::cerr << "hash family: " << longest_path::build_hash_family(g.size(), static_cast<int>(k)).colorings.size()
              << " colorings for n=" << g.size() << " k=" << k << "\n";
  }

  auto stream = enumerate(kind, instance, k, RunOptions{args.verify});
  const bool ndjson = args.format == "ndjson";
  std::size_t index = 0;
  const auto report = harness::measure(stream, args.limit, [&](const Solution& s, std::int64_t delay) {
    if (ndjson)
      std::cout << nlohmann::json{{"solution", s}, {"index", index}, {"delay_ns", delay}}.dump() << '\n';
    else
      std::cout << s << '\n';
    std::cout.flush();
    ++index;
  });

  if (!args.stats.empty()) {
    std::ofstream out(args.stats);
    if (!out) throw InvariantError("cannot write " + args.stats);
    nlohmann::json params = {{"input", args.input}, {"k", k}};
    if (args.limit) params["limit"] = *args.limit;
    auto j = harness::report_json(kind, 0, params, report, true);
    j["post_last_ns"] = report.post_last_ns;
    j["timestamps_ns"] = report.timestamps;
    out << j.dump(2) << '\n';
  }
  return 0;
}

struct CheckArgs {
  std::string problem;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::optional<int> max_n;
  std::optional<int> max_k;
  std::string bundle = "enumfpt-mismatch.json";
  bool corrupt = false;
};

int cmd_check(const CheckArgs& args) {
  const ProblemKind kind = parse_problem_kind(args.problem);
  auto params = harness::default_params(kind);
  if (args.max_n) params.max_n = *args.max_n;
  if (args.max_k) params.max_k = *args.max_k;

  harness::Enumerator enumerator;
  if (args.corrupt) {
    // Self-test fixture: repeats the first solution of every trial.
    enumerator = [](ProblemKind kd, const Instance& inst, std::size_t k) {
      auto all = drain(enumerate(kd, inst, k));
      if (!all.empty()) all.push_back(all.front());
      return stream_of(std::move(all));
    };
  }
  const auto report = harness::equivalence_suite(kind, args.trials, params, args.seed, enumerator);
  nlohmann::json summary = {{"problem", args.problem}, {"seed", args.seed},         {"params", harness::params_json(params)},
                            {"trials", report.trials}, {"solutions", report.solutions}, {"pass", report.pass()}};
  std::cout << summary.dump() << '\n';
  if (report.pass()) return 0;

  std::ofstream out(args.bundle);
  out << harness::mismatch_json(kind, *report.mismatch).dump(2) << '\n';
  std::cerr << "mismatch in trial " << report.mismatch->trial << ", reproduction bundle written to " << args.bundle
            << "\n";
  return kExitMismatch;
}

struct BenchArgs {
  std::string problem = "vertex-cover";
  std::string family = "matching";
  std::string range = "4..14";
  std::uint64_t seed = 1;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvariantError("range must look like 4..14");
  }
}

int cmd_bench(const BenchArgs& args) {
  const ProblemKind kind = parse_problem_kind(args.problem);
  if (args.family != "matching") throw InvariantError("unknown family '" + args.family + "'");
  if (kind != ProblemKind::vertex_cover) throw InvariantError("the matching family is a vertex-cover benchmark");
  const auto [lo, hi] = parse_range(args.range);
  if (lo < 0 || hi < lo || hi > 30) throw InvariantError("range must satisfy 0 <= lo <= hi <= 30");
  for (int m = lo; m <= hi; ++m) {
    const Instance instance = harness::matching_graph(m);
    auto stream = enumerate(kind, instance, static_cast<std::size_t>(m));
    const auto report = harness::measure(stream);
    const bool pass = report.count == (std::size_t{1} << m);
    std::cout << harness::report_json(kind, args.seed, {{"family", "matching"}, {"m", m}, {"k", m}}, report, pass)
                     .dump()
              << std::endl;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate all solutions of parameterized problems with bounded delay"};
  app.require_subcommand(1);
  const std::string problems = "fvst, closest-string, ilp, longest-path, vertex-cover, steiner";

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Stream every solution of one instance");
  solve_cmd->add_option("--problem", solve.problem, problems)->required();
  solve_cmd->add_option("--input", solve.input, "Instance file")->required();
  solve_cmd->add_option("--k", solve.k, "Parameter (ignored for ilp and steiner)");
  solve_cmd->add_option("--limit", solve.limit, "Stop after this many solutions");
  solve_cmd->add_option("--format", solve.format, "lines or ndjson")->check(CLI::IsMember({"lines", "ndjson"}));
  solve_cmd->add_option("--stats", solve.stats, "Write the delay report to this file");
  solve_cmd->add_flag("--verify", solve.verify, "Check scheme contracts while enumerating");
  solve_cmd->add_flag("--family-size-report", solve.family_size_report,
                      "Longest path: print the hash family size to stderr");

  CheckArgs check;
  check.seed = default_seed();
  auto* check_cmd = app.add_subcommand("check", "Compare against exhaustive search on random instances");
  check_cmd->add_option("--problem", check.problem, problems)->required();
  check_cmd->add_option("--trials", check.trials, "Number of random instances")->capture_default_str();
  check_cmd->add_option("--seed", check.seed, "Seed of the first trial (default: $ENUMFPT_SEED or 1)");
  check_cmd->add_option("--max-n", check.max_n, "Upper bound on instance size");
  check_cmd->add_option("--max-k", check.max_k, "Upper bound on the parameter");
  check_cmd->add_option("--bundle", check.bundle, "Where to write the reproduction bundle")->capture_default_str();
  check_cmd->add_flag("--corrupt", check.corrupt, "Self-test with an enumerator that repeats a solution");

  BenchArgs bench;
  bench.seed = default_seed();
  auto* bench_cmd = app.add_subcommand("bench", "Delay reports over an instance family, one JSON line per size");
  bench_cmd->add_option("--problem", bench.problem, problems)->capture_default_str();
  bench_cmd->add_option("--family", bench.family, "Instance family (matching)")->capture_default_str();
  bench_cmd->add_option("--range", bench.range, "Size range lo..hi")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Recorded in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*check_cmd) return cmd_check(check);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const ContractViolation& e) {
    std::cout.flush();
    std::cerr << "contract violation: " << e.what() << "\n";
    return kExitContract;
  } catch (const UnboundedInstance& e) {
    std::cerr << "UnboundedInstance: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DisconnectedTerminals& e) {
    std::cerr << "DisconnectedTerminals: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TooLarge& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
