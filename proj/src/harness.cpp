#include "enumfpt/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "enumfpt/errors.hpp"
#include "enumfpt/oracle.hpp"
#include "enumfpt/problems.hpp"

namespace enumfpt::harness {

DelayReport measure(SolutionStream& stream, std::optional<std::size_t> limit,
                    const std::function<void(const Solution&, std::int64_t)>& on_solution) {
  using Clock = std::chrono::steady_clock;
  DelayReport report;
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count(); };
  std::int64_t excluded = 0;  // time spent in on_solution
  std::int64_t previous = 0;
  for (;;) {
    if (limit && report.count == *limit) break;
    auto s = stream.next();
    const std::int64_t now = elapsed() - excluded;
    const std::int64_t delay = now - previous;
    report.max_ns = std::max(report.max_ns, delay);
    previous = now;
    if (!s) {
      report.post_last_ns = delay;
      break;
    }
    if (report.count == 0) report.first_ns = delay;
    ++report.count;
    report.timestamps.push_back(now);
    if (on_solution) {
      const std::int64_t before = elapsed();
      on_solution(*s, delay);
      excluded += elapsed() - before;
    }
  }
  report.total_ns = previous;
  const auto intervals = static_cast<std::int64_t>(report.count + 1);
  report.mean_ns = report.total_ns / intervals;
  return report;
}

SizeParams default_params(ProblemKind kind) {
  SizeParams p;
  switch (kind) {
    case ProblemKind::fvst:
      p.max_n = 7;
      p.max_k = 3;
      break;
    case ProblemKind::closest_string:
      p.max_n = 4;
      p.max_length = 6;
      p.max_alphabet = 3;
      break;
    case ProblemKind::ilp:
      p.max_k = 3;
      p.max_width = 8;
      p.max_rows = 5;
      break;
    case ProblemKind::longest_path:
      p.max_n = 8;
      p.max_k = 4;
      p.density = 0.45;
      break;
    case ProblemKind::vertex_cover:
      p.max_n = 8;
      p.max_k = -1;
      p.density = 0.3;
      break;
    case ProblemKind::steiner:
      p.max_n = 9;
      p.max_terminals = 4;
      p.max_weight = 3;
      p.density = 0.3;
      break;
  }
  return p;
}

nlohmann::json params_json(const SizeParams& p) {
  return {{"max_n", p.max_n},         {"max_k", p.max_k},         {"max_length", p.max_length},
          {"max_alphabet", p.max_alphabet}, {"max_width", p.max_width}, {"max_rows", p.max_rows},
          {"max_terminals", p.max_terminals}, {"max_weight", p.max_weight}, {"density", p.density}};
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Graph random_graph(std::mt19937_64& rng, int n, double density) {
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (coin(rng, density)) g.add_edge(u, v);
  return g;
}

// Random spanning tree plus extra edges, so the terminals are always
// connected.
Graph random_connected_weighted(std::mt19937_64& rng, int n, double density, int max_weight) {
  Graph g(n);
  g.set_weighted(true);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) g.add_edge(order[i], order[uniform(rng, 0, i - 1)], uniform(rng, 1, max_weight));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (!g.adjacent(u, v) && coin(rng, density)) g.add_edge(u, v, uniform(rng, 1, max_weight));
  return g;
}

}  // namespace

Generated generate(ProblemKind kind, const SizeParams& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (kind) {
    case ProblemKind::fvst: {
      const int n = uniform(rng, 1, p.max_n);
      auto t = Tournament::from_predicate(n, [&](Vertex, Vertex) { return coin(rng, 0.5); });
      return {std::move(t), static_cast<std::size_t>(uniform(rng, 0, p.max_k))};
    }
    case ProblemKind::closest_string: {
      StringSet x;
      x.alphabet = std::string("abcdefgh").substr(0, static_cast<std::size_t>(uniform(rng, 1, p.max_alphabet)));
      x.length = static_cast<std::size_t>(uniform(rng, 1, p.max_length));
      const int count = uniform(rng, 1, p.max_n);
      for (int i = 0; i < count; ++i) {
        std::string s(x.length, ' ');
        for (auto& c : s) c = x.alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(x.alphabet.size()) - 1))];
        x.strings.push_back(std::move(s));
      }
      const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(x.length)));
      return {std::move(x), k};
    }
    case ProblemKind::ilp: {
      IlpSystem system;
      system.k = static_cast<std::size_t>(uniform(rng, 1, p.max_k));
      for (std::size_t i = 0; i < system.k; ++i) {
        const int lo = uniform(rng, -3, 3);
        const int width = uniform(rng, 1, p.max_width);
        system.box.push_back(Bounds{lo, lo + width - 1});
      }
      const int rows = uniform(rng, 0, p.max_rows);
      for (int r = 0; r < rows; ++r) {
        IlpRow row;
        for (std::size_t i = 0; i < system.k; ++i) row.coefficients.push_back(uniform(rng, -3, 3));
        row.bound = uniform(rng, -4, 12);
        system.rows.push_back(std::move(row));
      }
      const std::size_t k = system.k;
      return {std::move(system), k};
    }
    case ProblemKind::longest_path: {
      const int n = uniform(rng, 1, p.max_n);
      auto g = random_graph(rng, n, p.density);
      return {std::move(g), static_cast<std::size_t>(uniform(rng, 1, p.max_k))};
    }
    case ProblemKind::vertex_cover: {
      const int n = uniform(rng, 1, p.max_n);
      auto g = random_graph(rng, n, p.density);
      const int max_k = p.max_k < 0 ? n : std::min(p.max_k, n);
      return {std::move(g), static_cast<std::size_t>(uniform(rng, 0, max_k))};
    }
    case ProblemKind::steiner: {
      const int n = uniform(rng, 1, p.max_n);
      auto g = random_connected_weighted(rng, n, p.density, p.max_weight);
      std::vector<Vertex> vertices(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) vertices[i] = i + 1;
      std::shuffle(vertices.begin(), vertices.end(), rng);
      vertices.resize(static_cast<std::size_t>(uniform(rng, 1, std::min(n, p.max_terminals))));
      std::sort(vertices.begin(), vertices.end());
      g.set_terminals(std::move(vertices));
      return {std::move(g), 0};
    }
  }
  throw InvariantError("unknown problem kind");
}

Graph matching_graph(int m) {
  Graph g(2 * m);
  for (int i = 1; i <= m; ++i) g.add_edge(2 * i - 1, 2 * i);
  return g;
}

SuiteReport equivalence_suite(ProblemKind kind, std::size_t trials, const SizeParams& params, std::uint64_t seed,
                              Enumerator enumerator) {
  if (!enumerator)
    enumerator = [](ProblemKind kd, const Instance& inst, std::size_t k) {
      return enumerate(kd, inst, k, RunOptions{true});
    };
  SuiteReport report;
  report.kind = kind;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = seed + trial;
    const Generated gen = generate(kind, params, trial_seed);
    const std::set<Solution> expected = oracle::brute_force(gen.instance, kind, gen.k);
    Mismatch m;
    m.trial = trial;
    m.seed = trial_seed;
    m.k = gen.k;
    std::map<Solution, std::size_t> produced;
    try {
      auto stream = enumerator(kind, gen.instance, gen.k);
      while (auto s = stream.next()) ++produced[*s];
    } catch (const std::exception& e) {
      m.error = e.what();
    }
    for (const auto& [s, count] : produced) {
      if (count > 1) m.duplicates.push_back(s);
      if (!expected.contains(s)) m.extraneous.push_back(s);
    }
    for (const auto& s : expected)
      if (!produced.contains(s)) m.missing.push_back(s);
    ++report.trials;
    report.solutions += produced.size();
    if (!m.error.empty() || !m.duplicates.empty() || !m.extraneous.empty() || !m.missing.empty()) {
      m.instance_text = write_instance(gen.instance);
      report.mismatch = std::move(m);
      break;
    }
  }
  return report;
}

nlohmann::json mismatch_json(ProblemKind kind, const Mismatch& m) {
  return {{"problem", std::string(problem_tag(kind))},
          {"trial", m.trial},
          {"seed", m.seed},
          {"k", m.k},
          {"instance", m.instance_text},
          {"missing", m.missing},
          {"duplicates", m.duplicates},
          {"extraneous", m.extraneous},
          {"error", m.error}};
}

nlohmann::json report_json(ProblemKind kind, std::uint64_t seed, const nlohmann::json& params,
                           const DelayReport& report, bool pass) {
  return {{"problem", std::string(problem_tag(kind))},
          {"seed", seed},
          {"params", params},
          {"count", report.count},
          {"first_ns", report.first_ns},
          {"max_ns", report.max_ns},
          {"mean_ns", report.mean_ns},
          {"pass", pass}};
}

}  // namespace enumfpt::harness
