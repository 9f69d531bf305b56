#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded.
Result run(const std::string& args) {
  const std::string cmd = std::string(ENUMFPT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("enumfpt-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("solve") {
  const auto edge = file("edge.txt", "graph 2 1\n1 2\n");
  auto r = run("solve --problem vertex-cover --input " + edge + " --k 1");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n2\n");

  const auto t3 = file("t3.txt", "tournament 3\n1 2\n2 3\n3 1\n");
  r = run("solve --problem fvst --input " + t3 + " --k 0");
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  r = run("solve --problem fvst --input " + t3 + " --k 1 --limit 2 --verify");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("solve: ndjson and stats") {
  const auto t3 = file("t3.txt", "tournament 3\n1 2\n2 3\n3 1\n");
  const auto stats = (scratch() / "stats.json").string();
  auto r = run("solve --problem fvst --input " + t3 + " --k 1 --format ndjson --stats " + stats);
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t index = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["index"] == index++);
    CHECK(j.contains("solution"));
    CHECK(j["delay_ns"].get<long long>() >= 0);
  }
  CHECK(index == 3);
  std::ifstream in(stats);
  auto j = nlohmann::json::parse(in);
  CHECK(j["count"] == 3);
  CHECK(j["max_ns"].get<long long>() >= j["mean_ns"].get<long long>());
}

TEST_CASE("solve: input errors exit with 2") {
  const auto unbox = file("unbox.txt", "ilp 1 0\n");
  CHECK(run("solve --problem ilp --input " + unbox + " --k 1").code == 2);
  const auto bad = file("bad.txt", "graph 2 1\n1 x\n");
  CHECK(run("solve --problem vertex-cover --input " + bad + " --k 1").code == 2);
  const auto disconnected = file("dis.txt", "wgraph 4 2\n1 2 1\n3 4 1\nterminals 2\n1 4\n");
  CHECK(run("solve --problem steiner --input " + disconnected).code == 2);
  CHECK(run("solve --problem nope --input " + bad + " --k 1").code == 2);
  CHECK(run("solve --problem fvst").code == 2);
  CHECK(run("solve --problem vertex-cover --input " + (scratch() / "missing.txt").string() + " --k 1").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("solve: steiner two routes") {
  const auto g = file("two.txt", "wgraph 5 5\n1 2 1\n2 3 2\n3 4 1\n2 5 1\n5 3 1\nterminals 2\n1 4\n");
  auto r = run("solve --problem steiner --input " + g + " --verify");
  CHECK(r.code == 0);
  CHECK(r.out == "1 2,2 3,3 4\n1 2,2 5,3 4,3 5\n");
}

TEST_CASE("check") {
  CHECK(run("check --problem closest-string --trials 50 --seed 7").code == 0);
  CHECK(run("check --problem steiner --trials 50 --seed 7").code == 0);
  const auto bundle = (scratch() / "bundle.json").string();
  CHECK(run("check --problem fvst --trials 5 --corrupt --bundle " + bundle).code == 1);
  std::ifstream in(bundle);
  auto j = nlohmann::json::parse(in);
  CHECK(j["duplicates"].size() == 1);
  CHECK_FALSE(j["instance"].get<std::string>().empty());
}

TEST_CASE("bench") {
  auto r = run("bench --problem vertex-cover --family matching --range 4..5");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(nlohmann::json::parse(line)["count"] == 16);
  std::getline(lines, line);
  CHECK(nlohmann::json::parse(line)["count"] == 32);
  CHECK(run("bench --problem vertex-cover --family nope --range 4..5").code == 2);
}

TEST_CASE("ENUMFPT_SEED sets the default seed") {
  auto r = run("check --problem ilp --trials 3");
  CHECK(nlohmann::json::parse(r.out)["seed"] == 1);
  const std::string cmd = std::string("ENUMFPT_SEED=42 ") + ENUMFPT_CLI_PATH + " check --problem ilp --trials 3";
  FILE* pipe = popen(cmd.c_str(), "r");
  char buf[4096];
  std::string out;
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  CHECK(nlohmann::json::parse(out)["seed"] == 42);
}
