#include "doctest.h"
#include "enumfpt/errors.hpp"
#include "enumfpt/oracle.hpp"
#include "helpers.hpp"

using namespace enumfpt;
using oracle::brute_force;

TEST_CASE("examples") {
  CHECK(brute_force(testutil::cycle3(), ProblemKind::fvst, 1) == std::set<Solution>{"1", "2", "3"});
  CHECK(brute_force(testutil::graph(2, {{1, 2}}), ProblemKind::vertex_cover, 1) == std::set<Solution>{"1", "2"});
  Graph path = testutil::graph(3, {{1, 2}, {2, 3}});
  path.set_terminals({1, 3});
  CHECK(brute_force(path, ProblemKind::steiner, 0) == std::set<Solution>{"1 2,2 3"});
}

TEST_CASE("definitions at the boundaries") {
  CHECK(brute_force(testutil::transitive(4), ProblemKind::fvst, 0) == std::set<Solution>{""});
  CHECK(brute_force(Tournament(0), ProblemKind::fvst, 2) == std::set<Solution>{""});
  StringSet s{"ab", {"ab", "ba"}, 2};
  CHECK(brute_force(s, ProblemKind::closest_string, 1) == std::set<Solution>{"aa", "bb"});
  IlpSystem sys;
  sys.k = 2;
  sys.box = {Bounds{0, 1}, Bounds{0, 1}};
  sys.rows = {IlpRow{{1, 1}, 1}};
  CHECK(brute_force(sys, ProblemKind::ilp, 0) == std::set<Solution>{"0 0", "0 1", "1 0"});
  sys.box[1] = Bounds{1, 0};
  CHECK(brute_force(sys, ProblemKind::ilp, 0).empty());
  const Graph c4 = testutil::graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(brute_force(c4, ProblemKind::longest_path, 3).size() == 4);
  CHECK(brute_force(c4, ProblemKind::longest_path, 4).size() == 4);
  CHECK(brute_force(c4, ProblemKind::longest_path, 0).empty());
  CHECK(brute_force(c4, ProblemKind::longest_path, 5).empty());
  Graph single = c4;
  single.set_terminals({3});
  CHECK(brute_force(single, ProblemKind::steiner, 0) == std::set<Solution>{""});
}

TEST_CASE("minimum trees only, ties kept") {
  Graph g(4);
  g.set_weighted(true);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 4, 1);
  g.add_edge(1, 3, 1);
  g.add_edge(3, 4, 1);
  g.add_edge(1, 4, 3);
  g.set_terminals({1, 4});
  CHECK(brute_force(g, ProblemKind::steiner, 0) == std::set<Solution>{"1 2,2 4", "1 3,3 4"});
}

TEST_CASE("refuses search spaces beyond the guard") {
  CHECK_THROWS_AS(brute_force(Graph(60), ProblemKind::vertex_cover, 10), TooLarge);
  CHECK_THROWS_AS(brute_force(Tournament::from_predicate(40, [](int, int) { return true; }), ProblemKind::fvst, 8),
                  TooLarge);
  StringSet wide{"abcd", {std::string(20, 'a')}, 20};
  CHECK_THROWS_AS(brute_force(wide, ProblemKind::closest_string, 2), TooLarge);
  IlpSystem big;
  big.k = 3;
  big.box = {Bounds{0, 999}, Bounds{0, 999}, Bounds{0, 999}};
  CHECK_THROWS_AS(brute_force(big, ProblemKind::ilp, 0), TooLarge);
  CHECK_THROWS_AS(brute_force(Graph(30), ProblemKind::longest_path, 6), TooLarge);
}
