#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "enumfpt/instances.hpp"

namespace testutil {

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

inline bool has_duplicates(const std::vector<std::string>& v) { return as_set(v).size() != v.size(); }

inline enumfpt::Tournament cycle3() {
  enumfpt::Tournament t(3);
  t.add_arc(1, 2);
  t.add_arc(2, 3);
  t.add_arc(3, 1);
  return t;
}

inline enumfpt::Tournament transitive(int n) {
  return enumfpt::Tournament::from_predicate(n, [](int u, int v) { return u < v; });
}

inline enumfpt::Graph graph(int n, const std::vector<std::pair<int, int>>& edges) {
  enumfpt::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace testutil
