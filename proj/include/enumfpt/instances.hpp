#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "enumfpt/stream.hpp"

namespace enumfpt {

// Vertices are 1-based throughout the public API.
using Vertex = int;
using Weight = std::int64_t;

enum class ProblemKind { fvst, closest_string, ilp, longest_path, vertex_cover, steiner };

// CLI tag ("fvst", "closest-string", ...). parse_problem_kind throws
// InvariantError on unknown tags.
std::string_view problem_tag(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view tag);
const std::vector<ProblemKind>& all_problem_kinds();

// Exactly one arc between every pair of distinct vertices.
class Tournament {
 public:
  // All arcs start unset; add_arc orients a pair. validate() checks that
  // every pair got exactly one orientation.
  explicit Tournament(int n);

  int size() const noexcept { return n_; }
  // True iff u -> v.
  bool beats(Vertex u, Vertex v) const { return at(u, v) == 1; }
  void add_arc(Vertex u, Vertex v);
  void validate() const;

  // Orientation from a predicate; pairs where pred(u, v) holds get u -> v.
  template <class Pred>
  static Tournament from_predicate(int n, Pred pred) {
    Tournament t(n);
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) pred(u, v) ? t.add_arc(u, v) : t.add_arc(v, u);
    return t;
  }

 private:
  signed char at(Vertex u, Vertex v) const { return arcs_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)]; }
  signed char& at(Vertex u, Vertex v) { return arcs_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)]; }

  int n_;
  // 1: u -> v, -1: v -> u, 0: unset.
  std::vector<signed char> arcs_;
};

struct Edge {
  Vertex u;
  Vertex v;
  Weight w = 1;
};

// Simple undirected graph, optionally edge-weighted and with terminals.
class Graph {
 public:
  explicit Graph(int n = 0);

  int size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  // Weight of edge uv, or nullopt if absent.
  std::optional<Weight> weight(Vertex u, Vertex v) const;

  bool weighted() const noexcept { return weighted_; }
  void set_weighted(bool weighted) noexcept { weighted_ = weighted; }

  // Rejects self-loops, parallel edges, out-of-range endpoints and
  // nonpositive weights with InvariantError.
  void add_edge(Vertex u, Vertex v, Weight w = 1);

  const std::optional<std::vector<Vertex>>& terminals() const noexcept { return terminals_; }
  void set_terminals(std::vector<Vertex> terminals);

 private:
  int n_;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<Weight>> adjacent_weights_;
  std::optional<std::vector<Vertex>> terminals_;
};

struct StringSet {
  std::string alphabet;
  std::vector<std::string> strings;
  std::size_t length = 0;

  void validate() const;
};

struct IlpRow {
  std::vector<std::int64_t> coefficients;
  std::int64_t bound = 0;  // coefficients . x <= bound
};

struct Bounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// Integer system Ax <= b over k variables with an explicit box per variable.
// A box with lo > hi is allowed and denotes an empty range.
struct IlpSystem {
  std::size_t k = 0;
  std::vector<IlpRow> rows;
  std::vector<std::optional<Bounds>> box;

  // Throws UnboundedInstance if some variable has no box, InvariantError on
  // ragged rows.
  void validate() const;
};

using Instance = std::variant<Tournament, Graph, StringSet, IlpSystem>;

// Parses one of the text formats:
//   tournament n            + one "u v" line per arc u -> v
//   graph n m | wgraph n m  + m edge lines, optional "terminals t" + one line
//   strings n L alphabet    + n lines
//   ilp k m                 + m rows "a1 .. ak b", then "box i lo hi" per var
// The header must match the problem kind.
Instance parse_instance(std::string_view text, ProblemKind kind);
std::string write_instance(const Instance& instance);

// Canonical solution encodings.
Solution canonical_vertex_set(std::vector<Vertex> vertices);
Solution canonical_path(const std::vector<Vertex>& path);
Solution canonical_edge_set(std::vector<std::pair<Vertex, Vertex>> edges);
Solution canonical_int_vector(const std::vector<std::int64_t>& values);

std::vector<Vertex> decode_vertex_list(const Solution& s);
std::vector<std::pair<Vertex, Vertex>> decode_edge_set(const Solution& s);
std::vector<std::int64_t> decode_int_vector(const Solution& s);

}  // namespace enumfpt
