#include "enumfpt/instances.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "enumfpt/errors.hpp"

namespace enumfpt {

namespace {

struct ProblemInfo {
  ProblemKind kind;
  std::string_view tag;
};

constexpr ProblemInfo kProblems[] = {
    {ProblemKind::fvst, "fvst"},
    {ProblemKind::closest_string, "closest-string"},
    {ProblemKind::ilp, "ilp"},
    {ProblemKind::longest_path, "longest-path"},
    {ProblemKind::vertex_cover, "vertex-cover"},
    {ProblemKind::steiner, "steiner"},
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Line cursor that remembers 1-based line numbers for error messages.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines_.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  // Next line with at least one token; nullopt at end of input.
  std::optional<std::vector<std::string_view>> next_tokens() {
    while (pos_ < lines_.size()) {
      auto tokens = split_ws(lines_[pos_++]);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  // Next line verbatim (minus a trailing '\r'), blank or not.
  std::optional<std::string_view> next_raw() {
    if (pos_ >= lines_.size()) return std::nullopt;
    std::string_view line = lines_[pos_++];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  }

  std::size_t line() const noexcept { return pos_; }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

std::int64_t to_int(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t n, std::size_t line,
                  std::string_view what) {
  if (tokens.size() != n)
    throw ParseError(line, "expected " + std::to_string(n) + " fields for " + std::string(what) + ", got " +
                               std::to_string(tokens.size()));
}

Vertex to_vertex(std::string_view token, int n, std::size_t line) {
  auto v = to_int(token, line);
  if (v < 1 || v > n) throw ParseError(line, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<Vertex>(v);
}

std::vector<std::string_view> read_header(LineReader& reader, std::string_view expected_a,
                                          std::string_view expected_b = {}) {
  auto header = reader.next_tokens();
  if (!header) throw ParseError(1, "empty input");
  const auto& kw = (*header)[0];
  if (kw != expected_a && (expected_b.empty() || kw != expected_b)) {
    std::string want(expected_a);
    if (!expected_b.empty()) want += "' or '" + std::string(expected_b);
    throw ParseError(reader.line(), "expected header '" + want + "', got '" + std::string(kw) + "'");
  }
  return *header;
}

Tournament parse_tournament(LineReader& reader) {
  auto header = read_header(reader, "tournament");
  expect_arity(header, 2, reader.line(), "tournament header");
  auto n = to_int(header[1], reader.line());
  if (n < 0) throw ParseError(reader.line(), "negative vertex count");
  Tournament t(static_cast<int>(n));
  while (auto tokens = reader.next_tokens()) {
    expect_arity(*tokens, 2, reader.line(), "arc");
    Vertex u = to_vertex((*tokens)[0], t.size(), reader.line());
    Vertex v = to_vertex((*tokens)[1], t.size(), reader.line());
    try {
      t.add_arc(u, v);
    } catch (const InvariantError& e) {
      throw InvariantError("line " + std::to_string(reader.line()) + ": " + e.what());
    }
  }
  t.validate();
  return t;
}

Graph parse_graph(LineReader& reader) {
  auto header = read_header(reader, "graph", "wgraph");
  const bool weighted = header[0] == "wgraph";
  expect_arity(header, 3, reader.line(), "graph header");
  auto n = to_int(header[1], reader.line());
  auto m = to_int(header[2], reader.line());
  if (n < 0 || m < 0) throw ParseError(reader.line(), "negative count in header");
  Graph g(static_cast<int>(n));
  g.set_weighted(weighted);
  for (std::int64_t i = 0; i < m; ++i) {
    auto tokens = reader.next_tokens();
    if (!tokens) throw ParseError(reader.line() + 1, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    expect_arity(*tokens, weighted ? 3 : 2, reader.line(), "edge");
    Vertex u = to_vertex((*tokens)[0], g.size(), reader.line());
    Vertex v = to_vertex((*tokens)[1], g.size(), reader.line());
    Weight w = weighted ? to_int((*tokens)[2], reader.line()) : 1;
    try {
      g.add_edge(u, v, w);
    } catch (const InvariantError& e) {
      throw InvariantError("line " + std::to_string(reader.line()) + ": " + e.what());
    }
  }
  if (auto tokens = reader.next_tokens()) {
    if ((*tokens)[0] != "terminals") throw ParseError(reader.line(), "unexpected '" + std::string((*tokens)[0]) + "'");
    expect_arity(*tokens, 2, reader.line(), "terminals header");
    auto t = to_int((*tokens)[1], reader.line());
    if (t < 0) throw ParseError(reader.line(), "negative terminal count");
    std::vector<Vertex> terminals;
    if (t > 0) {
      auto ids = reader.next_tokens();
      if (!ids) throw ParseError(reader.line() + 1, "missing terminal list");
      expect_arity(*ids, static_cast<std::size_t>(t), reader.line(), "terminal list");
      for (auto id : *ids) terminals.push_back(to_vertex(id, g.size(), reader.line()));
    }
    g.set_terminals(std::move(terminals));
    if (auto extra = reader.next_tokens()) throw ParseError(reader.line(), "trailing content after terminals");
  }
  return g;
}

StringSet parse_strings(LineReader& reader) {
  auto header = read_header(reader, "strings");
  expect_arity(header, 4, reader.line(), "strings header");
  auto n = to_int(header[1], reader.line());
  auto length = to_int(header[2], reader.line());
  if (n < 0 || length < 0) throw ParseError(reader.line(), "negative count in header");
  StringSet set;
  set.alphabet = std::string(header[3]);
  set.length = static_cast<std::size_t>(length);
  for (std::int64_t i = 0; i < n; ++i) {
    auto line = reader.next_raw();
    if (!line) throw ParseError(reader.line() + 1, "expected " + std::to_string(n) + " strings");
    std::string s(*line);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.size() != set.length)
      throw ParseError(reader.line(), "string has length " + std::to_string(s.size()) + ", expected " +
                                          std::to_string(set.length));
    set.strings.push_back(std::move(s));
  }
  if (auto extra = reader.next_tokens()) throw ParseError(reader.line(), "trailing content after strings");
  set.validate();
  return set;
}

IlpSystem parse_ilp(LineReader& reader) {
  auto header = read_header(reader, "ilp");
  expect_arity(header, 3, reader.line(), "ilp header");
  auto k = to_int(header[1], reader.line());
  auto m = to_int(header[2], reader.line());
  if (k < 0 || m < 0) throw ParseError(reader.line(), "negative count in header");
  IlpSystem sys;
  sys.k = static_cast<std::size_t>(k);
  sys.box.assign(sys.k, std::nullopt);
  for (std::int64_t r = 0; r < m; ++r) {
    auto tokens = reader.next_tokens();
    if (!tokens) throw ParseError(reader.line() + 1, "expected " + std::to_string(m) + " rows");
    expect_arity(*tokens, sys.k + 1, reader.line(), "row");
    IlpRow row;
    for (std::size_t j = 0; j < sys.k; ++j) row.coefficients.push_back(to_int((*tokens)[j], reader.line()));
    row.bound = to_int((*tokens)[sys.k], reader.line());
    sys.rows.push_back(std::move(row));
  }
  while (auto tokens = reader.next_tokens()) {
    if ((*tokens)[0] != "box") throw ParseError(reader.line(), "expected 'box i lo hi'");
    expect_arity(*tokens, 4, reader.line(), "box");
    auto i = to_int((*tokens)[1], reader.line());
    if (i < 1 || static_cast<std::size_t>(i) > sys.k)
      throw ParseError(reader.line(), "box variable " + std::to_string(i) + " out of range");
    auto& slot = sys.box[static_cast<std::size_t>(i - 1)];
    if (slot) throw ParseError(reader.line(), "duplicate box for variable " + std::to_string(i));
    slot = Bounds{to_int((*tokens)[2], reader.line()), to_int((*tokens)[3], reader.line())};
  }
  sys.validate();
  return sys;
}

}  // namespace

std::string_view problem_tag(ProblemKind kind) {
  for (const auto& info : kProblems)
    if (info.kind == kind) return info.tag;
  return "unknown";
}

ProblemKind parse_problem_kind(std::string_view tag) {
  for (const auto& info : kProblems)
    if (info.tag == tag) return info.kind;
  throw InvariantError("unknown problem '" + std::string(tag) + "'");
}

const std::vector<ProblemKind>& all_problem_kinds() {
  static const std::vector<ProblemKind> kinds = [] {
    std::vector<ProblemKind> out;
    for (const auto& info : kProblems) out.push_back(info.kind);
    return out;
  }();
  return kinds;
}

Tournament::Tournament(int n) : n_(n), arcs_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

void Tournament::add_arc(Vertex u, Vertex v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw InvariantError("arc endpoint out of range");
  if (u == v) throw InvariantError("self-loop at " + std::to_string(u));
  if (at(u, v) != 0)
    throw InvariantError("pair {" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) +
                         "} oriented twice");
  at(u, v) = 1;
  at(v, u) = -1;
}

void Tournament::validate() const {
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v = u + 1; v <= n_; ++v)
      if (at(u, v) == 0)
        throw InvariantError("pair {" + std::to_string(u) + "," + std::to_string(v) + "} unoriented");
}

Graph::Graph(int n)
    : n_(n),
      adjacency_(static_cast<std::size_t>(n) + 1),
      adjacent_weights_(static_cast<std::size_t>(n) + 1) {}

bool Graph::adjacent(Vertex u, Vertex v) const { return weight(u, v).has_value(); }

std::optional<Weight> Graph::weight(Vertex u, Vertex v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return std::nullopt;
  const auto& nb = adjacency_[u];
  for (std::size_t i = 0; i < nb.size(); ++i)
    if (nb[i] == v) return adjacent_weights_[u][i];
  return std::nullopt;
}

void Graph::add_edge(Vertex u, Vertex v, Weight w) {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw InvariantError("edge endpoint out of range");
  if (u == v) throw InvariantError("self-loop at " + std::to_string(u));
  if (w <= 0) throw InvariantError("nonpositive weight " + std::to_string(w) + " on edge " + std::to_string(u) + " " +
                                   std::to_string(v));
  if (adjacent(u, v))
    throw InvariantError("parallel edge " + std::to_string(u) + " " + std::to_string(v));
  edges_.push_back(Edge{u, v, w});
  adjacency_[u].push_back(v);
  adjacent_weights_[u].push_back(w);
  adjacency_[v].push_back(u);
  adjacent_weights_[v].push_back(w);
}

void Graph::set_terminals(std::vector<Vertex> terminals) {
  std::set<Vertex> seen;
  for (Vertex t : terminals) {
    if (t < 1 || t > n_) throw InvariantError("terminal " + std::to_string(t) + " is not a vertex");
    if (!seen.insert(t).second) throw InvariantError("terminal " + std::to_string(t) + " listed twice");
  }
  terminals_ = std::move(terminals);
}

void StringSet::validate() const {
  std::set<char> seen;
  for (char c : alphabet)
    if (!seen.insert(c).second) throw InvariantError(std::string("alphabet repeats '") + c + "'");
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].size() != length)
      throw InvariantError("string " + std::to_string(i + 1) + " has wrong length");
    for (char c : strings[i])
      if (!seen.contains(c))
        throw InvariantError("string " + std::to_string(i + 1) + " uses '" + std::string(1, c) +
                             "' outside the alphabet");
  }
}

void IlpSystem::validate() const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].coefficients.size() != k) throw InvariantError("row " + std::to_string(r + 1) + " has wrong arity");
  if (box.size() != k) throw UnboundedInstance("box list does not cover all " + std::to_string(k) + " variables");
  for (std::size_t j = 0; j < k; ++j)
    if (!box[j]) throw UnboundedInstance("variable " + std::to_string(j + 1) + " has no box bound");
}

Instance parse_instance(std::string_view text, ProblemKind kind) {
  LineReader reader(text);
  switch (kind) {
    case ProblemKind::fvst:
      return parse_tournament(reader);
    case ProblemKind::closest_string:
      return parse_strings(reader);
    case ProblemKind::ilp:
      return parse_ilp(reader);
    case ProblemKind::longest_path:
    case ProblemKind::vertex_cover:
    case ProblemKind::steiner:
      return parse_graph(reader);
  }
  throw InvariantError("unhandled problem kind");
}

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Tournament>) {
          out << "tournament " << x.size() << '\n';
          for (Vertex u = 1; u <= x.size(); ++u)
            for (Vertex v = u + 1; v <= x.size(); ++v)
              x.beats(u, v) ? out << u << ' ' << v << '\n' : out << v << ' ' << u << '\n';
        } else if constexpr (std::is_same_v<T, Graph>) {
          out << (x.weighted() ? "wgraph " : "graph ") << x.size() << ' ' << x.edges().size() << '\n';
          for (const auto& e : x.edges()) {
            out << e.u << ' ' << e.v;
            if (x.weighted()) out << ' ' << e.w;
            out << '\n';
          }
          if (x.terminals()) {
            out << "terminals " << x.terminals()->size() << '\n';
            for (std::size_t i = 0; i < x.terminals()->size(); ++i) out << (i ? " " : "") << (*x.terminals())[i];
            out << '\n';
          }
        } else if constexpr (std::is_same_v<T, StringSet>) {
          out << "strings " << x.strings.size() << ' ' << x.length << ' ' << x.alphabet << '\n';
          for (const auto& s : x.strings) out << s << '\n';
        } else {
          out << "ilp " << x.k << ' ' << x.rows.size() << '\n';
          for (const auto& row : x.rows) {
            for (auto a : row.coefficients) out << a << ' ';
            out << row.bound << '\n';
          }
          for (std::size_t j = 0; j < x.box.size(); ++j)
            if (x.box[j]) out << "box " << j + 1 << ' ' << x.box[j]->lo << ' ' << x.box[j]->hi << '\n';
        }
      },
      instance);
  return out.str();
}

namespace {

template <class T>
std::string join(const std::vector<T>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::int64_t> parse_ints(std::string_view s) {
  std::vector<std::int64_t> out;
  for (auto token : split_ws(s)) out.push_back(to_int(token, 0));
  return out;
}

}  // namespace

Solution canonical_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  return join(vertices, ' ');
}

Solution canonical_path(const std::vector<Vertex>& path) {
  std::vector<Vertex> reversed(path.rbegin(), path.rend());
  return join(std::min(path, reversed), ' ');
}

Solution canonical_edge_set(std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(edges[i].first) + ' ' + std::to_string(edges[i].second);
  }
  return out;
}

Solution canonical_int_vector(const std::vector<std::int64_t>& values) { return join(values, ' '); }

std::vector<Vertex> decode_vertex_list(const Solution& s) {
  std::vector<Vertex> out;
  for (auto v : parse_ints(s)) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<std::pair<Vertex, Vertex>> decode_edge_set(const Solution& s) {
  std::vector<std::pair<Vertex, Vertex>> out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    auto ints = parse_ints(std::string_view(s).substr(start, end - start));
    if (ints.size() != 2) throw ParseError(0, "malformed edge in '" + s + "'");
    out.emplace_back(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
    start = end + 1;
  }
  return out;
}

std::vector<std::int64_t> decode_int_vector(const Solution& s) { return parse_ints(s); }

}  // namespace enumfpt
