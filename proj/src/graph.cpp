#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "errors.hpp"

namespace bcp {

Graph::Graph(std::size_t n, std::size_t max_vertices) {
  if (n > max_vertices) {
    throw InvalidArgument("graph with " + std::to_string(n) + " vertices exceeds the cap of " +
                          std::to_string(max_vertices));
  }
  rows_.assign(n, VertexSet(n));
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= rows_.size()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(rows_.size()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

void Graph::check_invariants() const {
  for (Vertex u = 0; u < rows_.size(); ++u) {
    if (rows_[u].universe() != rows_.size()) throw InvalidArgument("adjacency row width mismatch");
    if (rows_[u].test(u)) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    rows_[u].for_each([&](Vertex v) {
      if (!rows_[v].test(u)) {
        throw InvalidArgument("asymmetric adjacency at (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
    });
  }
}

bool Graph::is_independent(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && rows_[v].intersects(s)) ok = false;
  });
  return ok;
}

Graph gnp(std::size_t n, double p, const Seed& seed, std::size_t max_vertices) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0,1]");
  Graph g(n, max_vertices);
  Rng rng(seed);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

bool is_twin_pair(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.size() || v >= g.size()) throw InvalidArgument("vertex out of range");
  if (u == v) throw InvalidArgument("twin test needs two distinct vertices");
  return g.neighbors(u) == g.neighbors(v);
}

bool is_twin_free(const Graph& g) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  seen.reserve(g.size());
  for (Vertex u = 0; u < g.size(); ++u) {
    if (!seen.insert(g.neighbors(u)).second) return false;
  }
  return true;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
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

bool parse_uint(std::string_view s, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Graph read_graph(std::string_view text, std::size_t max_vertices) {
  using K = ParseError::Kind;
  Graph g;
  bool have_header = false;
  std::uint64_t declared_edges = 0;
  std::uint64_t seen_edges = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (fields[0] == "p") {
      std::uint64_t n = 0;
      if (have_header) throw ParseError(K::malformed_header, line_no, "duplicate header");
      if (fields.size() != 3 || !parse_uint(fields[1], n) || !parse_uint(fields[2], declared_edges)) {
        throw ParseError(K::malformed_header, line_no, "expected 'p <n> <m>'");
      }
      if (n > max_vertices) {
        throw ParseError(K::malformed_header, line_no, "vertex count " + std::to_string(n) + " exceeds cap");
      }
      g = Graph(static_cast<std::size_t>(n), max_vertices);
      have_header = true;
    } else if (fields[0] == "e") {
      if (!have_header) throw ParseError(K::missing_header, line_no, "edge record before header");
      std::uint64_t u = 0, v = 0;
      if (fields.size() != 3 || !parse_uint(fields[1], u) || !parse_uint(fields[2], v)) {
        throw ParseError(K::malformed_record, line_no, "expected 'e <u> <v>'");
      }
      if (u >= g.size() || v >= g.size()) {
        throw ParseError(K::vertex_out_of_range, line_no, "vertex index out of range");
      }
      if (u == v) throw ParseError(K::self_loop, line_no, "self-loop at vertex " + std::to_string(u));
      if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
        throw ParseError(K::duplicate_edge, line_no, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
      }
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ++seen_edges;
    } else {
      throw ParseError(K::malformed_record, line_no, "unknown record type '" + std::string(fields[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(K::missing_header, line_no, "missing 'p <n> <m>' header");
  if (seen_edges != declared_edges) {
    throw ParseError(K::edge_count_mismatch, line_no,
                     "header declares " + std::to_string(declared_edges) + " edges, found " + std::to_string(seen_edges));
  }
  return g;
}

std::string write_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (Vertex u = 0; u < g.size(); ++u) {
    Vertex v = g.neighbors(u).next(u + 1);
    while (v != VertexSet::npos) {
      out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
      v = g.neighbors(u).next(v + 1);
    }
  }
  return out;
}

}  // namespace bcp
