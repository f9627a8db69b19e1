#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "random.hpp"
#include "vertex_set.hpp"

namespace bcp {

/// Largest vertex count any constructor accepts unless the caller raises it.
inline constexpr std::size_t kDefaultMaxVertices = std::size_t{1} << 16;

/// Undirected simple graph on vertices 0..n-1 stored as n adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::size_t max_vertices = kDefaultMaxVertices);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t size() const noexcept { return rows_.size(); }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const VertexSet& neighbors(Vertex u) const noexcept { return rows_[u]; }
  std::size_t degree(Vertex u) const noexcept { return rows_[u].count(); }
  std::size_t edge_count() const noexcept;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Throws InvalidArgument if symmetry or irreflexivity fails.
  void check_invariants() const;

  bool is_independent(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> rows_;
};

/// Each unordered pair is an edge independently with probability p.
Graph gnp(std::size_t n, double p, const Seed& seed, std::size_t max_vertices = kDefaultMaxVertices);

/// Open-neighbourhood twins: N(u) == N(v) as sets. Adjacent vertices are never twins.
bool is_twin_pair(const Graph& g, Vertex u, Vertex v);
bool is_twin_free(const Graph& g);

Graph read_graph(std::string_view text, std::size_t max_vertices = kDefaultMaxVertices);
std::string write_graph(const Graph& g);

}  // namespace bcp
