#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace bcp {

/// Complete bipartite block: every left-right pair is meant to be an edge of the host.
struct Biclique {
  VertexSet left;
  VertexSet right;

  friend bool operator==(const Biclique&, const Biclique&) = default;
};

/// Ordered list of bicliques over a vertex universe of size n.
struct BicliquePartition {
  std::size_t n = 0;
  std::vector<Biclique> blocks;

  std::size_t size() const noexcept { return blocks.size(); }
  void add(VertexSet left, VertexSet right) { blocks.push_back({std::move(left), std::move(right)}); }
  /// Block with a single-vertex left side.
  void add_star(Vertex center, VertexSet leaves);
};

/// First defect found while checking that a partition covers each edge exactly once.
struct Violation {
  enum class Kind {
    malformed_block,  // empty side, overlapping sides, or wrong universe
    non_edge,         // a block pairs two non-adjacent vertices
    double_cover,     // an edge appears in two blocks
    uncovered_edge,   // an edge appears in no block
  };

  Kind kind;
  Vertex u = 0;
  Vertex v = 0;
  std::optional<std::size_t> block;
  std::optional<std::size_t> other_block;

  std::string describe() const;
};

std::optional<Violation> validate(const Graph& g, const BicliquePartition& p);

/// Stars centered at every vertex of `centers`, in descending residual-degree order
/// (ties by index), each covering the centre's edges not already covered. Covers every
/// edge with at least one endpoint in `centers`; empty stars are dropped.
BicliquePartition star_cover(const Graph& g, const VertexSet& centers);

/// star_cover over the complement of an independent set I. Throws PreconditionError
/// if I is not independent.
BicliquePartition star_decomposition(const Graph& g, const VertexSet& independent);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Signs of the adjacency spectrum. Exact (rational congruence) up to exact_limit vertices,
/// floating-point eigenvalues with a 1e-9*n zero threshold beyond.
Inertia adjacency_inertia(const Graph& g, std::size_t exact_limit = 64);

/// max(n+, n-), a lower bound on the biclique partition number.
std::size_t inertia_lower_bound(const Graph& g);

}  // namespace bcp
