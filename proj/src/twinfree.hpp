#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "labeling.hpp"

namespace bcp::twinfree {

inline constexpr unsigned kMaxConstructionDimension = 16;
inline constexpr unsigned kMaxExhaustiveDimension = 3;

struct ExtremalGraph {
  Graph graph;
  VectorLabeling labeling;
};

/// Vectors with at most one coordinate equal to 1, only 2s after it and only 0s/2s before
/// it (including the all-{0,2} vectors); u ~ v iff some coordinate is {0,1}.
/// 2^(r+1) - 1 vertices, twin-free, partitioned by its r coordinates.
ExtremalGraph extremal_graph(unsigned r);

/// Three distinct vectors sharing a nonempty support. Valid labelings never produce one.
using SupportTriple = std::array<Label, 3>;

/// Groups vectors by support {i : v_i in {0,1}}. Throws InvalidArgument if the labeling
/// does not itself define a graph (some pair crosses twice).
std::optional<SupportTriple> support_class_check(const VectorLabeling& l);

struct VerifyReport {
  bool vertex_count_ok = false;  // |V| = 2^(r+1) - 1
  bool twin_free = false;
  bool partition_ok = false;
  std::size_t blocks = 0;
  bool support_classes_ok = false;
  std::string detail;

  bool ok() const noexcept { return vertex_count_ok && twin_free && partition_ok && support_classes_ok; }
};

/// Checks a graph and labeling against every property of the extremal construction.
VerifyReport verify(const Graph& g, const VectorLabeling& l);

struct MaxOrderResult {
  std::uint64_t order = 0;
  std::vector<Label> witness;
  std::uint64_t nodes = 0;
};

/// Largest set of distinct vectors in {0,1,2}^r that defines a twin-free graph partitioned
/// by its coordinates. Exhaustive; r <= 3. With support_lemma the search never holds three
/// vectors of one support class; without it only pairwise compatibility prunes.
MaxOrderResult max_twinfree_order(unsigned r, bool support_lemma = true);

}  // namespace bcp::twinfree
