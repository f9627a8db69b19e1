#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "graph.hpp"
#include "independent_set.hpp"
#include "partition.hpp"

namespace bcp {

/// Two vertices outside I with the same neighbourhood inside I.
struct PairWitness {
  Vertex a = 0;
  Vertex b = 0;
  VertexSet common;  // I ∩ N(a) = I ∩ N(b)
  std::size_t block = 0;
};

struct ThreeStageConfig {
  Effort effort = Effort::heuristic();
};

struct ThreeStageReport {
  std::size_t n = 0;
  std::size_t independent_size = 0;
  std::size_t block_count = 0;
  std::size_t pairs_found = 0;
  std::size_t pairs_selected = 0;
  /// Witnesses dropped because a, b or an earlier selected pair were adjacent.
  std::size_t pairs_lost_to_adjacency = 0;
  std::size_t partition_size = 0;
  /// n - |I| - size.
  long long savings = 0;
};

struct ThreeStageResult {
  BicliquePartition partition;
  ThreeStageReport report;
  VertexSet independent;
  std::vector<PairWitness> found;
  std::vector<PairWitness> selected;
};

/// max(1, round(cbrt(log2 n))).
std::size_t three_stage_block_count(std::size_t n);

/// First vertex (in scan order) whose I-signature repeats an earlier one, paired with that
/// earlier vertex. Block vertices must lie outside I.
std::optional<PairWitness> signature_pairs(const Graph& g, const VertexSet& independent,
                                           std::span<const Vertex> scan_order, std::size_t block_index = 0);

/// Split V into X (first ceil(n/2) vertices) and Y, take an independent I inside X, find one
/// same-signature pair per Y-block, keep a greedy family of pairs whose vertices are jointly
/// independent, and cover the rest by stars. Size <= n - |I| - |S|. Requires n >= 4.
ThreeStageResult three_stage_decomposition(const Graph& g, const Seed& seed, const ThreeStageConfig& config = {});

/// Same pipeline with a caller-supplied I inside X.
ThreeStageResult three_stage_decomposition(const Graph& g, const VertexSet& independent, const Seed& seed);

}  // namespace bcp
