#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "partition.hpp"

namespace bcp {

/// A vertex's vector in {0,1,2}^r, packed: coordinate i is 1 if bit i of `ones` is set,
/// 0 if bit i of `zeros` is set, and 2 otherwise.
struct Label {
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;

  /// Coordinates where the value is 0 or 1.
  std::uint64_t support() const noexcept { return ones | zeros; }
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

inline constexpr unsigned kMaxLabelDimension = 64;

/// Number of coordinates i with {a_i, b_i} = {0, 1}.
inline int crossing_count(const Label& a, const Label& b) noexcept {
  return std::popcount((a.ones & b.zeros) | (a.zeros & b.ones));
}

std::string label_to_string(const Label& l, unsigned r);
Label label_from_string(std::string_view s);

struct VectorLabeling {
  unsigned r = 0;
  std::vector<Label> labels;
};

/// Per-vertex vectors of a partition: 1 on the left of block i, 0 on the right, 2 otherwise.
VectorLabeling encode_partition(const BicliquePartition& p);

/// Blocks ({v: v_i = 1}, {v: v_i = 0}) for each coordinate with both sides nonempty.
BicliquePartition labeling_blocks(const VectorLabeling& l);

/// The partition if it validates against g, otherwise the first violation.
std::variant<BicliquePartition, Violation> decode_labeling(const Graph& g, const VectorLabeling& l);

/// Graph implied by a labeling, or nullopt if some pair crosses in two or more coordinates.
std::optional<Graph> labeling_graph(const VectorLabeling& l);

struct ExactBcOptions {
  /// Largest biclique count tried; nullopt means n.
  std::optional<unsigned> max_r;
  std::size_t max_vertices = 14;
};

struct ExactBcResult {
  unsigned bc = 0;
  VectorLabeling witness;
};

/// Minimum r for which a labeling in {0,1,2}^r reproduces g exactly; nullopt if none up to max_r.
/// Throws BudgetExceeded above the vertex cap.
std::optional<ExactBcResult> exact_bc(const Graph& g, const ExactBcOptions& opts = {});

}  // namespace bcp
