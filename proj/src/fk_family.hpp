#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "partition.hpp"

namespace bcp::fk {

/// Default cap on elementary checks for exhaustive enumerations.
inline constexpr std::uint64_t kDefaultWorkCap = 100'000'000;

/// Shape of a patterned bipartite graph: r groups of s vertices on side A, k - r*s
/// vertices on side B, and a threshold tau for A-degrees and group separation.
struct FamilyParams {
  unsigned k = 0;
  unsigned r = 0;
  unsigned s = 0;
  unsigned tau = 0;

  unsigned a_size() const noexcept { return r * s; }
  unsigned b_size() const noexcept { return k - r * s; }

  /// Throws InvalidArgument unless r >= 1, s >= 1, r*s < k and r <= 64.
  void validate() const;

  /// Groups of 10, r = k/100 and tau = ceil(k/3).
  static FamilyParams default_shape(unsigned k);

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// A member of the family placed on concrete vertices of some host graph.
/// Bit i of patterns[t] says whether b[t] is joined to every vertex of groups[i].
struct PatternedBipartite {
  FamilyParams params;
  std::vector<std::vector<Vertex>> groups;
  std::vector<Vertex> b;
  std::vector<std::uint64_t> patterns;

  std::vector<Vertex> vertices() const;
};

/// Distinct patterns, every column sum >= tau, every pair of columns differs in >= tau rows.
bool patterns_admissible(const FamilyParams& params, const std::vector<std::uint64_t>& patterns);

/// Graph on n vertices containing exactly the member's edges.
Graph member_graph(const PatternedBipartite& f, std::size_t n);

/// True iff g induces exactly the member on its vertices and the member meets every invariant.
bool is_member(const Graph& g, const PatternedBipartite& f);

/// Rejection sampler: placements and distinct patterns are drawn uniformly, then filtered.
/// Throws PreconditionError when 2^r < |B|; nullopt when every attempt is rejected.
std::optional<PatternedBipartite> sample_member(const FamilyParams& params, const Seed& seed, unsigned attempts = 10000);

/// Blocks (A_i, {b : v_b(i) = 1}) for every i with a nonempty right side.
BicliquePartition canonical_decomposition(const PatternedBipartite& f, std::size_t n);

/// Edge bit-keys of every distinct labelled member on vertices 0..k-1 (k <= 11), sorted.
/// Raw enumeration over ordered role assignments and pattern tuples, deduplicated by graph.
std::vector<std::uint64_t> enumerate_member_keys(const FamilyParams& params, std::uint64_t work_cap = kDefaultWorkCap);

/// Number of distinct labelled members on k fixed vertices (raw enumeration).
std::uint64_t count_members(const FamilyParams& params, std::uint64_t work_cap = kDefaultWorkCap);

/// Unordered group placements times admissible pattern assignments for one placement.
std::uint64_t count_by_placement(const FamilyParams& params, std::uint64_t work_cap = kDefaultWorkCap);

/// ln of prod_j C(k - js, s) / r! * 2^(r (k - rs)): the count before any filtering.
double count_formula_upper(const FamilyParams& params);

struct SearchBudget {
  std::uint64_t nodes = 2'000'000;
};

/// Randomized search for an induced member: grows an independent B, then picks groups from
/// classes of vertices sharing a B-neighbourhood. Sound but incomplete.
std::optional<PatternedBipartite> find_induced_member(const Graph& g, const FamilyParams& params, const Seed& seed,
                                                      SearchBudget budget = {});

struct PlantedInstance {
  Graph graph;
  PatternedBipartite witness;
};

/// G(n, 1/2) with a sampled member planted on random vertices.
std::optional<PlantedInstance> plant_member(std::size_t n, const FamilyParams& params, const Seed& seed,
                                            unsigned attempts = 10000);

/// Canonical blocks of f plus stars covering every edge with an endpoint outside f.
/// Size <= n - k + r. Throws PreconditionError unless f is an induced member of g.
BicliquePartition fk_decomposition(const Graph& g, const PatternedBipartite& f);

struct JointExtension {
  std::vector<Vertex> common;  // vertices of K kept in K'
  unsigned j = 0;              // |K' \ K|
  std::uint64_t count = 0;
  long double bound = 0;  // count_members * (r + 2^r)^j * 2^((k - rs) j / s)
};

/// Number of edge assignments to the pairs inside K or inside K' (|K| = |K'| = k,
/// K cap K' = common) for which both K and K' induce members.
JointExtension joint_extension_count(const FamilyParams& params, const std::vector<Vertex>& common,
                                     std::uint64_t work_cap = kDefaultWorkCap);

/// joint_extension_count for every choice of common vertices with |K' \ K| = j.
std::vector<JointExtension> all_joint_extension_counts(const FamilyParams& params, unsigned j,
                                                       std::uint64_t work_cap = kDefaultWorkCap);

/// Bit position of pair (u, v), u < v, in the member keys above.
unsigned pair_bit(unsigned u, unsigned v, unsigned k);

}  // namespace bcp::fk
