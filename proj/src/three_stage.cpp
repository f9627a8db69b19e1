#include "three_stage.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

#include "errors.hpp"

namespace bcp {

std::size_t three_stage_block_count(std::size_t n) {
  if (n < 2) return 1;
  const double l = std::round(std::cbrt(std::log2(static_cast<double>(n))));
  return std::max<std::size_t>(1, static_cast<std::size_t>(l));
}

std::optional<PairWitness> signature_pairs(const Graph& g, const VertexSet& independent,
                                           std::span<const Vertex> scan_order, std::size_t block_index) {
  std::unordered_map<VertexSet, Vertex, VertexSetHash> first_seen;
  first_seen.reserve(scan_order.size());
  for (const Vertex v : scan_order) {
    if (independent.test(v)) throw PreconditionError("signature block intersects the independent set");
    VertexSet sig = g.neighbors(v) & independent;
    auto [it, inserted] = first_seen.emplace(sig, v);
    if (!inserted) return PairWitness{it->second, v, std::move(sig), block_index};
  }
  return std::nullopt;
}

ThreeStageResult three_stage_decomposition(const Graph& g, const Seed& seed, const ThreeStageConfig& config) {
  const std::size_t n = g.size();
  if (n < 4) throw PreconditionError("three-stage decomposition needs n >= 4");
  const std::size_t half = (n + 1) / 2;
  VertexSet x(n);
  for (Vertex v = 0; v < half; ++v) x.set(v);
  VertexSet independent = independent_set(g, x, config.effort, seed.derive("independent-set"));
  return three_stage_decomposition(g, independent, seed);
}

ThreeStageResult three_stage_decomposition(const Graph& g, const VertexSet& independent, const Seed& seed) {
  const std::size_t n = g.size();
  if (n < 4) throw PreconditionError("three-stage decomposition needs n >= 4");
  const std::size_t half = (n + 1) / 2;
  if (independent.universe() != n || !g.is_independent(independent)) {
    throw PreconditionError("three-stage decomposition needs an independent set");
  }
  if (independent.next(static_cast<Vertex>(half)) != VertexSet::npos) {
    throw PreconditionError("independent set must lie inside X");
  }

  ThreeStageResult res;
  res.independent = independent;
  auto& rep = res.report;
  rep.n = n;
  rep.independent_size = independent.count();

  // Y = [half, n) split into near-equal contiguous blocks.
  const std::size_t y_size = n - half;
  const std::size_t blocks = std::min(three_stage_block_count(n), y_size);
  rep.block_count = blocks;
  for (std::size_t bi = 0; bi < blocks; ++bi) {
    const std::size_t lo = half + bi * y_size / blocks;
    const std::size_t hi = half + (bi + 1) * y_size / blocks;
    std::vector<Vertex> scan(hi - lo);
    std::iota(scan.begin(), scan.end(), static_cast<Vertex>(lo));
    Rng rng(seed.derive("scan-order", bi));
    rng.shuffle(scan);
    if (auto w = signature_pairs(g, independent, scan, bi)) res.found.push_back(std::move(*w));
  }
  rep.pairs_found = res.found.size();

  VertexSet pair_vertices(n);
  for (const auto& w : res.found) {
    VertexSet both(n);
    both.set(w.a);
    both.set(w.b);
    if (g.adjacent(w.a, w.b) || g.neighbors(w.a).intersects(pair_vertices) ||
        g.neighbors(w.b).intersects(pair_vertices)) {
      ++rep.pairs_lost_to_adjacency;
      continue;
    }
    pair_vertices |= both;
    res.selected.push_back(w);
  }
  rep.pairs_selected = res.selected.size();

  BicliquePartition& p = res.partition;
  p.n = n;
  for (const auto& w : res.selected) {
    if (w.common.empty()) continue;
    VertexSet left(n);
    left.set(w.a);
    left.set(w.b);
    p.add(std::move(left), w.common);
  }
  BicliquePartition stars = star_cover(g, VertexSet::full(n) - independent - pair_vertices);
  for (auto& blk : stars.blocks) p.blocks.push_back(std::move(blk));

  rep.partition_size = p.size();
  rep.savings = static_cast<long long>(n) - static_cast<long long>(rep.independent_size) -
                static_cast<long long>(rep.partition_size);
  return res;
}

}  // namespace bcp
