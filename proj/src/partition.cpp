#include "partition.hpp"

#include <algorithm>

#include "errors.hpp"

namespace bcp {

void BicliquePartition::add_star(Vertex center, VertexSet leaves) {
  VertexSet left(n);
  left.set(center);
  blocks.push_back({std::move(left), std::move(leaves)});
}

std::string Violation::describe() const {
  std::string what;
  switch (kind) {
    case Kind::malformed_block: what = "malformed block"; break;
    case Kind::non_edge: what = "non-edge covered"; break;
    case Kind::double_cover: what = "edge covered twice"; break;
    case Kind::uncovered_edge: what = "edge not covered"; break;
  }
  if (kind != Kind::malformed_block) what += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
  if (block) what += " in block " + std::to_string(*block);
  if (other_block) what += " and block " + std::to_string(*other_block);
  return what;
}

namespace {

bool block_covers(const Biclique& b, Vertex u, Vertex v) {
  return (b.left.test(u) && b.right.test(v)) || (b.left.test(v) && b.right.test(u));
}

}  // namespace

std::optional<Violation> validate(const Graph& g, const BicliquePartition& p) {
  const std::size_t n = g.size();
  if (p.n != n) return Violation{Violation::Kind::malformed_block, 0, 0, std::nullopt, std::nullopt};
  std::vector<VertexSet> covered(n, VertexSet(n));
  for (std::size_t bi = 0; bi < p.blocks.size(); ++bi) {
    const Biclique& b = p.blocks[bi];
    if (b.left.universe() != n || b.right.universe() != n || b.left.empty() || b.right.empty() ||
        b.left.intersects(b.right)) {
      return Violation{Violation::Kind::malformed_block, 0, 0, bi, std::nullopt};
    }
    std::optional<Violation> found;
    b.left.for_each([&](Vertex u) {
      if (found) return;
      VertexSet bad = b.right - g.neighbors(u);
      if (!bad.empty()) {
        found = Violation{Violation::Kind::non_edge, std::min(u, bad.first()), std::max(u, bad.first()), bi,
                          std::nullopt};
        return;
      }
      VertexSet twice = b.right & covered[u];
      if (!twice.empty()) {
        const Vertex v = twice.first();
        std::optional<std::size_t> earlier;
        for (std::size_t bj = 0; bj < bi && !earlier; ++bj)
          if (block_covers(p.blocks[bj], u, v)) earlier = bj;
        found = Violation{Violation::Kind::double_cover, std::min(u, v), std::max(u, v), earlier, bi};
        return;
      }
      covered[u] |= b.right;
      b.right.for_each([&](Vertex v) { covered[v].set(u); });
    });
    if (found) return found;
  }
  for (Vertex u = 0; u < n; ++u) {
    VertexSet missing = g.neighbors(u) - covered[u];
    if (!missing.empty()) {
      return Violation{Violation::Kind::uncovered_edge, std::min(u, missing.first()), std::max(u, missing.first()),
                       std::nullopt, std::nullopt};
    }
  }
  return std::nullopt;
}

BicliquePartition star_cover(const Graph& g, const VertexSet& centers) {
  const std::size_t n = g.size();
  BicliquePartition p{n, {}};
  VertexSet done(n);
  std::vector<std::size_t> residual(n, 0);
  centers.for_each([&](Vertex c) { residual[c] = g.degree(c); });
  VertexSet pending = centers;
  while (!pending.empty()) {
    Vertex best = VertexSet::npos;
    pending.for_each([&](Vertex c) {
      if (best == VertexSet::npos || residual[c] > residual[best]) best = c;
    });
    pending.reset(best);
    done.set(best);
    VertexSet leaves = g.neighbors(best) - done;
    leaves.for_each([&](Vertex v) {
      if (pending.test(v)) --residual[v];
    });
    if (!leaves.empty()) p.add_star(best, std::move(leaves));
  }
  return p;
}

BicliquePartition star_decomposition(const Graph& g, const VertexSet& independent) {
  if (independent.universe() != g.size()) throw InvalidArgument("independent set does not match the graph size");
  if (!g.is_independent(independent)) throw PreconditionError("star decomposition needs an independent set");
  return star_cover(g, VertexSet::full(g.size()) - independent);
}

std::size_t inertia_lower_bound(const Graph& g) {
  const Inertia in = adjacency_inertia(g);
  return std::max(in.positive, in.negative);
}

}  // namespace bcp
