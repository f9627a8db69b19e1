#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "oracles.hpp"
#include "three_stage.hpp"

using namespace bcp;

namespace {

VertexSet vs(std::size_t n, std::initializer_list<Vertex> xs) { return VertexSet::of(n, std::vector<Vertex>(xs)); }

VertexSet signature(const Graph& g, const VertexSet& independent, Vertex v) {
  VertexSet s = g.neighbors(v);
  s &= independent;
  return s;
}

void check_invariants(const Graph& g, const ThreeStageResult& res) {
  const std::size_t n = g.size();
  CHECK_FALSE(validate(g, res.partition));
  CHECK(g.is_independent(res.independent));
  const std::size_t half = (n + 1) / 2;
  res.independent.for_each([&](Vertex v) { CHECK(v < half); });
  CHECK(res.partition.size() <= n - res.independent.count() - res.selected.size());

  for (const auto& w : res.found) {
    CHECK(w.a != w.b);
    CHECK_FALSE(res.independent.test(w.a));
    CHECK_FALSE(res.independent.test(w.b));
    CHECK(w.a >= half);
    CHECK(w.b >= half);
    CHECK(signature(g, res.independent, w.a) == w.common);
    CHECK(signature(g, res.independent, w.b) == w.common);
  }
  VertexSet pair_vertices(n);
  for (const auto& w : res.selected) {
    pair_vertices.set(w.a);
    pair_vertices.set(w.b);
  }
  CHECK(pair_vertices.count() == 2 * res.selected.size());
  CHECK(g.is_independent(pair_vertices));

  const auto& rep = res.report;
  CHECK(rep.n == n);
  CHECK(rep.independent_size == res.independent.count());
  CHECK(rep.pairs_found == res.found.size());
  CHECK(rep.pairs_selected == res.selected.size());
  CHECK(rep.pairs_found == rep.pairs_selected + rep.pairs_lost_to_adjacency);
  CHECK(rep.partition_size == res.partition.size());
  CHECK(rep.savings == static_cast<long long>(n) - static_cast<long long>(rep.independent_size) -
                           static_cast<long long>(rep.partition_size));
  CHECK(rep.block_count == three_stage_block_count(n));
}

}  // namespace

TEST_CASE("block count") {
  CHECK(three_stage_block_count(4) == 1);
  CHECK(three_stage_block_count(256) == 2);
  CHECK(three_stage_block_count(4096) == 2);
  CHECK(three_stage_block_count(std::size_t{1} << 27) == 3);
  for (std::size_t n = 4; n < 100000; n = n * 3 + 1) {
    const auto expected = std::max<long>(1, std::lround(std::cbrt(std::log2(static_cast<double>(n)))));
    CHECK(three_stage_block_count(n) == static_cast<std::size_t>(expected));
  }
}

TEST_CASE("signature pairs") {
  // Vertices 2 and 3 see nothing of I = {0, 1}.
  Graph g(6);
  g.add_edge(0, 4);
  g.add_edge(1, 5);
  const VertexSet independent = vs(6, {0, 1});
  const std::vector<Vertex> both{2, 3};
  const auto w = signature_pairs(g, independent, both, 3);
  REQUIRE(w);
  CHECK(((w->a == 2 && w->b == 3) || (w->a == 3 && w->b == 2)));
  CHECK(w->common.empty());
  CHECK(w->block == 3);

  const std::vector<Vertex> distinct{4, 5, 2};
  CHECK_FALSE(signature_pairs(g, independent, distinct));

  const std::vector<Vertex> bad{0, 2};
  CHECK_THROWS_AS(signature_pairs(g, independent, bad), PreconditionError);
}

TEST_CASE("signature pairs collide in a large block") {
  // 256 vertices against 2^12 signatures: the birthday oracle makes a miss essentially impossible.
  CHECK(oracle::distinct_probability(256, 4096) < 1e-3);
  const std::size_t n = 2048;
  const Graph g = gnp(n, 0.5, Seed(1));
  VertexSet x(n);
  for (Vertex v = 0; v < n / 2; ++v) x.set(v);
  const VertexSet full_i = independent_set(g, x, Effort::heuristic(4), Seed(1));
  REQUIRE(full_i.count() >= 12);
  VertexSet independent(n);
  auto members = full_i.members();
  for (std::size_t t = 0; t < 12; ++t) independent.set(members[t]);
  std::vector<Vertex> block;
  for (Vertex v = n / 2; block.size() < 256; ++v) block.push_back(v);
  const auto w = signature_pairs(g, independent, block);
  REQUIRE(w);
  CHECK(signature(g, independent, w->a) == signature(g, independent, w->b));
}

TEST_CASE("three-stage on empty and complete graphs") {
  const Graph empty(12);
  const auto e = three_stage_decomposition(empty, Seed(1));
  CHECK(e.partition.size() == 0);
  CHECK(e.report.savings == static_cast<long long>(12 - e.independent.count()));
  check_invariants(empty, e);

  for (std::size_t n : {4, 9, 30}) {
    const Graph k = Graph::complete(n);
    const auto r = three_stage_decomposition(k, Seed(n));
    CHECK(r.selected.empty());
    CHECK(r.partition.size() == n - 1);
    check_invariants(k, r);
  }
  CHECK_THROWS_AS(three_stage_decomposition(Graph(3), Seed(0)), PreconditionError);
}

TEST_CASE("without selected pairs the output is the star decomposition") {
  for (std::size_t n : {6, 11, 25}) {
    const Graph k = Graph::complete(n);
    const auto r = three_stage_decomposition(k, Seed(2));
    REQUIRE(r.selected.empty());
    const auto stars = star_decomposition(k, r.independent);
    CHECK(r.partition.blocks == stars.blocks);
  }
  // A caller-supplied I that makes every Y-signature distinct also selects nothing.
  Graph g(8);
  for (Vertex y = 4; y < 8; ++y)
    for (Vertex x = 0; x < 4; ++x)
      if ((y - 4) & (1U << x) || x == y - 4) g.add_edge(x, y);
  const auto r = three_stage_decomposition(g, vs(8, {0, 1, 2, 3}), Seed(4));
  REQUIRE(r.found.empty());
  CHECK(r.partition.blocks == star_decomposition(g, r.independent).blocks);
  check_invariants(g, r);
}

TEST_CASE("three-stage on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 4 + seed * 7;
    const Graph g = gnp(n, 0.5, Seed(seed));
    check_invariants(g, three_stage_decomposition(g, Seed(seed)));
  }
  for (double p : {0.1, 0.3, 0.7, 0.9}) {
    const Graph g = gnp(300, p, Seed(9));
    check_invariants(g, three_stage_decomposition(g, Seed(9)));
  }
}

TEST_CASE("three-stage at n = 4096") {
  const Graph g = gnp(4096, 0.5, Seed(7));
  const auto r = three_stage_decomposition(g, Seed(7));
  check_invariants(g, r);
  MESSAGE("n=4096: |I|=" << r.report.independent_size << " found=" << r.report.pairs_found
                          << " selected=" << r.report.pairs_selected << " size=" << r.report.partition_size);
}

TEST_CASE("three-stage is deterministic given the seed") {
  const Graph g = gnp(500, 0.5, Seed(3));
  const auto a = three_stage_decomposition(g, Seed(5));
  const auto b = three_stage_decomposition(g, Seed(5));
  CHECK(a.partition.blocks == b.partition.blocks);
  CHECK(a.independent == b.independent);
}

TEST_CASE("caller-supplied independent set is checked") {
  const Graph g = gnp(20, 0.5, Seed(1));
  VertexSet outside(20);
  outside.set(19);
  CHECK_THROWS_AS(three_stage_decomposition(g, outside, Seed(1)), PreconditionError);
  Graph k = Graph::complete(20);
  CHECK_THROWS_AS(three_stage_decomposition(k, vs(20, {0, 1}), Seed(1)), PreconditionError);
}
