#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <chrono>

#include "errors.hpp"
#include "independent_set.hpp"
#include "labeling.hpp"
#include "oracles.hpp"
#include "partition.hpp"

using namespace bcp;

namespace {

VertexSet vs(std::size_t n, std::initializer_list<Vertex> xs) { return VertexSet::of(n, std::vector<Vertex>(xs)); }

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

}  // namespace

TEST_CASE("validate accepts exact covers and reports the first defect") {
  const Graph k22 = complete_bipartite(2, 2);
  BicliquePartition one{4, {}};
  one.add(vs(4, {0, 1}), vs(4, {2, 3}));
  CHECK_FALSE(validate(k22, one));

  const Graph k3 = Graph::complete(3);
  BicliquePartition stars{3, {}};
  stars.add(vs(3, {0}), vs(3, {1, 2}));
  stars.add(vs(3, {1}), vs(3, {2}));
  CHECK_FALSE(validate(k3, stars));
  CHECK(stars.size() == 2);

  BicliquePartition twice{3, {}};
  twice.add(vs(3, {0}), vs(3, {1, 2}));
  twice.add(vs(3, {1}), vs(3, {0, 2}));
  auto bad = validate(k3, twice);
  REQUIRE(bad);
  CHECK(bad->kind == Violation::Kind::double_cover);
  CHECK(bad->u == 0);
  CHECK(bad->v == 1);
  CHECK(bad->block == 0u);
  CHECK(bad->other_block == 1u);

  BicliquePartition missing{3, {}};
  missing.add(vs(3, {0}), vs(3, {1, 2}));
  bad = validate(k3, missing);
  REQUIRE(bad);
  CHECK(bad->kind == Violation::Kind::uncovered_edge);
  CHECK(bad->u == 1);
  CHECK(bad->v == 2);

  BicliquePartition nonedge{3, {}};
  nonedge.add(vs(3, {0}), vs(3, {1, 2}));
  bad = validate(Graph::path(3), nonedge);
  REQUIRE(bad);
  CHECK(bad->kind == Violation::Kind::non_edge);

  BicliquePartition overlap{3, {}};
  overlap.add(vs(3, {0, 1}), vs(3, {1}));
  CHECK(validate(k3, overlap)->kind == Violation::Kind::malformed_block);
}

TEST_CASE("star decomposition") {
  const Seed s(9);
  CHECK(star_decomposition(Graph(5), VertexSet::full(5)).size() == 0);
  for (std::size_t n = 2; n <= 9; ++n) {
    const Graph k = Graph::complete(n);
    const auto p = star_decomposition(k, vs(n, {0}));
    CHECK(p.size() == n - 1);
    CHECK_FALSE(validate(k, p));
  }
  const Graph c5 = Graph::cycle(5);
  const VertexSet mis = independent_set(c5, VertexSet::full(5), Effort::exact(), s);
  const auto p = star_decomposition(c5, mis);
  CHECK(p.size() <= 3);
  CHECK_FALSE(validate(c5, p));
  for (const auto& b : p.blocks) CHECK(b.left.count() == 1);
  CHECK_THROWS_AS(star_decomposition(c5, vs(5, {0, 1})), PreconditionError);
}

TEST_CASE("star decomposition meets n - |I| on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gnp(60, 0.5, Seed(seed));
    const VertexSet i = independent_set(g, VertexSet::full(60), Effort::heuristic(4), Seed(seed));
    const auto p = star_decomposition(g, i);
    CHECK_FALSE(validate(g, p));
    CHECK(p.size() <= 60 - i.count());
  }
}

TEST_CASE("inertia") {
  CHECK(inertia_lower_bound(Graph(6)) == 0);
  for (std::size_t n = 2; n <= 12; ++n) CHECK(inertia_lower_bound(Graph::complete(n)) == n - 1);
  const Inertia c5 = adjacency_inertia(Graph::cycle(5));
  CHECK(c5.positive == 3);  // 2cos(2 pi k / 5): 2, 0.618, 0.618 positive
  CHECK(c5.negative == 2);
  CHECK(inertia_lower_bound(Graph::cycle(5)) == 3);
}

TEST_CASE("exact inertia agrees with floating eigenvalues") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 3 + seed % 30;
    const Graph g = gnp(n, 0.4, Seed(seed));
    const Inertia exact = adjacency_inertia(g);
    const Inertia approx = adjacency_inertia(g, 0);
    CHECK(exact.positive == approx.positive);
    CHECK(exact.negative == approx.negative);
    CHECK(exact.zero == approx.zero);
  }
}

TEST_CASE("exact bc examples") {
  CHECK(exact_bc(Graph::path(3))->bc == 1);
  CHECK(exact_bc(Graph::complete(4))->bc == 3);
  CHECK(exact_bc(Graph::cycle(5))->bc == 3);
  CHECK(exact_bc(Graph(4))->bc == 0);
  CHECK_FALSE(exact_bc(Graph::cycle(5), {.max_r = 2}));
  CHECK_THROWS_AS(exact_bc(Graph(15)), BudgetExceeded);
}

TEST_CASE("exact bc equals exact-cover oracle on every graph with at most 5 vertices") {
  for (unsigned n = 1; n <= 5; ++n) {
    const unsigned pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::graph_from_mask(n, mask);
      const auto res = exact_bc(g);
      REQUIRE(res);
      CHECK(res->bc == oracle::brute_force_bc(g));
      auto decoded = decode_labeling(g, res->witness);
      CHECK(std::holds_alternative<BicliquePartition>(decoded));
    }
  }
}

TEST_CASE("exact bc equals exact-cover oracle on random 6-vertex graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = gnp(6, 0.5, Seed(seed));
    CHECK(exact_bc(g)->bc == oracle::brute_force_bc(g));
  }
}

TEST_CASE("sandwich: inertia <= exact bc <= star decomposition") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 6 + seed % 7;  // 6..12
    const Graph g = gnp(n, 0.5, Seed(seed));
    const auto bc = exact_bc(g);
    REQUIRE(bc);
    const VertexSet mis = independent_set(g, VertexSet::full(n), Effort::exact(), Seed(seed));
    const auto stars = star_decomposition(g, mis);
    CHECK(inertia_lower_bound(g) <= bc->bc);
    CHECK(bc->bc <= stars.size());
  }
}

TEST_CASE("Graham-Pollak at desk scale") {
  for (std::size_t n = 2; n <= 8; ++n) CHECK(exact_bc(Graph::complete(n))->bc == n - 1);
}

TEST_CASE("labeling encode and decode reproduce the partition") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = gnp(30, 0.4, Seed(seed));
    const auto p = star_decomposition(g, independent_set(g, VertexSet::full(30), Effort::heuristic(2), Seed(seed)));
    if (p.size() > kMaxLabelDimension) continue;
    const VectorLabeling l = encode_partition(p);
    auto decoded = decode_labeling(g, l);
    REQUIRE(std::holds_alternative<BicliquePartition>(decoded));
    const auto& q = std::get<BicliquePartition>(decoded);
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(q.blocks[i].left == p.blocks[i].left);
      CHECK(q.blocks[i].right == p.blocks[i].right);
    }
  }
}

TEST_CASE("label strings") {
  const Label l = label_from_string("0122");
  CHECK(label_to_string(l, 4) == "0122");
  CHECK(l.support() == 0b0011);
  CHECK_THROWS_AS(label_from_string("013"), InvalidArgument);
}
