#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_int.hpp>

#include "partition.hpp"

namespace bcp {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Sylvester inertia by symmetric elimination A -> E A E^T over the rationals.
// A zero diagonal with a nonzero off-diagonal entry a_ij is repaired by adding
// row/column j to row/column i, which makes the new a_ii = 2 a_ij + a_jj.
Inertia exact_inertia(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (Vertex u = 0; u < n; ++u)
    g.neighbors(u).for_each([&](Vertex v) { a[u][v] = 1; });

  Inertia out;
  std::size_t k = 0;
  while (k < n) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (a[i][i] != 0) piv = i;

    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // trailing block is zero
      for (std::size_t c = k; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = k; r < n; ++r) a[r][pi] += a[r][pj];
      piv = pi;
    }

    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (auto& row : a) std::swap(row[piv], row[k]);
    }
    const Rational d = a[k][k];
    (d > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / d;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    ++k;
  }
  out.zero = n - out.positive - out.negative;
  return out;
}

Inertia float_inertia(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < g.size(); ++u)
    g.neighbors(u).for_each([&](Vertex v) { a(u, v) = 1.0; });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const double eps = 1e-9 * static_cast<double>(n);
  Inertia out;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = solver.eigenvalues()(i);
    if (x > eps)
      ++out.positive;
    else if (x < -eps)
      ++out.negative;
    else
      ++out.zero;
  }
  return out;
}

}  // namespace

Inertia adjacency_inertia(const Graph& g, std::size_t exact_limit) {
  return g.size() <= exact_limit ? exact_inertia(g) : float_inertia(g);
}

}  // namespace bcp
