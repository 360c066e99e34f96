#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "podsurge/errors.hpp"
#include "podsurge/linalg.hpp"

using namespace podsurge;
using linalg::Matrix;

namespace {

double max_abs_diff_from_identity(const Matrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

Matrix reconstruct(const linalg::SvdResult& r) {
  Matrix us = r.u;
  for (std::size_t i = 0; i < us.rows(); ++i)
    for (std::size_t j = 0; j < us.cols(); ++j) us(i, j) *= r.singular_values[j];
  return linalg::matmul(us, r.vt);
}

}  // namespace

TEST_CASE("matmul identity and hand examples") {
  const Matrix a = oracles::random_matrix(3, 3, 1);
  const Matrix i3 = Matrix::identity(3);
  const Matrix prod = linalg::matmul(i3, a);
  for (std::size_t k = 0; k < a.size(); ++k)
    CHECK(prod.data()[k] == a.data()[k]);

  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix v = Matrix::from_rows({{0}, {1}});
  const Matrix mv = linalg::matmul(m, v);
  CHECK(mv(0, 0) == 2.0);
  CHECK(mv(1, 0) == 4.0);
}

TEST_CASE("matmul matches triple-loop oracle exactly") {
  const Matrix a = oracles::random_matrix(7, 5, 42);
  const Matrix b = oracles::random_matrix(5, 3, 43);
  const Matrix fast = linalg::matmul(a, b);
  const Matrix ref = oracles::matmul_naive(a, b);
  for (std::size_t k = 0; k < fast.size(); ++k)
    CHECK(fast.data()[k] == ref.data()[k]);
}

TEST_CASE("matmul rejects dimension mismatch") {
  CHECK_THROWS_AS(linalg::matmul(Matrix(2, 3), Matrix(2, 3)), ShapeError);
}

TEST_CASE("matmul associativity within 1e-9 relative") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Matrix a = oracles::random_matrix(6, 4, 100 + seed);
    const Matrix b = oracles::random_matrix(4, 8, 200 + seed);
    const Matrix c = oracles::random_matrix(8, 5, 300 + seed);
    const Matrix left = linalg::matmul(linalg::matmul(a, b), c);
    const Matrix right = linalg::matmul(a, linalg::matmul(b, c));
    CHECK(linalg::frobenius_relative_error(left, right) < 1e-9);
  }
}

TEST_CASE("svd of diagonal matrix") {
  Matrix d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 2.0;
  d(2, 2) = 1.0;
  const auto r = linalg::svd(d);
  REQUIRE(r.singular_values.size() == 3);
  CHECK(r.singular_values[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.singular_values[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.singular_values[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("svd of rank-1 outer product") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> dist;
  std::vector<double> u(6), v(4);
  double nu = 0.0, nv = 0.0;
  for (auto& x : u) { x = dist(rng); nu += x * x; }
  for (auto& x : v) { x = dist(rng); nv += x * x; }
  for (auto& x : u) x /= std::sqrt(nu);
  for (auto& x : v) x /= std::sqrt(nv);
  Matrix a(6, 4);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = u[i] * v[j];

  const auto r = linalg::svd(a);
  CHECK(r.singular_values[0] == doctest::Approx(1.0).epsilon(1e-10));
  for (std::size_t k = 1; k < r.singular_values.size(); ++k)
    CHECK(r.singular_values[k] == 0.0);
  // orthonormality must hold even for the completed null columns
  CHECK(max_abs_diff_from_identity(linalg::matmul(linalg::transpose(r.u), r.u)) < 1e-10);
  CHECK(linalg::frobenius_relative_error(a, reconstruct(r)) < 1e-8);
}

TEST_CASE("svd singular values match the A^T A eigen-oracle") {
  const Matrix a = oracles::random_matrix(20, 12, 99, -2.0, 2.0);
  const auto r = linalg::svd(a);
  const Matrix ata = oracles::matmul_naive(linalg::transpose(a), a);
  const auto ev = oracles::symmetric_eigenvalues(ata);
  REQUIRE(r.singular_values.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    const double expected = std::sqrt(std::max(0.0, ev[i]));
    CHECK(std::abs(r.singular_values[i] - expected) < 1e-9);
  }
}

TEST_CASE("svd result invariants on assorted shapes") {
  for (auto [m, n, seed] : {std::tuple<std::size_t, std::size_t, std::uint64_t>{9, 9, 1},
                            {15, 6, 2},
                            {6, 15, 3},
                            {1, 8, 4},
                            {8, 1, 5}}) {
    const Matrix a = oracles::random_matrix(m, n, seed);
    const auto r = linalg::svd(a);
    const std::size_t rank = std::min(m, n);
    REQUIRE(r.u.rows() == m);
    REQUIRE(r.u.cols() == rank);
    REQUIRE(r.vt.rows() == rank);
    REQUIRE(r.vt.cols() == n);
    for (std::size_t i = 0; i + 1 < rank; ++i)
      CHECK(r.singular_values[i] >= r.singular_values[i + 1]);
    CHECK(r.singular_values.back() >= 0.0);
    CHECK(max_abs_diff_from_identity(linalg::matmul(linalg::transpose(r.u), r.u)) < 1e-10);
    CHECK(max_abs_diff_from_identity(linalg::matmul(r.vt, linalg::transpose(r.vt))) < 1e-10);
    CHECK(linalg::frobenius_relative_error(a, reconstruct(r)) < 1e-8);
  }
}

TEST_CASE("svd is deterministic and rejects non-finite input") {
  const Matrix a = oracles::random_matrix(10, 7, 11);
  const auto r1 = linalg::svd(a);
  const auto r2 = linalg::svd(a);
  CHECK(r1.singular_values == r2.singular_values);
  CHECK(r1.u.data() == r2.u.data());
  CHECK(r1.vt.data() == r2.vt.data());

  Matrix bad(2, 2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(linalg::svd(bad), DomainError);
}

TEST_CASE("Frobenius energy equals sum of squared singular values") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Matrix a = oracles::random_matrix(12, 9, 500 + seed, -3.0, 3.0);
    const auto r = linalg::svd(a);
    double sum_sq = 0.0;
    for (double s : r.singular_values) sum_sq += s * s;
    const double fro_sq = linalg::frobenius_norm(a) * linalg::frobenius_norm(a);
    CHECK(std::abs(fro_sq - sum_sq) < 1e-8 * fro_sq);
  }
}

TEST_CASE("frobenius_relative_error examples") {
  const Matrix a = oracles::random_matrix(5, 5, 77);
  CHECK(linalg::frobenius_relative_error(a, a) == 0.0);
  CHECK(linalg::frobenius_relative_error(a, Matrix(5, 5)) == doctest::Approx(1.0));

  Matrix scaled = a;
  for (double& v : scaled.data()) v *= 1.0 + 1e-3;
  CHECK(std::abs(linalg::frobenius_relative_error(a, scaled) - 1e-3) < 1e-12);

  CHECK_THROWS_AS(linalg::frobenius_relative_error(a, Matrix(4, 5)), ShapeError);
  CHECK_THROWS_AS(linalg::frobenius_relative_error(Matrix(3, 3), Matrix(3, 3)),
                  DomainError);
}
