#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace gframe;
using namespace gframe::testing;

namespace {

RealMatrix random_symmetric(int n, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss;
  RealMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      a(i, j) = a(j, i) = gauss(rng);
  return a;
}

long long eval(const std::vector<long long> &c, long long x) {
  long long acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::vector<long long> derivative(const std::vector<long long> &c) {
  std::vector<long long> d;
  for (std::size_t i = 1; i < c.size(); ++i)
    d.push_back(static_cast<long long>(i) * c[i]);
  return d;
}

} // namespace

TEST_CASE("laplacian of K3 has eigenvalues {3, 3, 0}") {
  const IntMatrix l = laplacian(complete_graph(3));
  // det(xI - L) = x (x - 3)^2 = x^3 - 6x^2 + 9x.
  const auto p = characteristic_polynomial(l);
  CHECK(p == std::vector<long long>{0, 9, -6, 1});
  CHECK(eval(p, 3) == 0);
  CHECK(eval(derivative(p), 3) == 0);
  CHECK(eval(p, 0) == 0);

  const auto dec = symmetric_eig(l.cast<double>(), 1);
  REQUIRE(dec.values.size() == 3);
  CHECK(dec.values[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(dec.values[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(dec.values[2] == 0.0);
  CHECK(dec.zero_count == 1);
}

TEST_CASE("symmetric_eig on the triangle plus edge") {
  const auto dec = symmetric_eig(laplacian(triangle_and_edge()).cast<double>(), 2);
  const std::vector<double> want{3, 3, 2, 0, 0};
  for (int i = 0; i < 5; ++i)
    CHECK(std::abs(dec.values[i] - want[i]) < 1e-12);
}

TEST_CASE("symmetric_eig matches an independent solver") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 12;
    const RealMatrix a = random_symmetric(n, rng);
    const auto dec = symmetric_eig(a, 0);
    auto ours = dec.values;
    std::sort(ours.begin(), ours.end());
    const auto oracle = oracle_symmetric_eigenvalues(a);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(ours[i] - oracle[i]) < 1e-10);

    const RealMatrix rebuilt =
        dec.vectors * Eigen::Map<const RealVector>(dec.values.data(), n).asDiagonal() * dec.vectors.transpose();
    CHECK(max_abs(RealMatrix(rebuilt - a)) < 1e-10);
    CHECK(max_abs(RealMatrix(dec.vectors.transpose() * dec.vectors - RealMatrix::Identity(n, n))) < 1e-12);
    CHECK(std::is_sorted(dec.values.rbegin(), dec.values.rend()));
  }
}

TEST_CASE("symmetric_eig sign convention") {
  std::mt19937_64 rng(5);
  const auto dec = symmetric_eig(random_symmetric(6, rng), 0);
  for (int c = 0; c < 6; ++c) {
    const auto col = dec.vectors.col(c);
    const double big = col.cwiseAbs().maxCoeff();
    int first = 0;
    while (std::abs(col(first)) < big - 1e-12)
      ++first;
    CHECK(col(first) > 0);
  }
}

TEST_CASE("symmetric_eig errors") {
  RealMatrix asym(2, 2);
  asym << 1, 2, 3, 4;
  CHECK_THROWS_AS(symmetric_eig(asym, 0), InvalidArgument);
  CHECK_THROWS_AS(symmetric_eig(RealMatrix::Identity(2, 3), 0), InvalidArgument);
  CHECK_THROWS_AS(symmetric_eig(RealMatrix::Identity(2, 2), 3), InvalidArgument);
  // The identity has no zero eigenvalue.
  CHECK_THROWS_AS(symmetric_eig(RealMatrix::Identity(3, 3), 1), ConvergenceError);
}

TEST_CASE("small_complex_eigenvalues closed forms") {
  Matrix one(1, 1);
  one << Complex(2, -1);
  CHECK(small_complex_eigenvalues(one) == std::vector<Complex>{Complex(2, -1)});

  Matrix rot(2, 2);
  rot << 0, -1, 1, 0;
  auto eig = small_complex_eigenvalues(rot);
  CHECK(same_multiset(eig, {Complex(0, 1), Complex(0, -1)}, 1e-14));

  Matrix jordan(2, 2);
  jordan << 1, 1, 0, 1;
  eig = small_complex_eigenvalues(jordan);
  CHECK(same_multiset(eig, {1.0, 1.0}, 1e-12));

  Matrix nil = Matrix::Zero(3, 3);
  nil(0, 1) = 1;
  nil(1, 2) = 1;
  CHECK(spectral_radius(nil) < 1e-5);

  Matrix diag = Matrix::Zero(3, 3);
  diag.diagonal() << 1, -4, 2;
  eig = small_complex_eigenvalues(diag);
  CHECK(std::abs(eig[0] - Complex(-4)) < 1e-14);
  CHECK(spectral_radius(diag) == doctest::Approx(4.0));
}

TEST_CASE("small_complex_eigenvalues matches an independent solver") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 120; ++t) {
    const int r = 1 + t % 8;
    const Matrix a = random_complex_matrix(r, r, rng);
    const auto ours = small_complex_eigenvalues(a);
    CHECK(same_multiset(ours, oracle_eigenvalues(a), 1e-9));
    for (std::size_t i = 1; i < ours.size(); ++i)
      CHECK(std::abs(ours[i - 1]) >= std::abs(ours[i]) - 1e-15);
  }
}

TEST_CASE("small_complex_eigenvalues on rank-deficient products") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const int r = 2 + t % 5;
    const int k = 1 + t % 3;
    const Matrix a = random_complex_matrix(r, k, rng) * random_complex_matrix(k, r, rng);
    CHECK(same_multiset(nonzero(small_complex_eigenvalues(a), 1e-6), nonzero(oracle_eigenvalues(a), 1e-6), 1e-8));
  }
}

TEST_CASE("hermitian_eigenvalues matches an independent solver") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 7;
    const Matrix b = random_complex_matrix(n, n, rng);
    const Matrix h = b + b.adjoint();
    const auto ours = hermitian_eigenvalues(h);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(ours[i] - es.eigenvalues()(i)) < 1e-10);
  }
}

TEST_CASE("unitarity residual") {
  std::mt19937_64 rng(3);
  CHECK(unitarity_residual(random_unitary(4, rng)) < 1e-12);
  CHECK(unitarity_residual(Matrix::Identity(3, 3) * 2.0) == doctest::Approx(3.0));
}
