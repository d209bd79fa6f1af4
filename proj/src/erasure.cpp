#include "gframe/erasure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace gframe {

namespace {

constexpr double kTieWidth = 1e-10;

__extension__ using Wide = unsigned __int128;

void require_dual(const Frame &f, const DualFrame &d, const Tolerances &tol) {
  auto check = is_dual(f, d, tol.dual);
  if (!check.ok)
    throw InvalidArgument("not a dual pair (residual " + std::to_string(check.residual) + ")");
}

Matrix reduced_unchecked(const Frame &f, const DualFrame &d, std::span<const int> lam) {
  const auto r = static_cast<Eigen::Index>(lam.size());
  Matrix m(r, r);
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index b = 0; b < r; ++b)
      m(a, b) = f.synthesis().col(lam[a]).dot(d.vectors.col(lam[b]));
  return m;
}

} // namespace

ErasureSet::ErasureSet(std::vector<int> indices, int n) : indices_(std::move(indices)) {
  if (indices_.empty())
    throw InvalidArgument("erasure set must be non-empty");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw InvalidArgument("erasure set has repeated indices");
  if (indices_.front() < 0 || indices_.back() >= n)
    throw InvalidArgument("erasure index outside [1, " + std::to_string(n) + "]");
}

Matrix error_operator(const Frame &f, const DualFrame &d, const ErasureSet &lam, const Tolerances &tol) {
  require_dual(f, d, tol);
  const int k = f.dimension();
  Matrix e = Matrix::Zero(k, k);
  for (int i : lam.indices())
    e += d.vectors.col(i) * f.synthesis().col(i).adjoint();
  return e;
}

Matrix reduced_error_matrix(const Frame &f, const DualFrame &d, const ErasureSet &lam, const Tolerances &tol) {
  require_dual(f, d, tol);
  return reduced_unchecked(f, d, lam.indices());
}

double erasure_radius(const Frame &f, const DualFrame &d, std::span<const int> lam, const Tolerances &tol) {
  if (lam.size() == 1)
    return std::abs(f.synthesis().col(lam[0]).dot(d.vectors.col(lam[0])));
  return spectral_radius(reduced_unchecked(f, d, lam), tol);
}

ErasureReport erasure_report(const Frame &f, const DualFrame &d, const ErasureSet &lam, const Tolerances &tol) {
  Matrix full = error_operator(f, d, lam, tol);
  Matrix reduced = reduced_unchecked(f, d, lam.indices());
  std::vector<Complex> eig = small_complex_eigenvalues(reduced, tol);
  // Already sorted by descending magnitude, so trimming drops the smallest.
  eig.resize(static_cast<std::size_t>(f.dimension()), Complex(0.0));
  double radius = 0.0;
  for (const auto &z : eig)
    radius = std::max(radius, std::abs(z));
  return ErasureReport{lam, std::move(full), std::move(reduced), std::move(eig), radius};
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n)
    return 0;
  r = std::min(r, n - r);
  Wide acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

bool next_combination(std::vector<int> &idx, int n) {
  const int r = static_cast<int>(idx.size());
  int i = r - 1;
  while (i >= 0 && idx[i] == n - r + i)
    --i;
  if (i < 0)
    return false;
  ++idx[i];
  for (int j = i + 1; j < r; ++j)
    idx[j] = idx[j - 1] + 1;
  return true;
}

RhoResult rho_r(const Frame &f, const DualFrame &d, int r, const RhoOptions &opts) {
  const int n = f.size();
  if (r < 1 || r >= n)
    throw InvalidArgument("erasure order r must lie in [1, " + std::to_string(n - 1) + "]");
  const std::uint64_t count = binomial(n, r);
  if (count > opts.max_subsets)
    throw InvalidArgument("C(" + std::to_string(n) + "," + std::to_string(r) + ") = " + std::to_string(count) +
                          " erasure sets exceed the enumeration budget");
  require_dual(f, d, opts.tol);

  std::vector<double> radii;
  radii.reserve(count);
  std::vector<ErasureReport> reports;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    if (opts.keep_reports) {
      reports.push_back(erasure_report(f, d, ErasureSet(idx, n), opts.tol));
      radii.push_back(reports.back().radius);
    } else {
      radii.push_back(erasure_radius(f, d, idx, opts.tol));
    }
  } while (next_combination(idx, n));

  const double best = *std::max_element(radii.begin(), radii.end());
  // Radii are in lexicographic order; the first near-maximal one is the witness.
  std::size_t pos = 0;
  while (radii[pos] < best - kTieWidth)
    ++pos;
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t step = 0; step < pos; ++step)
    next_combination(idx, n);

  return RhoResult{best, ErasureSet(idx, n), radii.size(), std::move(reports)};
}

double rho_value(const Frame &f, const DualFrame &d, int r, const Tolerances &tol) {
  const int n = f.size();
  if (r < 1 || r >= n)
    throw InvalidArgument("erasure order r must lie in [1, " + std::to_string(n - 1) + "]");
  double best = 0.0;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    best = std::max(best, erasure_radius(f, d, idx, tol));
  } while (next_combination(idx, n));
  return best;
}

} // namespace gframe
