#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gframe/frames.hpp"

namespace gframe {

/// Sorted, duplicate-free set of 0-based frame indices, non-empty.
class ErasureSet {
public:
  /// Throws InvalidArgument on an empty set, duplicates or indices outside [0, n).
  ErasureSet(std::vector<int> indices, int n);

  std::span<const int> indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  friend bool operator==(const ErasureSet &, const ErasureSet &) = default;
  friend auto operator<=>(const ErasureSet &, const ErasureSet &) = default;

private:
  std::vector<int> indices_;
};

struct ErasureReport {
  ErasureSet lambda;
  Matrix full_operator;
  Matrix reduced;
  /// Eigenvalues of the k x k operator, largest magnitude first: the reduced
  /// spectrum padded with zeros (or trimmed of zeros when r > k).
  std::vector<Complex> eigenvalues;
  double radius = 0.0;
};

struct RhoOptions {
  /// Keep a full ErasureReport for every erasure set.
  bool keep_reports = false;
  /// Maximum number of erasure sets enumerated.
  std::uint64_t max_subsets = 1'000'000;
  Tolerances tol;
};

struct RhoResult {
  double radius = 0.0;
  ErasureSet witness;
  std::uint64_t evaluated = 0;
  std::vector<ErasureReport> reports;
};

/// Matrix of f -> sum_{i in lam} <f, phi_i> psi_i. Throws InvalidArgument
/// for a non-dual pair.
Matrix error_operator(const Frame &f, const DualFrame &d, const ErasureSet &lam, const Tolerances &tol = {});

/// r x r matrix with entry (a, b) = <psi_b, phi_a> over the sorted indices of
/// lam; shares its nonzero spectrum with the error operator.
Matrix reduced_error_matrix(const Frame &f, const DualFrame &d, const ErasureSet &lam, const Tolerances &tol = {});

ErasureReport erasure_report(const Frame &f, const DualFrame &d, const ErasureSet &lam, const Tolerances &tol = {});

/// Spectral radius of the error operator for lam, via the reduced matrix.
/// Performs no duality check.
double erasure_radius(const Frame &f, const DualFrame &d, std::span<const int> lam, const Tolerances &tol = {});

/**
 * Worst-case spectral radius over all erasure sets of size r.
 *
 * Enumerates every r-subset of [n] in lexicographic order. The witness is
 * the lexicographically smallest set whose radius is within 1e-10 of the
 * maximum. Throws InvalidArgument for r outside [1, n) or when C(n, r)
 * exceeds opts.max_subsets, and for a non-dual pair.
 */
RhoResult rho_r(const Frame &f, const DualFrame &d, int r, const RhoOptions &opts = {});

/// rho^(r) value only; no duality check, no reports. Used by the optimizers.
double rho_value(const Frame &f, const DualFrame &d, int r, const Tolerances &tol = {});

/// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial(int n, int r);

/// Advance `idx` (a strictly increasing r-subset of [0, n)) to its
/// lexicographic successor. Returns false after the last subset.
bool next_combination(std::vector<int> &idx, int n);

} // namespace gframe
