#pragma once

#include <vector>

#include "gframe/types.hpp"

namespace gframe {

/**
 * Eigendecomposition A = M diag(values) M^T of a real symmetric matrix.
 *
 * Nonzero eigenvalues come first in descending order, followed by the
 * `zero_count` eigenvalues that were clamped to exactly zero. Column j of
 * `vectors` is the unit eigenvector for values[j]; its first entry of
 * largest magnitude is positive.
 */
struct EigenDecomposition {
  std::vector<double> values;
  RealMatrix vectors;
  int zero_count = 0;
};

/**
 * Cyclic Jacobi eigendecomposition of a real symmetric matrix.
 *
 * The `expected_zero_count` eigenvalues of smallest magnitude must each be
 * below tol.zero; they are clamped to 0. Throws InvalidArgument on an
 * asymmetric input or a bad zero count, ConvergenceError when an expected
 * zero is too large or the residual contract cannot be met.
 */
EigenDecomposition symmetric_eig(const RealMatrix &a, int expected_zero_count,
                                 const Tolerances &tol = {});

/// Eigenvalues of a Hermitian matrix in ascending order.
std::vector<double> hermitian_eigenvalues(const Matrix &a, const Tolerances &tol = {});

/**
 * All eigenvalues (with multiplicity) of a small dense complex matrix.
 *
 * Orders 1 and 2 are solved in closed form. Larger matrices go through a
 * Householder reduction to Hessenberg form followed by single-shift complex
 * QR iteration with Wilkinson shifts and deflation.
 */
std::vector<Complex> small_complex_eigenvalues(const Matrix &a, const Tolerances &tol = {});

/// max |lambda| over the eigenvalues of a square matrix.
double spectral_radius(const Matrix &a, const Tolerances &tol = {});

/// Largest absolute entry.
double max_abs(const Matrix &a);
double max_abs(const RealMatrix &a);

/// ||U^* U - I||_max.
double unitarity_residual(const Matrix &u);

} // namespace gframe
