#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gframe {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/**
 * Numerical thresholds shared by every module. Defaults are sized for
 * desk-scale graphs (n up to a few hundred).
 */
struct Tolerances {
  /// Reconstruction / orthonormality residual bound for eigensolvers.
  double eig = 1e-9;
  /// Eigenvalues expected to vanish must lie below this magnitude.
  double zero = 1e-7;
  /// Duality residual bound ||Psi Phi^* - I||_max.
  double dual = 1e-8;
  /// Asymmetry accepted by the symmetric eigensolver.
  double symmetry = 1e-12;
  /// Unitarity residual accepted by apply_unitary.
  double unitary = 1e-9;
  int jacobi_max_sweeps = 100;
  /// Per-eigenvalue iteration budget of the complex QR iteration.
  int qr_max_iterations = 60;
};

/// Malformed input: edge lists, JSON documents, parameter files.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition of an operation.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative kernel failed to meet its residual contract.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace gframe
