#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gframe/erasure.hpp"

namespace gframe {

enum class Uniqueness { unique, non_unique, undetermined };

const char *to_string(Uniqueness u);

/// One verified statement with its numerical residual.
struct Claim {
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

/**
 * Outcome of checking the spectral optimality of the canonical dual for
 * erasure order r (1 or 2).
 */
struct SodReport {
  int r = 1;
  /// Closed-form optimum for graph frames.
  double predicted = 0.0;
  /// rho^(r) of the canonical dual.
  double measured = 0.0;
  bool canonical_optimal = false;
  Uniqueness unique = Uniqueness::undetermined;
  /// Shift parameters of duals attaining the optimum (canonical first).
  std::vector<DualParams> witnesses;
  std::vector<Claim> details;
  std::vector<std::string> notes;

  bool all_passed() const;
};

struct SearchConfig {
  /// Grid covers [-grid_extent, grid_extent] on every axis.
  double grid_extent = 1.0;
  int grid_steps = 5;
  int refine_iters = 200;
  double refine_tol = 1e-10;
  std::uint64_t seed = 0;
  /// Maximum objective evaluations after the canonical baseline.
  std::int64_t budget = 20000;
  /// Extra random simplex starts drawn from the grid box.
  int random_starts = 2;
};

struct SearchReport {
  int r = 1;
  DualParams best_params;
  double best_rho = 0.0;
  double canonical_rho = 0.0;
  std::int64_t evaluations = 0;
  bool improved = false;
  /// Mutually distant (>= 1e-2) parameter points within 1e-6 of best_rho.
  /// For r = 2 they must also be within 1e-6 of the smallest rho^(1) among
  /// those points, since 2-erasure optima are taken among 1-erasure optima.
  std::vector<DualParams> optimal_points;
};

struct ProbeReport {
  int trials = 0;
  double min_excess = 0.0;
  int violations = 0;
};

struct VerifyOptions {
  int probe_trials = 100;
  int random_duals = 50;
  std::uint64_t seed = 0;
  /// Agreement tolerance for closed-form values.
  double tolerance = 1e-9;
  Tolerances tol;
};

/// (n-1)/n for connected graphs, max_j (n_j-1)/n_j otherwise.
double predict_rho1(const Frame &f);

/// 1 for every graph frame with a component of size >= 2.
double predict_rho2(const Frame &f);

/// True iff |<psi_i, phi_i>| = k/n for all i (within 1e-9). In that case
/// rho^(1) is checked to equal k/n as well; a mismatch throws std::logic_error.
bool check_uniform_diagonal(const Frame &f, const DualFrame &d, const Tolerances &tol = {});

/**
 * Shift parameters of the explicit alternate optimal dual of a frame from a
 * disconnected graph.
 *
 * A donor component receives a shift supported on coordinates outside its
 * own block, which leaves every error-operator spectrum unchanged. For r = 1
 * the shift is 1 on every such coordinate; for r = 2 it is the unit vector
 * of the first such coordinate. The donor is the first component unless its
 * block spans all coordinates, in which case it is the first singleton.
 * Throws InvalidArgument for connected graphs or r outside {1, 2}.
 */
DualParams alternate_sod_params(const Frame &f, int r);
DualFrame alternate_sod_dual(const Frame &f, int r, const Tolerances &tol = {});

/// Random shift parameters, real and imaginary parts uniform in [-extent, extent].
DualParams random_params(const Frame &f, std::mt19937_64 &rng, double extent);

/// Flatten shift parameters to 2*m*k reals (re, im interleaved) and back.
std::vector<double> pack_params(const DualParams &p);
DualParams unpack_params(const Frame &f, const std::vector<double> &x);

/**
 * Minimize rho^(r) over the dual family by an axis grid followed by
 * Nelder-Mead refinement. Throws InvalidArgument for r outside {1, 2} or a
 * budget that cannot cover one grid pass (budget 0 returns the canonical
 * baseline).
 */
SearchReport search_optimal_dual(const Frame &f, int r, const SearchConfig &cfg = {}, const Tolerances &tol = {});

/**
 * Sample nonzero shifts mu with ||mu|| in [1e-3, 10] and record the excess
 * rho^(1) - (n-1)/n. Requires a connected graph frame.
 */
ProbeReport uniqueness_probe(const Frame &f, int trials, std::uint64_t seed, const Tolerances &tol = {});

SodReport verify_sod(const Frame &f, int r, const VerifyOptions &opts = {});

} // namespace gframe
