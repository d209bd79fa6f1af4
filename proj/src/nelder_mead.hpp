#pragma once

#include <functional>
#include <vector>

namespace gframe::detail {

struct NelderMeadOptions {
  int max_iterations = 200;
  /// Stop once the spread of simplex values falls to this level.
  double tolerance = 1e-10;
  double initial_step = 0.25;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Minimize `objective` from `start`. Evaluation stops as soon as
/// `exhausted` reports true; the best point evaluated so far is returned.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &objective,
                             std::vector<double> start, const NelderMeadOptions &opts,
                             const std::function<bool()> &exhausted);

} // namespace gframe::detail
