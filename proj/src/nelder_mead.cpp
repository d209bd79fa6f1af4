#include "nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace gframe::detail {

// Dimension-adaptive coefficients (Gao & Han) keep the simplex from
// collapsing in the 10-50 dimensional shift spaces searched here.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &objective,
                             std::vector<double> start, const NelderMeadOptions &opts,
                             const std::function<bool()> &exhausted) {
  using Point = std::vector<double>;
  const std::size_t dim = start.size();
  const double d = static_cast<double>(std::max<std::size_t>(dim, 1));
  const double expand = 1.0 + 2.0 / d;
  const double contract = 0.75 - 1.0 / (2.0 * d);
  const double shrink = 1.0 - 1.0 / d;

  NelderMeadResult result;
  result.value = std::numeric_limits<double>::infinity();
  auto eval = [&](const Point &x) -> std::optional<double> {
    if (exhausted())
      return std::nullopt;
    const double v = objective(x);
    if (v < result.value) {
      result.value = v;
      result.x = x;
    }
    return v;
  };

  std::vector<Point> simplex(dim + 1, start);
  std::vector<double> values(dim + 1);
  {
    auto v0 = eval(start);
    if (!v0)
      return result;
    values[0] = *v0;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    simplex[i + 1][i] += opts.initial_step;
    auto v = eval(simplex[i + 1]);
    if (!v)
      return result;
    values[i + 1] = *v;
  }

  std::vector<std::size_t> order(dim + 1);
  Point centroid(dim), trial(dim), trial2(dim);
  auto along = [&](const Point &from, double t, Point &out) {
    for (std::size_t j = 0; j < dim; ++j)
      out[j] = centroid[j] + t * (from[j] - centroid[j]);
  };

  for (; result.iterations < opts.max_iterations; ++result.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t lo = order.front(), hi = order.back(), second = order[dim > 0 ? dim - 1 : 0];
    if (values[hi] - values[lo] <= opts.tolerance) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i)
      if (i != hi)
        for (std::size_t j = 0; j < dim; ++j)
          centroid[j] += simplex[i][j] / d;

    along(simplex[hi], -1.0, trial);
    auto fr = eval(trial);
    if (!fr)
      break;
    if (*fr < values[lo]) {
      along(simplex[hi], -expand, trial2);
      auto fe = eval(trial2);
      if (fe && *fe < *fr) {
        simplex[hi] = trial2;
        values[hi] = *fe;
      } else {
        simplex[hi] = trial;
        values[hi] = *fr;
      }
      if (!fe)
        break;
      continue;
    }
    if (*fr < values[second]) {
      simplex[hi] = trial;
      values[hi] = *fr;
      continue;
    }
    const bool outside = *fr < values[hi];
    along(outside ? trial : simplex[hi], contract, trial2);
    auto fc = eval(trial2);
    if (!fc)
      break;
    if (*fc < (outside ? *fr : values[hi])) {
      simplex[hi] = trial2;
      values[hi] = *fc;
      continue;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == lo)
        continue;
      Point moved = simplex[i];
      for (std::size_t j = 0; j < dim; ++j)
        moved[j] = simplex[lo][j] + shrink * (simplex[i][j] - simplex[lo][j]);
      auto fs = eval(moved);
      if (!fs)
        return result;
      simplex[i] = std::move(moved);
      values[i] = *fs;
    }
  }
  return result;
}

} // namespace gframe::detail
