// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "fixtures.hpp"

using namespace gframe;
using namespace gframe::testing;

namespace {

// Pinned tolerances.
constexpr double kValueTol = 1e-9;
constexpr double kSpectrumTol = 1e-8;
constexpr double kDifferMin = 1e-3;
constexpr double kViolationSlack = 1e-10;
constexpr double kLowerBoundSlack = 1e-8;
constexpr double kOracleTol = 1e-8;
constexpr double kOracleZero = 1e-6;
constexpr double kUnitaryTol = 1e-8;
constexpr double kSearchTol = 1e-6;

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool passed = true;
  double worst = 0.0;
  std::string note;

  void expect(bool ok, const std::string &what) {
    if (!ok && passed)
      note = what;
    passed = passed && ok;
  }
  void within(double residual, double tol, const std::string &what) {
    worst = std::max(worst, residual);
    expect(residual <= tol, what + " residual " + std::to_string(residual));
  }
};

double column_distance(const DualFrame &a, const DualFrame &b) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < a.vectors.cols(); ++c)
    best = std::max(best, (a.vectors.col(c) - b.vectors.col(c)).norm());
  return best;
}

DualFrame shifted_dual(const Frame &f) {
  DualParams p = DualParams::zero(f);
  p.shifts[0](2) = 1.0;
  return dual_from_params(f, p);
}

Outcome triangle_edge_one_erasure() {
  Outcome o;
  const Graph g = triangle_and_edge();
  const Frame f = lg_frame(g);
  o.within(max_abs(Matrix(gramian(f) - laplacian(g).cast<double>().cast<Complex>())), kValueTol, "gramian");
  const DualFrame d = canonical_dual(f);
  o.within(std::abs(rho_r(f, d, 1).radius - 2.0 / 3), kValueTol, "rho1");
  const auto z = diagonal_pairings(f, d);
  const double want[] = {2.0 / 3, 2.0 / 3, 2.0 / 3, 0.5, 0.5};
  for (int i = 0; i < 5; ++i)
    o.within(std::abs(std::abs(z[i]) - want[i]), kValueTol, "pairing " + std::to_string(i + 1));
  return o;
}

Outcome triangle_edge_two_erasures() {
  Outcome o;
  const Frame f = lg_frame(triangle_and_edge());
  const DualFrame d = canonical_dual(f);
  // {1,2} {1,3} {1,4} {1,5} {2,3} {2,4} {2,5} {3,4} {3,5} {4,5}
  const double want[] = {1, 1, 2.0 / 3, 2.0 / 3, 1, 2.0 / 3, 2.0 / 3, 2.0 / 3, 2.0 / 3, 1};
  std::vector<int> idx{0, 1};
  int p = 0;
  do {
    o.within(std::abs(erasure_radius(f, d, idx) - want[p]), kValueTol,
             "pair {" + std::to_string(idx[0] + 1) + "," + std::to_string(idx[1] + 1) + "}");
    ++p;
  } while (next_combination(idx, 5));
  o.within(std::abs(rho_r(f, d, 2).radius - 1.0), kValueTol, "rho2");
  const DualFrame psi1 = shifted_dual(f);
  o.within(std::abs(rho_r(f, psi1, 1).radius - 2.0 / 3), kValueTol, "shifted rho1");
  o.within(std::abs(rho_r(f, psi1, 2).radius - 1.0), kValueTol, "shifted rho2");
  return o;
}

Outcome connected_law() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<int> size(2, 8);
  for (int t = 0; t < 50; ++t) {
    const int n = size(rng);
    const Frame f = lg_frame(random_connected_graph(n, rng));
    const DualFrame d = canonical_dual(f);
    for (const auto &z : diagonal_pairings(f, d))
      o.within(std::abs(std::abs(z) - (n - 1.0) / n), kValueTol, "pairing");
    std::vector<int> idx{0, 1};
    do {
      const auto eig = small_complex_eigenvalues(reduced_error_matrix(f, d, ErasureSet(idx, n)));
      o.expect(same_multiset(eig, {1.0, (n - 2.0) / n}, kSpectrumTol), "pair spectrum n=" + std::to_string(n));
    } while (next_combination(idx, n));
    if (n > 2)
      o.within(std::abs(rho_r(f, d, 2).radius - 1.0), kValueTol, "rho2");
  }
  return o;
}

Outcome disconnected_law() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 4);
  for (int t = 0; t < 50; ++t) {
    const Frame f = lg_frame(random_disconnected_graph(rng));
    const DualFrame d = canonical_dual(f);
    const double rho1 = rho_r(f, d, 1).radius;
    const double rho2 = rho_r(f, d, 2).radius;
    double predicted = 0.0;
    for (int s : f.layout().sizes)
      predicted = std::max(predicted, (s - 1.0) / s);
    o.within(std::abs(rho1 - predicted), kValueTol, "rho1");
    o.within(std::abs(rho2 - 1.0), kValueTol, "rho2");
    for (int r = 1; r <= 2; ++r) {
      const DualFrame alt = alternate_sod_dual(f, r);
      o.expect(is_dual(f, alt, Tolerances{}.dual).ok, "alternate dual is dual");
      o.expect(column_distance(alt, d) >= kDifferMin, "alternate dual differs");
      o.within(std::abs(rho_r(f, alt, 1).radius - rho1), kValueTol, "alternate rho1");
      o.within(std::abs(rho_r(f, alt, 2).radius - rho2), kValueTol, "alternate rho2");
    }
  }
  return o;
}

Outcome uniqueness_strictness() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);
  const std::vector<Graph> graphs{complete_graph(3), complete_graph(4), random_connected_graph(6, rng)};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto rep = uniqueness_probe(lg_frame(graphs[i]), 100, kSeed + i);
    o.expect(rep.violations == 0, "violations on graph " + std::to_string(i));
    o.expect(rep.min_excess > 0.0, "non-positive excess on graph " + std::to_string(i));
    o.expect(rep.min_excess > -kViolationSlack, "excess below slack");
  }
  return o;
}

Outcome two_erasure_lower_bound() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_real_distribution<double> expo(-3.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const Graph g = t % 2 ? random_connected_graph(3 + t % 6, rng) : random_disconnected_graph(rng);
    const Frame f = lg_frame(g);
    const DualFrame d = dual_from_params(f, random_params(f, rng, std::pow(10.0, expo(rng))));
    const double rho2 = rho_r(f, d, 2).radius;
    o.expect(rho2 >= 1.0 - kLowerBoundSlack, "rho2 " + std::to_string(rho2));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 7);
  for (int t = 0; t < 200; ++t) {
    const Graph g = t % 2 ? random_connected_graph(2 + t % 8, rng) : random_disconnected_graph(rng);
    const Frame f = lg_frame(g);
    const DualFrame d = dual_from_params(f, random_params(f, rng, 2.0));
    const int r = 1 + t % std::min(4, f.size());
    std::vector<int> all(f.size());
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    const ErasureSet lam(std::vector<int>(all.begin(), all.begin() + r), f.size());
    const auto reduced = small_complex_eigenvalues(reduced_error_matrix(f, d, lam));
    const auto full = oracle_eigenvalues(error_operator(f, d, lam));
    o.expect(same_multiset(nonzero(reduced, kOracleZero), nonzero(full, kOracleZero), kOracleTol),
             "case " + std::to_string(t));
  }
  return o;
}

Outcome unitary_invariance() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 8);
  const Frame f = lg_frame(triangle_and_edge());
  const std::vector<DualFrame> duals{canonical_dual(f), shifted_dual(f), alternate_sod_dual(f, 2),
                                     dual_from_params(f, random_params(f, rng, 1.0))};
  for (int t = 0; t < 20; ++t) {
    const Matrix u = random_unitary(3, rng);
    const Frame g = apply_unitary(f, u);
    for (const auto &d : duals) {
      const DualFrame e = apply_unitary(d, u);
      for (int r = 1; r <= 2; ++r)
        o.within(std::abs(rho_r(g, e, r).radius - rho_r(f, d, r).radius), kUnitaryTol, "rho" + std::to_string(r));
    }
  }
  return o;
}

Outcome search_non_improvement() {
  Outcome o;
  struct Case {
    Graph graph;
    int r;
    double theory;
    bool tie;
  };
  const std::vector<Case> cases{{complete_graph(3), 1, 2.0 / 3, false},
                                {complete_graph(3), 2, 1.0, false},
                                {triangle_and_edge(), 1, 2.0 / 3, true},
                                {triangle_and_edge(), 2, 1.0, true}};
  for (const auto &c : cases) {
    const auto rep = search_optimal_dual(lg_frame(c.graph), c.r, SearchConfig{.seed = kSeed});
    const std::string tag = "n=" + std::to_string(c.graph.vertex_count()) + " r=" + std::to_string(c.r);
    o.expect(!rep.improved, tag + " improved");
    o.within(std::abs(rep.best_rho - c.theory), kSearchTol, tag + " best");
    if (c.tie)
      o.expect(rep.optimal_points.size() >= 2, tag + " fewer than two optimal points");
  }
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"triangle plus edge: gramian, rho1, diagonal pairings", triangle_edge_one_erasure},
      {"triangle plus edge: ten 2-erasure radii, rho2, shifted dual ties", triangle_edge_two_erasures},
      {"connected graphs: pairings (n-1)/n, pair spectra {1,(n-2)/n}, rho2 = 1", connected_law},
      {"disconnected graphs: rho1, rho2 and tying alternate duals", disconnected_law},
      {"connected graphs: every nonzero shift is strictly worse", uniqueness_strictness},
      {"random duals: rho2 >= 1", two_erasure_lower_bound},
      {"reduced and full error-operator spectra agree", oracle_equivalence},
      {"rho1 and rho2 are unitarily invariant", unitary_invariance},
      {"dual search finds no improvement and exhibits ties", search_non_improvement},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s  %s (max residual %.2e, %.2fs)%s%s\n", i + 1, o.passed ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.worst, secs, o.note.empty() ? "" : ": ", o.note.c_str());
    failures += !o.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
