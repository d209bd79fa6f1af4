#include "gframe/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

namespace gframe {

const char *const kTriangleAndEdge = "n 5\n1 2\n1 3\n2 3\n4 5\n";

namespace {

struct Fixture {
  Graph graph = parse_edge_list(kTriangleAndEdge);
  Frame frame = lg_frame(graph);
  Frame explicit_frame;
  DualFrame explicit_dual;
  DualFrame shifted_dual;
  std::vector<Matrix> operators;
  std::vector<double> radii;
};

Matrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto &row : rows) {
    Eigen::Index c = 0;
    for (double v : row)
      m(r, c++) = v;
    ++r;
  }
  return m;
}

Fixture make_fixture() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  const Matrix phi = real_matrix({{s3 / s2, 0, -s3 / s2, 0, 0}, {-1 / s2, s2, -1 / s2, 0, 0}, {0, 0, 0, 1, -1}});
  const Matrix psi = real_matrix(
      {{1 / s6, 0, -1 / s6, 0, 0}, {-1 / (3 * s2), 2 / (3 * s2), -1 / (3 * s2), 0, 0}, {0, 0, 0, 0.5, -0.5}});
  Matrix psi1 = psi;
  psi1.block(2, 0, 1, 3).setOnes();

  const double h = 1 / (2 * s3);
  const Matrix e12 = real_matrix({{0.5, -h, 0}, {-h, 5.0 / 6, 0}, {0, 0, 0}});
  const Matrix e13 = real_matrix({{1, 0, 0}, {0, 1.0 / 3, 0}, {0, 0, 0}});
  const Matrix e23 = real_matrix({{0.5, h, 0}, {h, 5.0 / 6, 0}, {0, 0, 0}});
  const Matrix e45 = real_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  const Matrix e14 = real_matrix({{0.5, -h, 0}, {-h, 1.0 / 6, 0}, {0, 0, 0.5}});
  const Matrix e24 = real_matrix({{0, 0, 0}, {0, 2.0 / 3, 0}, {0, 0, 0.5}});
  const Matrix e34 = real_matrix({{0.5, h, 0}, {h, 1.0 / 6, 0}, {0, 0, 0.5}});

  Fixture fx{.explicit_frame = Frame(phi, ComponentDecomposition::from_sizes({3, 2}), {3, 3, 2}),
             .explicit_dual = DualFrame{psi, std::nullopt},
             .shifted_dual = DualFrame{psi1, std::nullopt},
             // Lexicographic pairs {1,2}, {1,3}, {1,4}, {1,5}, {2,3}, ..., {4,5}.
             .operators = {e12, e13, e14, e14, e23, e24, e24, e34, e34, e45},
             .radii = {1, 1, 2.0 / 3, 2.0 / 3, 1, 2.0 / 3, 2.0 / 3, 2.0 / 3, 2.0 / 3, 1}};
  return fx;
}

std::vector<std::vector<int>> pairs(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx{0, 1};
  do
    out.push_back(idx);
  while (next_combination(idx, n));
  return out;
}

double radii_residual(const Frame &f, const DualFrame &d, const std::vector<double> &expected) {
  double worst = 0.0;
  const auto all = pairs(f.size());
  for (std::size_t p = 0; p < all.size(); ++p)
    worst = std::max(worst, std::abs(erasure_radius(f, d, all[p]) - expected[p]));
  return worst;
}

double gap(const Matrix &a, const Matrix &b) { return max_abs(Matrix(a - b)); }

struct Outcome {
  double residual;
  bool extra_ok = true;
};

} // namespace

bool ReproduceResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproduceCheck &c) { return c.passed; });
}

ReproduceResult reproduce_examples(double tolerance) {
  ReproduceResult result;
  result.tolerance = tolerance;
  std::optional<Fixture> fx;
  try {
    fx = make_fixture();
  } catch (const std::exception &) {
  }

  auto run = [&](const std::string &name, const std::function<Outcome(const Fixture &)> &body) {
    ReproduceCheck c{static_cast<int>(result.checks.size()) + 1, name, false,
                     std::numeric_limits<double>::infinity()};
    if (fx) {
      try {
        const Outcome o = body(*fx);
        c.residual = o.residual;
        c.passed = o.extra_ok && o.residual <= tolerance;
      } catch (const std::exception &) {
      }
    }
    result.checks.push_back(c);
  };

  const IntMatrix expected_laplacian = [] {
    IntMatrix l(5, 5);
    l << 2, -1, -1, 0, 0, -1, 2, -1, 0, 0, -1, -1, 2, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, -1, 1;
    return l;
  }();
  const Matrix lap = expected_laplacian.cast<double>().cast<Complex>();

  run("laplacian matches", [&](const Fixture &f) {
    return Outcome{static_cast<double>((laplacian(f.graph) - expected_laplacian).cwiseAbs().maxCoeff())};
  });
  run("gramian of L_G frame equals L", [&](const Fixture &f) { return Outcome{gap(gramian(f.frame), lap)}; });
  run("gramian of explicit frame equals L",
      [&](const Fixture &f) { return Outcome{gap(gramian(f.explicit_frame), lap)}; });
  run("frame operator is diag(3, 3, 2)", [&](const Fixture &f) {
    Matrix s = Matrix::Zero(3, 3);
    s.diagonal() << 3, 3, 2;
    return Outcome{gap(frame_operator(f.frame), s)};
  });
  run("explicit canonical dual vectors", [&](const Fixture &f) {
    return Outcome{gap(canonical_dual(f.explicit_frame).vectors, f.explicit_dual.vectors)};
  });
  run("canonical dual up to unitary equivalence", [&](const Fixture &f) {
    const Matrix ours = canonical_dual(f.frame).vectors;
    const Matrix theirs = f.explicit_dual.vectors;
    const double gram = gap(ours.adjoint() * ours, theirs.adjoint() * theirs);
    const double cross = gap(f.frame.synthesis().adjoint() * ours, f.explicit_frame.synthesis().adjoint() * theirs);
    return Outcome{std::max(gram, cross)};
  });
  run("diagonal pairings {2/3, 2/3, 2/3, 1/2, 1/2}", [&](const Fixture &f) {
    const auto z = diagonal_pairings(f.frame, canonical_dual(f.frame));
    const double want[] = {2.0 / 3, 2.0 / 3, 2.0 / 3, 0.5, 0.5};
    double worst = 0.0;
    for (int i = 0; i < 5; ++i)
      worst = std::max(worst, std::abs(std::abs(z[i]) - want[i]));
    return Outcome{worst};
  });
  run("canonical rho1 = 2/3 at {1}", [&](const Fixture &f) {
    const auto res = rho_r(f.frame, canonical_dual(f.frame), 1);
    return Outcome{std::abs(res.radius - 2.0 / 3), res.witness == ErasureSet({0}, 5)};
  });
  run("explicit 2-erasure operators", [&](const Fixture &f) {
    const auto all = pairs(5);
    double worst = 0.0;
    for (std::size_t p = 0; p < all.size(); ++p)
      worst = std::max(worst, gap(error_operator(f.explicit_frame, f.explicit_dual, ErasureSet(all[p], 5)), f.operators[p]));
    return Outcome{worst};
  });
  run("ten canonical 2-erasure radii",
      [&](const Fixture &f) { return Outcome{radii_residual(f.frame, canonical_dual(f.frame), f.radii)}; });
  run("canonical rho2 = 1 at {1,2}", [&](const Fixture &f) {
    const auto res = rho_r(f.frame, canonical_dual(f.frame), 2);
    return Outcome{std::abs(res.radius - 1.0), res.witness == ErasureSet({0, 1}, 5)};
  });
  run("shifted dual is a dual", [&](const Fixture &f) {
    return Outcome{is_dual(f.explicit_frame, f.shifted_dual, tolerance).residual};
  });
  run("shifted dual rho1 = 2/3", [&](const Fixture &f) {
    return Outcome{std::abs(rho_r(f.explicit_frame, f.shifted_dual, 1).radius - 2.0 / 3)};
  });
  run("shifted dual ten 2-erasure radii",
      [&](const Fixture &f) { return Outcome{radii_residual(f.explicit_frame, f.shifted_dual, f.radii)}; });
  run("shifted dual rho2 = 1", [&](const Fixture &f) {
    return Outcome{std::abs(rho_r(f.explicit_frame, f.shifted_dual, 2).radius - 1.0)};
  });
  run("shift (0,0,1) on L_G frame ties rho1 and rho2", [&](const Fixture &f) {
    DualParams p = DualParams::zero(f.frame);
    p.shifts[0](2) = 1.0;
    const DualFrame d = dual_from_params(f.frame, p);
    return Outcome{std::max(std::abs(rho_r(f.frame, d, 1).radius - 2.0 / 3), std::abs(rho_r(f.frame, d, 2).radius - 1.0))};
  });
  run("alternate optimal duals tie rho1 and rho2", [&](const Fixture &f) {
    double worst = 0.0;
    for (int r = 1; r <= 2; ++r) {
      const DualFrame d = alternate_sod_dual(f.frame, r);
      worst = std::max(worst, std::abs(rho_r(f.frame, d, 1).radius - 2.0 / 3));
      worst = std::max(worst, std::abs(rho_r(f.frame, d, 2).radius - 1.0));
    }
    return Outcome{worst};
  });
  return result;
}

std::string format_table(const ReproduceResult &r) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const auto &c : r.checks)
    width = std::max(width, c.name.size());
  out << std::left << std::setw(4) << "#" << std::setw(static_cast<int>(width) + 2) << "check" << std::setw(14)
      << "residual"
      << "result\n";
  for (const auto &c : r.checks) {
    std::ostringstream res;
    res << std::scientific << std::setprecision(2) << c.residual;
    out << std::left << std::setw(4) << c.id << std::setw(static_cast<int>(width) + 2) << c.name << std::setw(14)
        << res.str() << (c.passed ? "PASS" : "FAIL") << '\n';
  }
  const auto passed = std::count_if(r.checks.begin(), r.checks.end(), [](const auto &c) { return c.passed; });
  out << passed << "/" << r.checks.size() << " checks passed at tolerance " << r.tolerance << '\n';
  return out.str();
}

Json reproduce_to_json(const ReproduceResult &r) {
  Json checks = Json::array();
  for (const auto &c : r.checks)
    checks.push_back(Json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"residual", c.residual}});
  Json j;
  j["schema"] = kSchemaVersion;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.all_passed();
  j["checks"] = std::move(checks);
  return j;
}

} // namespace gframe
