#include "gframe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace gframe {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double off_diagonal_sq(const RealMatrix &a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j)
        s += a(i, j) * a(i, j);
  return s;
}

// One sweep visits every (p, q) pair above the diagonal once.
void jacobi_sweep(RealMatrix &a, RealMatrix &v) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index p = 0; p < n - 1; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) {
      const double apq = a(p, q);
      if (apq == 0.0)
        continue;
      if (std::abs(apq) < kEps * 1e-3 * (std::abs(a(p, p)) + std::abs(a(q, q)))) {
        a(p, q) = a(q, p) = 0.0;
        continue;
      }
      const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
      const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      for (Eigen::Index k = 0; k < n; ++k) {
        const double akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
      }
      for (Eigen::Index k = 0; k < n; ++k) {
        const double apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
      }
      a(p, q) = a(q, p) = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        const double vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
      }
    }
  }
}

// Flip the column so that its first entry of (numerically) largest
// magnitude is positive.
template <class Column> void fix_sign(Column col) {
  double biggest = 0.0;
  for (Eigen::Index i = 0; i < col.size(); ++i)
    biggest = std::max(biggest, std::abs(col(i)));
  for (Eigen::Index i = 0; i < col.size(); ++i) {
    if (std::abs(col(i)) >= biggest - 1e-12) {
      if (col(i) < 0)
        col *= -1.0;
      return;
    }
  }
}

std::vector<Complex> eig_2x2(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_trace = 0.5 * (a + d);
  const Complex half_gap = 0.5 * (a - d);
  const Complex root = std::sqrt(half_gap * half_gap + b * c);
  const Complex plus = half_trace + root;
  const Complex minus = half_trace - root;
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
  if (big == Complex(0.0))
    return {Complex(0.0), Complex(0.0)};
  // Product of the roots is the determinant; avoids cancellation in the
  // smaller root.
  const Complex small = (a * d - b * c) / big;
  return {big, small};
}

struct Givens {
  double c;
  Complex s;
};

// G = [[c, s], [-conj(s), c]] maps (x, y) to (r, 0).
Givens make_givens(Complex x, Complex y) {
  const double ax = std::abs(x), ay = std::abs(y);
  if (ay == 0.0)
    return {1.0, Complex(0.0)};
  if (ax == 0.0)
    return {0.0, Complex(1.0)};
  const double r = std::hypot(ax, ay);
  return {ax / r, (x / ax) * std::conj(y) / r};
}

void to_hessenberg(Matrix &h) {
  const Eigen::Index n = h.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    Vector x = h.block(k + 1, k, n - k - 1, 1);
    const double xnorm = x.norm();
    if (xnorm == 0.0)
      continue;
    const Complex phase = std::abs(x(0)) == 0.0 ? Complex(1.0) : x(0) / std::abs(x(0));
    Vector w = x;
    w(0) += phase * xnorm;
    const double wnorm = w.norm();
    if (wnorm == 0.0)
      continue;
    w /= wnorm;
    // H <- (I - 2ww^*) H (I - 2ww^*)
    auto rows = h.bottomRows(n - k - 1);
    rows -= 2.0 * w * (w.adjoint() * rows);
    auto cols = h.rightCols(n - k - 1);
    cols -= 2.0 * (cols * w) * w.adjoint();
    h.block(k + 2, k, n - k - 2, 1).setZero();
  }
}

std::vector<Complex> hessenberg_qr(Matrix h, const Tolerances &tol) {
  const Eigen::Index n = h.rows();
  std::vector<Complex> out;
  out.reserve(n);
  Eigen::Index hi = n - 1;
  int iter = 0;
  int total = 0;
  const int budget = tol.qr_max_iterations * static_cast<int>(n);
  const double scale = std::max(max_abs(h), std::numeric_limits<double>::min());

  while (hi >= 0) {
    if (hi == 0) {
      out.push_back(h(0, 0));
      break;
    }
    Eigen::Index l = hi;
    for (; l > 0; --l) {
      const double neighbourhood = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      const double bound = kEps * (neighbourhood == 0.0 ? scale : neighbourhood);
      if (std::abs(h(l, l - 1)) <= bound) {
        h(l, l - 1) = 0.0;
        break;
      }
    }
    if (l == hi) {
      out.push_back(h(hi, hi));
      --hi;
      iter = 0;
      continue;
    }
    if (l == hi - 1) {
      auto pair = eig_2x2(h(l, l), h(l, hi), h(hi, l), h(hi, hi));
      out.insert(out.end(), pair.begin(), pair.end());
      hi -= 2;
      iter = 0;
      continue;
    }
    if (++iter > tol.qr_max_iterations || ++total > budget)
      throw ConvergenceError("complex QR iteration did not converge");

    Complex shift;
    if (iter % 11 == 0) {
      // Exceptional shift to break cycles.
      shift = h(hi, hi) + 1.5 * std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2));
    } else {
      auto pair = eig_2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
      shift = std::abs(pair[0] - h(hi, hi)) < std::abs(pair[1] - h(hi, hi)) ? pair[0] : pair[1];
    }

    for (Eigen::Index i = l; i <= hi; ++i)
      h(i, i) -= shift;
    std::vector<Givens> rot;
    rot.reserve(hi - l);
    for (Eigen::Index k = l; k < hi; ++k) {
      Givens g = make_givens(h(k, k), h(k + 1, k));
      for (Eigen::Index j = k; j <= hi; ++j) {
        const Complex x = h(k, j), y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
      h(k + 1, k) = 0.0;
      rot.push_back(g);
    }
    for (Eigen::Index k = l; k < hi; ++k) {
      const Givens &g = rot[k - l];
      const Eigen::Index last = std::min(k + 2, hi);
      for (Eigen::Index i = l; i <= last; ++i) {
        const Complex x = h(i, k), y = h(i, k + 1);
        h(i, k) = x * g.c + y * std::conj(g.s);
        h(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (Eigen::Index i = l; i <= hi; ++i)
      h(i, i) += shift;
  }
  return out;
}

void check_char_poly(const Matrix &a, const std::vector<Complex> &roots, const Tolerances &tol) {
  const Eigen::Index r = a.rows();
  const double norm = a.norm();
  for (const Complex &z : roots) {
    Matrix shifted = a - z * Matrix::Identity(r, r);
    const double value = std::abs(shifted.partialPivLu().determinant());
    const double bound = tol.eig * std::pow(1.0 + norm + std::abs(z), static_cast<double>(r));
    if (!(value <= bound))
      throw ConvergenceError("eigenvalue residual " + std::to_string(value) +
                             " exceeds tolerance on characteristic polynomial");
  }
}

} // namespace

double max_abs(const Matrix &a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }
double max_abs(const RealMatrix &a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double unitarity_residual(const Matrix &u) {
  if (u.rows() != u.cols())
    return std::numeric_limits<double>::infinity();
  return max_abs(Matrix(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())));
}

EigenDecomposition symmetric_eig(const RealMatrix &a, int expected_zero_count, const Tolerances &tol) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n)
    throw InvalidArgument("symmetric_eig: matrix is not square");
  if (expected_zero_count < 0 || expected_zero_count > n)
    throw InvalidArgument("symmetric_eig: expected zero count out of range");
  const double scale = std::max(1.0, max_abs(a));
  if (max_abs(RealMatrix(a - a.transpose())) > tol.symmetry * scale)
    throw InvalidArgument("symmetric_eig: matrix is not symmetric");

  RealMatrix work = 0.5 * (a + a.transpose());
  RealMatrix v = RealMatrix::Identity(n, n);
  const double target = kEps * kEps * std::max(work.squaredNorm(), std::numeric_limits<double>::min());
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps; ++sweep) {
    if (off_diagonal_sq(work) <= target)
      break;
    jacobi_sweep(work, v);
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> by_magnitude = idx;
  std::stable_sort(by_magnitude.begin(), by_magnitude.end(),
                   [&](int x, int y) { return std::abs(work(x, x)) < std::abs(work(y, y)); });
  std::vector<char> is_zero(n, 0);
  for (int z = 0; z < expected_zero_count; ++z) {
    const int i = by_magnitude[z];
    if (!(std::abs(work(i, i)) < tol.zero))
      throw ConvergenceError("symmetric_eig: eigenvalue " + std::to_string(work(i, i)) +
                             " expected to vanish exceeds zero tolerance");
    is_zero[i] = 1;
  }
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    if (is_zero[x] != is_zero[y])
      return is_zero[x] < is_zero[y];
    if (is_zero[x])
      return false;
    return work(x, x) > work(y, y);
  });

  EigenDecomposition out;
  out.zero_count = expected_zero_count;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const int i = idx[j];
    out.values[j] = is_zero[i] ? 0.0 : work(i, i);
    out.vectors.col(j) = v.col(i);
    fix_sign(out.vectors.col(j));
  }

  RealVector d = Eigen::Map<const RealVector>(out.values.data(), n);
  const double recon = max_abs(RealMatrix(a - out.vectors * d.asDiagonal() * out.vectors.transpose()));
  const double ortho = max_abs(RealMatrix(out.vectors.transpose() * out.vectors - RealMatrix::Identity(n, n)));
  if (recon > tol.eig * scale || ortho > tol.eig)
    throw ConvergenceError("symmetric_eig: residual contract violated (reconstruction " +
                           std::to_string(recon) + ", orthonormality " + std::to_string(ortho) + ")");
  return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix &a, const Tolerances &tol) {
  const Eigen::Index k = a.rows();
  if (a.cols() != k)
    throw InvalidArgument("hermitian_eigenvalues: matrix is not square");
  Matrix h = 0.5 * (a + a.adjoint());
  // Real symmetric embedding [[Re, -Im], [Im, Re]] doubles every eigenvalue.
  RealMatrix emb(2 * k, 2 * k);
  emb.topLeftCorner(k, k) = h.real();
  emb.bottomRightCorner(k, k) = h.real();
  emb.topRightCorner(k, k) = -h.imag();
  emb.bottomLeftCorner(k, k) = h.imag();
  auto dec = symmetric_eig(emb, 0, tol);
  std::vector<double> vals = dec.values;
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  out.reserve(k);
  for (Eigen::Index i = 0; i < k; ++i)
    out.push_back(0.5 * (vals[2 * i] + vals[2 * i + 1]));
  return out;
}

std::vector<Complex> small_complex_eigenvalues(const Matrix &a, const Tolerances &tol) {
  const Eigen::Index r = a.rows();
  if (r < 1 || a.cols() != r)
    throw InvalidArgument("small_complex_eigenvalues: need a non-empty square matrix");
  if (!a.allFinite())
    throw InvalidArgument("small_complex_eigenvalues: non-finite entry");

  std::vector<Complex> out;
  if (r == 1) {
    out = {a(0, 0)};
  } else if (r == 2) {
    out = eig_2x2(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
  } else {
    Matrix h = a;
    to_hessenberg(h);
    out = hessenberg_qr(std::move(h), tol);
    check_char_poly(a, out, tol);
  }
  std::sort(out.begin(), out.end(), [](const Complex &x, const Complex &y) {
    if (std::abs(x) != std::abs(y))
      return std::abs(x) > std::abs(y);
    if (x.real() != y.real())
      return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return out;
}

double spectral_radius(const Matrix &a, const Tolerances &tol) {
  if (a.rows() != a.cols())
    throw InvalidArgument("spectral_radius: matrix is not square");
  if (a.rows() == 0)
    return 0.0;
  double best = 0.0;
  for (const Complex &z : small_complex_eigenvalues(a, tol))
    best = std::max(best, std::abs(z));
  return best;
}

} // namespace gframe
