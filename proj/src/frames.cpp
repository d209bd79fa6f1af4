#include "gframe/frames.hpp"

#include <cmath>
#include <string>

namespace gframe {

Frame::Frame(Matrix synthesis, ComponentDecomposition layout, std::vector<double> spectrum)
    : synthesis_(std::move(synthesis)), layout_(std::move(layout)), spectrum_(std::move(spectrum)) {
  if (layout_.total() != size())
    throw InvalidArgument("frame layout covers " + std::to_string(layout_.total()) + " vectors, synthesis has " +
                          std::to_string(size()));
  if (dimension() < 1)
    throw InvalidArgument("zero-dimensional frame");
}

int Frame::coordinate_offset(int j) const {
  int off = 0;
  for (int c = 0; c < j && c < layout_.count(); ++c)
    off += layout_.sizes[c] - 1;
  return std::min(off, dimension());
}

DualParams DualParams::zero(const Frame &f) {
  return DualParams{std::vector<Vector>(f.layout().count(), Vector::Zero(f.dimension()))};
}

IntMatrix block_laplacian(const Graph &g, const ComponentDecomposition &layout) {
  return laplacian(g.relabeled(layout.position));
}

Frame lg_frame(const Graph &g, const Tolerances &tol) {
  ComponentDecomposition layout = components(g);
  const int n = g.vertex_count();
  const int k = n - layout.count();
  if (k < 1)
    throw InvalidArgument("zero-dimensional frame: every component is a single vertex");

  Matrix synthesis = Matrix::Zero(k, n);
  std::vector<double> spectrum;
  spectrum.reserve(k);
  int row = 0;
  for (int j = 0; j < layout.count(); ++j) {
    const int size = layout.sizes[j];
    if (size == 1)
      continue;
    std::vector<int> members(layout.vertex.begin() + layout.offsets[j],
                             layout.vertex.begin() + layout.offsets[j + 1]);
    RealMatrix lap = laplacian(g.induced(members)).cast<double>();
    EigenDecomposition dec = symmetric_eig(lap, 1, tol);
    // Columns 0..size-2 carry the nonzero eigenvalues in descending order.
    for (int c = 0; c < size - 1; ++c) {
      const double lambda = dec.values[c];
      spectrum.push_back(lambda);
      synthesis.block(row + c, layout.offsets[j], 1, size) =
          (std::sqrt(lambda) * dec.vectors.col(c).transpose()).cast<Complex>();
    }
    row += size - 1;
  }
  return Frame(std::move(synthesis), std::move(layout), std::move(spectrum));
}

Matrix gramian(const Matrix &synthesis) { return synthesis.adjoint() * synthesis; }

Matrix gramian(const Frame &f) { return gramian(f.synthesis()); }

Matrix frame_operator(const Frame &f) { return f.synthesis() * f.synthesis().adjoint(); }

FrameBounds frame_bounds(const Frame &f, const Tolerances &tol) {
  auto vals = hermitian_eigenvalues(frame_operator(f), tol);
  FrameBounds b{vals.front(), vals.back()};
  if (!(b.lower > tol.zero))
    throw InvalidArgument("not a frame: lower frame bound " + std::to_string(b.lower) + " is not positive");
  return b;
}

DualFrame canonical_dual(const Frame &f, const Tolerances &tol) {
  Matrix s = frame_operator(f);
  Eigen::FullPivLU<Matrix> lu(s);
  lu.setThreshold(tol.zero);
  if (!lu.isInvertible())
    throw InvalidArgument("singular frame operator");
  DualFrame d;
  d.vectors = lu.solve(f.synthesis());
  d.params = DualParams::zero(f);
  return d;
}

DualFrame dual_from_params(const Frame &f, const DualParams &p, const Tolerances &tol) {
  const auto &layout = f.layout();
  if (static_cast<int>(p.shifts.size()) != layout.count())
    throw InvalidArgument("expected " + std::to_string(layout.count()) + " shift vectors, got " +
                          std::to_string(p.shifts.size()));
  for (const auto &s : p.shifts)
    if (s.size() != f.dimension())
      throw InvalidArgument("shift vectors must have the frame dimension " + std::to_string(f.dimension()));

  DualFrame d = canonical_dual(f, tol);
  for (int j = 0; j < layout.count(); ++j)
    for (int i = layout.offsets[j]; i < layout.offsets[j + 1]; ++i)
      d.vectors.col(i) += p.shifts[j];
  d.params = p;

  auto check = is_dual(f, d, tol.dual);
  if (!check.ok)
    throw InvalidArgument("parameters do not produce a dual frame (residual " + std::to_string(check.residual) + ")");
  return d;
}

DualityCheck is_dual(const Frame &f, const DualFrame &d, double tol) {
  if (d.vectors.rows() != f.dimension() || d.vectors.cols() != f.size())
    throw InvalidArgument("dual frame shape does not match the frame");
  const int k = f.dimension();
  const double residual = max_abs(Matrix(d.vectors * f.synthesis().adjoint() - Matrix::Identity(k, k)));
  return {residual <= tol, residual};
}

Frame apply_unitary(const Frame &f, const Matrix &u, const Tolerances &tol) {
  if (u.rows() != f.dimension() || u.cols() != f.dimension())
    throw InvalidArgument("unitary has the wrong shape");
  if (unitarity_residual(u) > tol.unitary)
    throw InvalidArgument("matrix is not unitary");
  return Frame(u * f.synthesis(), f.layout(), f.spectrum());
}

DualFrame apply_unitary(const DualFrame &d, const Matrix &u, const Tolerances &tol) {
  if (u.rows() != d.vectors.rows() || u.cols() != d.vectors.rows())
    throw InvalidArgument("unitary has the wrong shape");
  if (unitarity_residual(u) > tol.unitary)
    throw InvalidArgument("matrix is not unitary");
  DualFrame out;
  out.vectors = u * d.vectors;
  if (d.params) {
    DualParams p;
    for (const auto &s : d.params->shifts)
      p.shifts.push_back(u * s);
    out.params = std::move(p);
  }
  return out;
}

std::vector<Complex> diagonal_pairings(const Frame &f, const DualFrame &d) {
  std::vector<Complex> out(f.size());
  for (int i = 0; i < f.size(); ++i)
    out[i] = f.synthesis().col(i).dot(d.vectors.col(i));
  return out;
}

} // namespace gframe
