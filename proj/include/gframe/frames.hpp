#pragma once

#include <optional>
#include <vector>

#include "gframe/graph.hpp"
#include "gframe/linalg.hpp"

namespace gframe {

/**
 * A finite frame {phi_i} for C^k, stored as its k x n synthesis matrix.
 *
 * Column i is phi_i. Columns are in block order: column p belongs to the
 * vertex layout.vertex[p] of the generating graph, and the columns of each
 * connected component are contiguous. Frame coordinates are likewise split
 * into per-component blocks of size n_j - 1 (see coordinate_offset).
 */
class Frame {
public:
  Frame(Matrix synthesis, ComponentDecomposition layout, std::vector<double> spectrum);

  int dimension() const { return static_cast<int>(synthesis_.rows()); }
  int size() const { return static_cast<int>(synthesis_.cols()); }
  const Matrix &synthesis() const { return synthesis_; }
  const ComponentDecomposition &layout() const { return layout_; }
  /// Nonzero Laplacian eigenvalues in block order (empty for external frames).
  const std::vector<double> &spectrum() const { return spectrum_; }
  Vector vector(int i) const { return synthesis_.col(i); }

  bool connected() const { return layout_.count() == 1; }
  /// First frame coordinate owned by component j; j == count() gives k.
  int coordinate_offset(int j) const;

private:
  Matrix synthesis_;
  ComponentDecomposition layout_;
  std::vector<double> spectrum_;
};

/// One shift vector per component, each of the frame dimension.
struct DualParams {
  std::vector<Vector> shifts;

  static DualParams zero(const Frame &f);
};

/// Dual frame {psi_i}; `vectors` is k x n with column i equal to psi_i.
struct DualFrame {
  Matrix vectors;
  std::optional<DualParams> params;
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct DualityCheck {
  bool ok = false;
  double residual = 0.0;
};

/**
 * L_G(n,k)-frame of a graph, assembled component by component.
 *
 * Each component's Laplacian is eigendecomposed with one expected zero; the
 * nonzero eigenvectors scaled by sqrt(lambda) form a diagonal block of the
 * synthesis matrix. Singleton components contribute zero columns. Throws
 * InvalidArgument when every component is a singleton (k = 0).
 */
Frame lg_frame(const Graph &g, const Tolerances &tol = {});

/// Laplacian of g with rows and columns permuted into block order.
IntMatrix block_laplacian(const Graph &g, const ComponentDecomposition &layout);

/// G(i, j) = <phi_j, phi_i>.
Matrix gramian(const Frame &f);
Matrix gramian(const Matrix &synthesis);

/// S = sum_i phi_i phi_i^*.
Matrix frame_operator(const Frame &f);

/// Extreme eigenvalues of the frame operator. Throws InvalidArgument when
/// the lower bound does not exceed tol.zero.
FrameBounds frame_bounds(const Frame &f, const Tolerances &tol = {});

DualFrame canonical_dual(const Frame &f, const Tolerances &tol = {});

/// psi_i = S^{-1} phi_i + shifts[j] for every column i of component j.
/// The result is checked for duality; a failure throws InvalidArgument.
DualFrame dual_from_params(const Frame &f, const DualParams &p, const Tolerances &tol = {});

/// ||Psi Phi^* - I||_max against tol. Throws InvalidArgument on a shape mismatch.
DualityCheck is_dual(const Frame &f, const DualFrame &d, double tol);

/// Columns mapped to u * phi_i. Throws InvalidArgument when u is not unitary.
Frame apply_unitary(const Frame &f, const Matrix &u, const Tolerances &tol = {});
DualFrame apply_unitary(const DualFrame &d, const Matrix &u, const Tolerances &tol = {});

/// Diagonal <psi_i, phi_i> for all i.
std::vector<Complex> diagonal_pairings(const Frame &f, const DualFrame &d);

} // namespace gframe
