#pragma once

#include <random>
#include <vector>

#include "gframe/erasure.hpp"
#include "gframe/sod.hpp"

namespace gframe::testing {

Graph complete_graph(int n);
Graph triangle_and_edge();

/// G(n, p) sample.
Graph random_graph(int n, double p, std::mt19937_64 &rng);
/// G(n, 1/2) rejection-sampled until connected.
Graph random_connected_graph(int n, std::mt19937_64 &rng);
/// 2-3 components of sizes in [1, 5] (at least one of size >= 2), each
/// connected, with vertex labels shuffled.
Graph random_disconnected_graph(std::mt19937_64 &rng);

/// Haar-like unitary from the QR factorization of a complex Gaussian matrix.
Matrix random_unitary(int k, std::mt19937_64 &rng);
Matrix random_complex_matrix(int rows, int cols, std::mt19937_64 &rng);

/// Component count by union-find.
int union_find_components(const Graph &g);

/// Coefficients c_0..c_n of det(x I - A) by Faddeev-LeVerrier in exact
/// integer arithmetic.
std::vector<long long> characteristic_polynomial(const IntMatrix &a);

std::vector<Complex> oracle_eigenvalues(const Matrix &a);
std::vector<double> oracle_symmetric_eigenvalues(const RealMatrix &a);

/// Entries of magnitude above `zero_tol`.
std::vector<Complex> nonzero(const std::vector<Complex> &v, double zero_tol);

/// Multiset equality up to `tol` by greedy nearest matching.
bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol);

} // namespace gframe::testing
