#include "fixtures.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace gframe::testing {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.push_back({u, v});
  return Graph(n, edges);
}

Graph triangle_and_edge() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}}); }

Graph random_graph(int n, double p, std::mt19937_64 &rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.push_back({u, v});
  return Graph(n, edges);
}

Graph random_connected_graph(int n, std::mt19937_64 &rng) {
  for (;;) {
    Graph g = random_graph(n, 0.5, rng);
    if (union_find_components(g) == 1)
      return g;
  }
}

Graph random_disconnected_graph(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> count(2, 3), size(1, 5);
  std::vector<int> sizes;
  do {
    sizes.assign(count(rng), 0);
    for (auto &s : sizes)
      s = size(rng);
  } while (std::none_of(sizes.begin(), sizes.end(), [](int s) { return s >= 2; }));

  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<Edge> edges;
  int base = 0;
  for (int s : sizes) {
    const Graph part = random_connected_graph(s, rng);
    for (const Edge &e : part.edges()) {
      const int a = label[base + e.u], b = label[base + e.v];
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
    base += s;
  }
  return Graph(n, edges);
}

Matrix random_complex_matrix(int rows, int cols, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss;
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

Matrix random_unitary(int k, std::mt19937_64 &rng) {
  Eigen::HouseholderQR<Matrix> qr(random_complex_matrix(k, k, rng));
  return qr.householderQ() * Matrix::Identity(k, k);
}

int union_find_components(const Graph &g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  int count = g.vertex_count();
  for (const Edge &e : g.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

std::vector<long long> characteristic_polynomial(const IntMatrix &a) {
  const auto n = a.rows();
  std::vector<long long> c(n + 1, 0);
  c[n] = 1;
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m;
    m.diagonal().array() += c[n - k + 1];
    const IntMatrix am = a * m;
    c[n - k] = -am.trace() / k;
  }
  return c;
}

std::vector<Complex> oracle_eigenvalues(const Matrix &a) {
  Eigen::ComplexEigenSolver<Matrix> es(a, false);
  const Vector v = es.eigenvalues();
  return std::vector<Complex>(v.data(), v.data() + v.size());
}

std::vector<double> oracle_symmetric_eigenvalues(const RealMatrix &a) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(a, Eigen::EigenvaluesOnly);
  const RealVector v = es.eigenvalues();
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::vector<Complex> nonzero(const std::vector<Complex> &v, double zero_tol) {
  std::vector<Complex> out;
  std::copy_if(v.begin(), v.end(), std::back_inserter(out), [&](Complex z) { return std::abs(z) > zero_tol; });
  return out;
}

bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  if (a.size() != b.size())
    return false;
  for (const Complex &z : a) {
    auto best = b.end();
    double dist = std::numeric_limits<double>::infinity();
    for (auto it = b.begin(); it != b.end(); ++it)
      if (std::abs(*it - z) < dist) {
        dist = std::abs(*it - z);
        best = it;
      }
    if (dist > tol)
      return false;
    b.erase(best);
  }
  return true;
}

} // namespace gframe::testing
