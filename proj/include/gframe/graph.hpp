#pragma once

#include <string_view>
#include <vector>

#include "gframe/types.hpp"

namespace gframe {

/// Undirected edge between 0-based vertices, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * The constructor enforces the simple-graph invariants: no self-loops, no
 * duplicate edges, endpoints in range. Edges are stored sorted.
 */
class Graph {
public:
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge> &edges() const { return edges_; }
  bool has_edge(int a, int b) const;
  std::vector<int> degrees() const;

  /// Graph relabeled so that old vertex v becomes position[v].
  Graph relabeled(const std::vector<int> &position) const;

  /// Subgraph induced by `vertices`, relabeled 0..size-1 in the given order.
  Graph induced(const std::vector<int> &vertices) const;

private:
  int n_;
  std::vector<Edge> edges_;
};

/**
 * Connected components laid out as contiguous blocks.
 *
 * Component i occupies positions offsets[i] .. offsets[i+1]-1. Components
 * are ordered by their smallest vertex; inside a block vertices keep their
 * original relative order.
 */
struct ComponentDecomposition {
  std::vector<int> sizes;
  /// offsets[0] = 0, offsets[i] = sizes[0] + ... + sizes[i-1]; count()+1 entries.
  std::vector<int> offsets;
  /// position[v]: block-order position of original vertex v.
  std::vector<int> position;
  /// vertex[p]: original vertex at block-order position p (inverse of position).
  std::vector<int> vertex;

  int count() const { return static_cast<int>(sizes.size()); }
  int total() const { return offsets.empty() ? 0 : offsets.back(); }
  /// Component index owning block-order position p.
  int component_at(int p) const;

  /// Contiguous layout with identity ordering for the given block sizes.
  static ComponentDecomposition from_sizes(const std::vector<int> &sizes);
};

/**
 * Parse the edge-list text format.
 *
 * Grammar: blank lines and lines whose first non-blank character is '#'
 * are ignored; the first remaining line is `n <count>`; every further line
 * is `u v` with 1-based endpoints.
 *
 * Throws ParseError on a malformed line, missing header, duplicate edge,
 * self-loop or out-of-range endpoint.
 */
Graph parse_edge_list(std::string_view text);

/// Render a graph in the edge-list format accepted by parse_edge_list.
std::string format_edge_list(const Graph &g);

IntMatrix adjacency(const Graph &g);
IntMatrix degree_matrix(const Graph &g);

/// L = D - A.
IntMatrix laplacian(const Graph &g);

ComponentDecomposition components(const Graph &g);

} // namespace gframe
