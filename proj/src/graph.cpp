#include "gframe/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <string>

namespace gframe {

namespace {

std::string describe(const Edge &e) {
  return "{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}";
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long &value) {
  if (tok.empty())
    return false;
  const char *first = tok.data();
  if (*first == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

[[noreturn]] void fail(std::size_t line_no, const std::string &what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1)
    throw InvalidArgument("graph must have at least one vertex");
  for (auto &e : edges_) {
    if (e.u == e.v)
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u + 1));
    if (e.u > e.v)
      std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_)
      throw InvalidArgument("edge endpoint out of range [1, " + std::to_string(n_) + "]");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InvalidArgument("duplicate edge " + describe(*dup));
}

bool Graph::has_edge(int a, int b) const {
  Edge e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto &e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

Graph Graph::relabeled(const std::vector<int> &position) const {
  if (static_cast<int>(position.size()) != n_)
    throw InvalidArgument("relabeling must cover every vertex");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto &e : edges_)
    out.push_back({position[e.u], position[e.v]});
  return Graph(n_, std::move(out));
}

Graph Graph::induced(const std::vector<int> &vertices) const {
  std::vector<int> local(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> out;
  for (const auto &e : edges_)
    if (local[e.u] >= 0 && local[e.v] >= 0)
      out.push_back({local[e.u], local[e.v]});
  return Graph(static_cast<int>(vertices.size()), std::move(out));
}

int ComponentDecomposition::component_at(int p) const {
  auto it = std::upper_bound(offsets.begin(), offsets.end(), p);
  return static_cast<int>(it - offsets.begin()) - 1;
}

ComponentDecomposition ComponentDecomposition::from_sizes(const std::vector<int> &sizes) {
  ComponentDecomposition c;
  c.sizes = sizes;
  c.offsets.assign(1, 0);
  for (int s : sizes) {
    if (s < 1)
      throw InvalidArgument("component sizes must be positive");
    c.offsets.push_back(c.offsets.back() + s);
  }
  c.position.resize(c.offsets.back());
  std::iota(c.position.begin(), c.position.end(), 0);
  c.vertex = c.position;
  return c;
}

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#')
      continue;

    if (n < 0) {
      long long count = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], count))
        fail(line_no, "expected header 'n <count>'");
      if (count < 1 || count > 1'000'000)
        fail(line_no, "vertex count must be a positive integer");
      n = static_cast<int>(count);
      continue;
    }

    long long u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
      fail(line_no, "expected edge 'u v'");
    if (u < 1 || v < 1 || u > n || v > n)
      fail(line_no, "endpoint out of range [1, " + std::to_string(n) + "]");
    if (u == v)
      fail(line_no, "self-loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<int>(std::min(u, v)) - 1, static_cast<int>(std::max(u, v)) - 1});
  }
  if (n < 0)
    throw ParseError("missing header 'n <count>'");

  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw ParseError("duplicate edge " + describe(*dup));
  return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph &g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (const auto &e : g.edges())
    os << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

IntMatrix adjacency(const Graph &g) {
  IntMatrix a = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto &e : g.edges()) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return a;
}

IntMatrix degree_matrix(const Graph &g) {
  IntMatrix d = IntMatrix::Zero(g.vertex_count(), g.vertex_count());
  auto deg = g.degrees();
  for (int i = 0; i < g.vertex_count(); ++i)
    d(i, i) = deg[i];
  return d;
}

IntMatrix laplacian(const Graph &g) { return degree_matrix(g) - adjacency(g); }

ComponentDecomposition components(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> nbrs(n);
  for (const auto &e : g.edges()) {
    nbrs[e.u].push_back(e.v);
    nbrs[e.v].push_back(e.u);
  }

  ComponentDecomposition c;
  c.offsets.push_back(0);
  c.position.assign(n, -1);
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    std::vector<int> block{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < block.size(); ++head)
      for (int w : nbrs[block[head]])
        if (!seen[w]) {
          seen[w] = 1;
          block.push_back(w);
        }
    std::sort(block.begin(), block.end());
    for (int v : block) {
      c.position[v] = static_cast<int>(c.vertex.size());
      c.vertex.push_back(v);
    }
    c.sizes.push_back(static_cast<int>(block.size()));
    c.offsets.push_back(static_cast<int>(c.vertex.size()));
  }
  return c;
}

} // namespace gframe
