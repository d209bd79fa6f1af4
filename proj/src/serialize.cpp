#include "gframe/serialize.hpp"

#include <algorithm>
#include <numeric>

namespace gframe {

namespace {

template <class T> T field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception &) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type");
  }
}

Json vector_to_json(const Vector &v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(complex_to_json(v(i)));
  return out;
}

Json matrix_rows_to_json(const Matrix &m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    rows.push_back(vector_to_json(m.row(r).transpose()));
  return rows;
}

Json flat_row_major(const Matrix &m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out.push_back(complex_to_json(m(r, c)));
  return out;
}

Json params_or_null(const std::optional<DualParams> &p) { return p ? params_to_json(*p) : Json(nullptr); }

} // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex numbers are written as [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json frame_to_json(const Frame &f, const Tolerances &tol) {
  const auto &layout = f.layout();
  std::vector<int> order(layout.vertex.size());
  std::transform(layout.vertex.begin(), layout.vertex.end(), order.begin(), [](int v) { return v + 1; });
  const FrameBounds b = frame_bounds(f, tol);

  Json j;
  j["schema"] = kSchemaVersion;
  j["k"] = f.dimension();
  j["n"] = f.size();
  j["components"] = layout.sizes;
  j["vertex_order"] = order;
  j["spectrum"] = f.spectrum();
  j["synthesis"] = flat_row_major(f.synthesis());
  j["frame_bounds"] = Json{{"lower", b.lower}, {"upper", b.upper}};
  return j;
}

Frame frame_from_json(const Json &j) {
  const int k = field<int>(j, "k");
  const int n = field<int>(j, "n");
  if (k < 1 || n < 1)
    throw ParseError("frame dimensions must be positive");
  const auto sizes = field<std::vector<int>>(j, "components");
  if (sizes.empty() || std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 1; }) ||
      std::accumulate(sizes.begin(), sizes.end(), 0) != n)
    throw ParseError("component sizes must be positive and sum to n");

  ComponentDecomposition layout = ComponentDecomposition::from_sizes(sizes);
  if (j.contains("vertex_order")) {
    const auto order = field<std::vector<int>>(j, "vertex_order");
    if (static_cast<int>(order.size()) != n)
      throw ParseError("vertex_order must list n vertices");
    std::vector<int> seen(n, 0);
    for (int p = 0; p < n; ++p) {
      const int v = order[p] - 1;
      if (v < 0 || v >= n || seen[v]++)
        throw ParseError("vertex_order is not a permutation of 1..n");
      layout.vertex[p] = v;
      layout.position[v] = p;
    }
  }

  const Json &flat = j.contains("synthesis") ? j.at("synthesis") : Json();
  if (!flat.is_array() || flat.size() != static_cast<std::size_t>(k) * n)
    throw ParseError("synthesis must hold k*n complex entries");
  Matrix synthesis(k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c)
      synthesis(r, c) = complex_from_json(flat[static_cast<std::size_t>(r) * n + c]);

  std::vector<double> spectrum;
  if (j.contains("spectrum"))
    spectrum = field<std::vector<double>>(j, "spectrum");
  try {
    return Frame(std::move(synthesis), std::move(layout), std::move(spectrum));
  } catch (const InvalidArgument &e) {
    throw ParseError(e.what());
  }
}

Json params_to_json(const DualParams &p) {
  Json out = Json::array();
  for (const auto &s : p.shifts)
    out.push_back(vector_to_json(s));
  return out;
}

DualParams params_from_json(const Json &j, const Frame &f) {
  const int m = f.layout().count();
  const int k = f.dimension();
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw ParseError("expected a list of " + std::to_string(m) + " shift vectors");
  DualParams p;
  for (const auto &vec : j) {
    if (!vec.is_array() || static_cast<int>(vec.size()) != k)
      throw ParseError("every shift vector must have " + std::to_string(k) + " entries");
    Vector s(k);
    for (int c = 0; c < k; ++c)
      s(c) = complex_from_json(vec[c]);
    p.shifts.push_back(std::move(s));
  }
  return p;
}

Json dual_to_json(const Frame &f, const DualFrame &d) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["k"] = f.dimension();
  j["n"] = f.size();
  j["components"] = f.layout().sizes;
  j["vectors"] = flat_row_major(d.vectors);
  j["params"] = params_or_null(d.params);
  return j;
}

Json erasure_report_to_json(const ErasureReport &r) {
  std::vector<int> lambda(r.lambda.indices().begin(), r.lambda.indices().end());
  for (auto &i : lambda)
    ++i;
  Json eig = Json::array();
  for (const auto &z : r.eigenvalues)
    eig.push_back(complex_to_json(z));
  Json j;
  j["lambda"] = lambda;
  j["radius"] = r.radius;
  j["eigenvalues"] = std::move(eig);
  j["reduced"] = matrix_rows_to_json(r.reduced);
  return j;
}

Json sod_report_to_json(const SodReport &r) {
  Json witnesses = Json::array();
  for (const auto &w : r.witnesses)
    witnesses.push_back(params_to_json(w));
  Json details = Json::array();
  for (const auto &c : r.details)
    details.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}});
  Json j;
  j["schema"] = kSchemaVersion;
  j["r"] = r.r;
  j["predicted"] = r.predicted;
  j["measured"] = r.measured;
  j["canonical_optimal"] = r.canonical_optimal;
  j["unique"] = to_string(r.unique);
  j["witnesses"] = std::move(witnesses);
  j["details"] = std::move(details);
  j["notes"] = r.notes;
  return j;
}

Json search_report_to_json(const SearchReport &r) {
  Json points = Json::array();
  for (const auto &p : r.optimal_points)
    points.push_back(params_to_json(p));
  Json j;
  j["schema"] = kSchemaVersion;
  j["r"] = r.r;
  j["best_rho"] = r.best_rho;
  j["canonical_rho"] = r.canonical_rho;
  j["evaluations"] = r.evaluations;
  j["improved"] = r.improved;
  j["best_params"] = params_to_json(r.best_params);
  j["optimal_points"] = std::move(points);
  return j;
}

} // namespace gframe
