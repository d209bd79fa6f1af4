#include "gframe/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "gframe/reproduce.hpp"

namespace gframe {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string params;
  int r = 0;
  bool verbose = false;
  bool json = false;
  std::uint64_t seed = 0;
  std::int64_t budget = SearchConfig{}.budget;
  int trials = VerifyOptions{}.probe_trials;
  double report_tol = 1e-9;
  Tolerances tol;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json(const std::string &path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(path + ": " + e.what());
  }
}

Frame load_frame(const Options &o) { return lg_frame(parse_edge_list(read_file(o.input)), o.tol); }

DualFrame load_dual(const Frame &f, const Options &o) {
  if (o.params.empty())
    return canonical_dual(f, o.tol);
  return dual_from_params(f, params_from_json(read_json(o.params), f), o.tol);
}

void emit(const Options &o, const std::string &text, std::ostream &out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file)
    throw ParseError("cannot write " + o.output);
  file << text;
}

void emit(const Options &o, const Json &j, std::ostream &out) { emit(o, j.dump(2) + "\n", out); }

int cmd_build(const Options &o, std::ostream &out) {
  emit(o, frame_to_json(load_frame(o), o.tol), out);
  return kExitOk;
}

int cmd_dual(const Options &o, std::ostream &out) {
  const Frame f = load_frame(o);
  emit(o, dual_to_json(f, load_dual(f, o)), out);
  return kExitOk;
}

int cmd_rho(const Options &o, std::ostream &out) {
  const Frame f = load_frame(o);
  const DualFrame d = load_dual(f, o);
  RhoOptions ro;
  ro.keep_reports = o.verbose;
  ro.tol = o.tol;
  const RhoResult res = rho_r(f, d, o.r, ro);

  std::vector<int> witness, vertices;
  for (int i : res.witness.indices()) {
    witness.push_back(i + 1);
    vertices.push_back(f.layout().vertex[i] + 1);
  }
  Json j;
  j["schema"] = kSchemaVersion;
  j["r"] = o.r;
  j["dual"] = o.params.empty() ? "canonical" : "params";
  j["radius"] = res.radius;
  j["witness"] = witness;
  j["witness_vertices"] = vertices;
  j["evaluated"] = res.evaluated;
  if (o.verbose) {
    Json reports = Json::array();
    for (const auto &rep : res.reports)
      reports.push_back(erasure_report_to_json(rep));
    j["reports"] = std::move(reports);
  }
  emit(o, j, out);
  return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
  const Frame f = load_frame(o);
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.probe_trials = o.trials;
  vo.tol = o.tol;
  std::vector<int> orders = o.r == 0 ? std::vector<int>{1, 2} : std::vector<int>{o.r};
  // A two-vertex frame has no 2-erasure sets to examine.
  if (o.r == 0 && f.size() <= 2)
    orders = {1};

  bool passed = true;
  Json reports = Json::array();
  for (int r : orders) {
    const SodReport rep = verify_sod(f, r, vo);
    passed = passed && rep.all_passed();
    reports.push_back(sod_report_to_json(rep));
  }
  Json j;
  j["schema"] = kSchemaVersion;
  j["passed"] = passed;
  j["reports"] = std::move(reports);
  emit(o, j, out);
  return passed ? kExitOk : kExitVerificationFailed;
}

int cmd_search(const Options &o, std::ostream &out) {
  const Frame f = load_frame(o);
  SearchConfig cfg;
  cfg.seed = o.seed;
  cfg.budget = o.budget;
  emit(o, search_report_to_json(search_optimal_dual(f, o.r, cfg, o.tol)), out);
  return kExitOk;
}

int cmd_reproduce(const Options &o, std::ostream &out) {
  const ReproduceResult res = reproduce_examples(o.report_tol);
  if (o.json)
    emit(o, reproduce_to_json(res), out);
  else
    emit(o, format_table(res), out);
  return res.all_passed() ? kExitOk : kExitVerificationFailed;
}

void add_common(CLI::App *sub, Options &o) {
  sub->add_option("--output,-o", o.output, "Write the report to this path instead of standard output");
  sub->add_option("--eig-tol", o.tol.eig, "Eigensolver residual bound")->check(CLI::PositiveNumber);
  sub->add_option("--zero-tol", o.tol.zero, "Bound for eigenvalues treated as zero")->check(CLI::PositiveNumber);
  sub->add_option("--dual-tol", o.tol.dual, "Duality residual bound")->check(CLI::PositiveNumber);
}

CLI::App *add_graph_command(CLI::App &app, const char *name, const char *help, Options &o) {
  auto *sub = app.add_subcommand(name, help);
  sub->add_option("file", o.input, "Edge-list file")->required();
  add_common(sub, o);
  return sub;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Graph frames, dual frames and erasure error operators", "gframe"};
  app.require_subcommand(1);

  auto *build = add_graph_command(app, "build", "Build the L_G frame of a graph", o);
  auto *dual = add_graph_command(app, "dual", "Compute a dual frame", o);
  dual->add_option("--params", o.params, "JSON shift parameters (default: canonical dual)");
  auto *rho = add_graph_command(app, "rho", "Worst-case error-operator spectral radius", o);
  rho->add_option("-r", o.r, "Erasure order")->required();
  rho->add_option("--params", o.params, "JSON shift parameters (default: canonical dual)");
  rho->add_flag("--verbose,-v", o.verbose, "Include every erasure set");
  auto *verify = add_graph_command(app, "verify", "Check optimality of the canonical dual", o);
  verify->add_option("-r", o.r, "Erasure order (default: 1 and 2)")->check(CLI::IsMember({1, 2}));
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--trials", o.trials, "Shifted duals sampled by the strictness probe")->check(CLI::PositiveNumber);
  auto *search = add_graph_command(app, "search", "Numerically minimize rho over the dual family", o);
  search->add_option("-r", o.r, "Erasure order")->required()->check(CLI::IsMember({1, 2}));
  search->add_option("--budget", o.budget, "Maximum objective evaluations")->check(CLI::NonNegativeNumber);
  search->add_option("--seed", o.seed, "Random seed");
  auto *reproduce = app.add_subcommand("reproduce", "Run the worked five-vertex checks");
  reproduce->add_flag("--json", o.json, "Machine-readable output");
  reproduce->add_option("--tol", o.report_tol, "Residual tolerance")->check(CLI::PositiveNumber);
  reproduce->add_option("--output,-o", o.output, "Write the report to this path instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed())
      return cmd_build(o, out);
    if (dual->parsed())
      return cmd_dual(o, out);
    if (rho->parsed())
      return cmd_rho(o, out);
    if (verify->parsed())
      return cmd_verify(o, out);
    if (search->parsed())
      return cmd_search(o, out);
    if (reproduce->parsed())
      return cmd_reproduce(o, out);
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

} // namespace gframe
