#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dpcolor/io.hpp"

using namespace dpcolor;

namespace {

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::invalid_argument("cannot open output file '" + output_path + "'");
  out << text;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    out.push_back(std::stoi(tok, &pos));
    if (pos != tok.size()) throw std::invalid_argument("bad integer list '" + s + "'");
  }
  return out;
}

struct PolyOpts {
  std::string graph;
  std::string m;
  std::uint64_t node_budget = 1'000'000;
  std::string format = "table";
  std::string output;
};

int run_poly(const PolyOpts& o) {
  const Graph g = parse_family_spec(o.graph);
  ChromaticOptions opt;
  opt.node_budget = static_cast<long>(o.node_budget);
  const IntPolynomial p = chromatic_polynomial(g, opt);
  std::vector<std::pair<int, Int>> evals;
  if (!o.m.empty()) {
    const auto [lo, hi] = parse_m_range(o.m);
    for (int m = lo; m <= hi; ++m) evals.emplace_back(m, p.eval(m));
  }
  if (o.format == "json") {
    OrderedJson doc;
    doc["graph"] = o.graph;
    doc["n"] = g.vertex_count();
    doc["edges"] = g.edge_count();
    const OrderedJson pj = poly_to_json(p);
    doc["degree"] = pj.at("degree");
    doc["coeffs"] = pj.at("coeffs");
    if (!evals.empty()) {
      auto arr = OrderedJson::array();
      for (const auto& [m, v] : evals) {
        OrderedJson e;
        e["m"] = m;
        e["value"] = v.get_str();
        arr.push_back(std::move(e));
      }
      doc["evaluations"] = std::move(arr);
    }
    emit(doc.dump(2) + "\n", o.output);
  } else {
    std::ostringstream os;
    os << o.graph << " (n=" << g.vertex_count() << ", edges=" << g.edge_count() << ")\n";
    os << "  coefficients (ascending powers):";
    for (const Int& c : p.coeffs()) os << ' ' << c.get_str();
    os << '\n';
    for (const auto& [m, v] : evals) os << "  P(" << m << ") = " << v.get_str() << '\n';
    emit(os.str(), o.output);
  }
  return 0;
}

struct DpOpts {
  std::string graph;
  std::string m = "3";
  std::uint64_t budget = kDefaultConfigBudget;
  int threads = 1;
  std::string format = "table";
  std::string output;
};

int run_dp(const DpOpts& o) {
  const Graph g = parse_family_spec(o.graph);
  const auto [lo, hi] = parse_m_range(o.m);
  std::vector<DpComputation> runs;
  for (int m = lo; m <= hi; ++m) runs.push_back(compute_dp(g, m, o.budget, o.threads));
  if (o.format == "json")
    emit(dp_report_json(o.graph, g, runs).dump(2) + "\n", o.output);
  else
    emit(dp_report_table(o.graph, g, runs), o.output);
  for (const DpComputation& c : runs)
    if (!c.value()) return 2;
  return 0;
}

struct BoundsOpts {
  std::string graph;
  int m = 3;
  long samples = 1000;
  std::uint64_t seed = 12345;
  std::string format = "table";
  std::string output;
};

int run_bounds(const BoundsOpts& o) {
  const Graph g = parse_family_spec(o.graph);
  const BoundReport r = monte_carlo_bound(g, o.m, o.samples, o.seed);
  if (o.format == "json")
    emit(bounds_json(o.graph, g, o.m, r).dump(2) + "\n", o.output);
  else
    emit(bounds_table(o.graph, g, o.m, r), o.output);
  return 0;
}

struct ScanOpts {
  std::string graph;
  std::string m = "2..6";
  std::uint64_t budget = kDefaultConfigBudget;
  int threads = 1;
  std::string output;
};

int run_scan(const ScanOpts& o) {
  const Graph g = parse_family_spec(o.graph);
  const auto [lo, hi] = parse_m_range(o.m);
  std::vector<DpComputation> runs;
  for (int m = lo; m <= hi; ++m) runs.push_back(compute_dp(g, m, o.budget, o.threads));
  emit(scan_csv(o.graph, g, runs), o.output);
  return 0;
}

struct VerifyOpts {
  bool all = false;
  std::string check;
  std::string params;
  std::uint64_t budget = kDefaultConfigBudget;
  std::uint64_t seed = 12345;
  std::string format = "table";
  std::string output;
};

int run_verify(const VerifyOpts& o) {
  std::vector<CheckReport> reports;
  if (!o.check.empty() && !o.params.empty()) {
    if (o.check != "theta")
      throw std::invalid_argument("--params is only supported with --check theta (a,b,m)");
    const auto ps = split_ints(o.params);
    if (ps.size() != 3) throw std::invalid_argument("--check theta needs --params a,b,m");
    reports.push_back(check_theta(ps[0], ps[1], ps[2], o.budget));
  } else {
    reports = run_all(o.budget, o.seed);
    if (!o.check.empty()) {
      std::vector<CheckReport> kept;
      for (CheckReport& r : reports)
        if (r.name == o.check) kept.push_back(std::move(r));
      if (kept.empty()) throw std::invalid_argument("no check named '" + o.check + "'");
      reports = std::move(kept);
    }
  }
  if (o.format == "jsonl")
    emit(check_reports_jsonl(reports), o.output);
  else
    emit(check_reports_table(reports), o.output);
  for (const CheckReport& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chromatic polynomials and DP color functions of small graphs"};
  app.require_subcommand(1);
  int rc = 0;

  const std::string graph_help = "graph family spec (path:N, cycle:N, complete:N, theta:A,B, "
                                 "unicyclic:K,T, join:K<p>,<family>, file:PATH)";

  PolyOpts po;
  auto* poly = app.add_subcommand("poly", "chromatic polynomial coefficients and evaluations");
  poly->add_option("--graph", po.graph, graph_help)->required();
  poly->add_option("--m", po.m, "m value or inclusive range a..b");
  poly->add_option("--budget", po.node_budget, "deletion-contraction node budget");
  poly->add_option("--format", po.format)->check(CLI::IsMember({"table", "json"}));
  poly->add_option("--output", po.output, "write to file instead of stdout");
  poly->callback([&] { rc = run_poly(po); });

  DpOpts dpo;
  auto* dp = app.add_subcommand("dp", "DP color function: closed forms and exhaustive sweep");
  dp->add_option("--graph", dpo.graph, graph_help)->required();
  dp->add_option("--m", dpo.m, "m value or inclusive range a..b");
  dp->add_option("--budget", dpo.budget, "configuration budget for the exhaustive sweep")
      ->envname("DPCOLOR_BUDGET");
  dp->add_option("--threads", dpo.threads, "worker threads for the sweep")
      ->check(CLI::PositiveNumber);
  dp->add_option("--format", dpo.format)->check(CLI::IsMember({"table", "json"}));
  dp->add_option("--output", dpo.output, "write to file instead of stdout");
  dp->callback([&] { rc = run_dp(dpo); });

  BoundsOpts bo;
  auto* bounds = app.add_subcommand("bounds", "greedy lower bound and Monte Carlo upper bounds");
  bounds->add_option("--graph", bo.graph, graph_help)->required();
  bounds->add_option("--m", bo.m, "fold size")->check(CLI::PositiveNumber);
  bounds->add_option("--samples", bo.samples, "number of random covers")
      ->check(CLI::PositiveNumber);
  bounds->add_option("--seed", bo.seed, "PRNG seed");
  bounds->add_option("--format", bo.format)->check(CLI::IsMember({"table", "json"}));
  bounds->add_option("--output", bo.output, "write to file instead of stdout");
  bounds->callback([&] { rc = run_bounds(bo); });

  ScanOpts so;
  auto* scan = app.add_subcommand("scan", "CSV of chromatic value, dp value, and gap per m");
  scan->add_option("--graph", so.graph, graph_help)->required();
  scan->add_option("--m", so.m, "m value or inclusive range a..b");
  scan->add_option("--budget", so.budget, "configuration budget for the exhaustive sweep")
      ->envname("DPCOLOR_BUDGET");
  scan->add_option("--threads", so.threads, "worker threads for the sweep")
      ->check(CLI::PositiveNumber);
  scan->add_option("--output", so.output, "write to file instead of stdout");
  scan->callback([&] { rc = run_scan(so); });

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run the verification battery");
  verify->add_flag("--all", vo.all, "run every check (the default)");
  verify->add_option("--check", vo.check, "run only checks with this name");
  verify->add_option("--params", vo.params, "direct parameters, e.g. --check theta --params 3,4,3");
  verify->add_option("--budget", vo.budget, "configuration budget for the exhaustive sweeps")
      ->envname("DPCOLOR_BUDGET");
  verify->add_option("--seed", vo.seed, "PRNG seed for the randomized checks");
  verify->add_option("--format", vo.format)->check(CLI::IsMember({"table", "jsonl"}));
  verify->add_option("--output", vo.output, "write to file instead of stdout");
  verify->callback([&] { rc = run_verify(vo); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
