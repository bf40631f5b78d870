#include "dpcolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dpcolor {

namespace {

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer for " + what + ", got '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument("expected an integer for " + what + ", got '" + s + "'");
  return v;
}

std::pair<int, int> parse_int_pair(const std::string& s, const std::string& what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument(what + " takes two comma-separated integers, got '" + s + "'");
  return {parse_int(s.substr(0, comma), what), parse_int(s.substr(comma + 1), what)};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

Graph parse_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("family spec needs the form name:args, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (name == "path") return Graph::path(parse_int(args, "path"));
  if (name == "cycle") return Graph::cycle(parse_int(args, "cycle"));
  if (name == "complete") return Graph::complete(parse_int(args, "complete"));
  if (name == "theta") {
    const auto [a, b] = parse_int_pair(args, "theta");
    return Graph::theta(a, b);
  }
  if (name == "unicyclic") {
    const auto [k, t] = parse_int_pair(args, "unicyclic");
    return Graph::unicyclic(k, t);
  }
  if (name == "join") {
    const auto comma = args.find(',');
    if (comma == std::string::npos || args.empty() || args[0] != 'K')
      throw std::invalid_argument("join spec is join:K<p>,<family>, got '" + spec + "'");
    const int p = parse_int(args.substr(1, comma - 1), "join clique size");
    return join_with_complete(parse_family_spec(args.substr(comma + 1)), p);
  }
  if (name == "file") return read_graph_file(args);
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

Graph read_graph_text(std::istream& in) {
  int n = 0, e = 0;
  if (!(in >> n >> e)) throw std::invalid_argument("graph text: expected header 'n e'");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(std::max(e, 0)));
  for (int i = 0; i < e; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("graph text: edge list ended after " + std::to_string(i) +
                                  " of " + std::to_string(e) + " edges");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  return read_graph_text(in);
}

std::pair<int, int> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int m = parse_int(text, "m");
    return {m, m};
  }
  const int lo = parse_int(text.substr(0, dots), "m range start");
  const int hi = parse_int(text.substr(dots + 2), "m range end");
  if (lo > hi)
    throw std::invalid_argument("empty m range '" + text + "'");
  return {lo, hi};
}

OrderedJson poly_to_json(const IntPolynomial& p) {
  OrderedJson doc;
  doc["degree"] = p.degree();
  auto arr = OrderedJson::array();
  for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
  doc["coeffs"] = std::move(arr);
  return doc;
}

OrderedJson cover_to_json(const Cover& c) {
  OrderedJson doc;
  doc["n"] = c.graph().vertex_count();
  doc["m"] = c.fold();
  auto arr = OrderedJson::array();
  const auto& edges = c.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    OrderedJson je;
    je["u"] = edges[i].u;
    je["v"] = edges[i].v;
    je["perm"] = c.perms()[i];
    arr.push_back(std::move(je));
  }
  doc["edges"] = std::move(arr);
  return doc;
}

Cover cover_from_json(const OrderedJson& j) {
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (const auto& je : j.at("edges")) {
    int u = je.at("u").get<int>();
    int v = je.at("v").get<int>();
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
    by_edge[{u, v}] = je.at("perm").get<std::vector<int>>();
  }
  Graph g(n, edges);
  std::vector<std::vector<int>> perms;
  perms.reserve(g.edges().size());
  for (const Edge& e : g.edges()) perms.push_back(by_edge.at({e.u, e.v}));
  return Cover(std::move(g), m, std::move(perms));
}

std::optional<ColoringCount> DpComputation::value() const {
  if (formula_value) return formula_value;
  if (exact) return exact->minimum;
  return std::nullopt;
}

std::vector<std::string> DpComputation::provenance() const {
  std::vector<std::string> out;
  if (formula_value) out.push_back("theorem:" + formula_provenance);
  if (exact) out.emplace_back("exhaustive");
  return out;
}

DpComputation compute_dp(const Graph& g, int m, std::uint64_t budget, int threads) {
  if (!g.connected()) throw std::invalid_argument("dp requires a connected graph");
  DpComputation c;
  c.m = m;
  c.budget = budget;
  const DpFormula f = dp_formula(g, m);
  c.formula_value = f.value;
  c.formula_provenance = f.provenance;
  c.formula_note = f.note;
  c.required_configurations =
      int_pow(factorial(static_cast<unsigned long>(m)),
              static_cast<unsigned long>(g.cyclomatic_number()));
  if (c.required_configurations <= Int(budget)) {
    c.exact = dp_exact(g, m, budget, threads);
    if (c.formula_value && *c.formula_value != c.exact->minimum)
      throw std::logic_error("closed form and exhaustive sweep disagree at m=" +
                             std::to_string(m));
  }
  return c;
}

OrderedJson dp_report_json(const std::string& label, const Graph& g,
                           const std::vector<DpComputation>& runs) {
  OrderedJson doc;
  doc["graph"] = label;
  doc["n"] = g.vertex_count();
  doc["edges"] = g.edge_count();
  auto results = OrderedJson::array();
  for (const DpComputation& c : runs) {
    OrderedJson r;
    r["m"] = c.m;
    const auto v = c.value();
    if (v)
      r["value"] = v->get_str();
    else
      r["value"] = nullptr;
    r["provenance"] = c.provenance();
    if (c.exact) {
      r["configurations"] = c.exact->configurations_enumerated;
      r["witness"] = cover_to_json(c.exact->witness);
    } else {
      r["exhaustive_skipped"] = true;
      r["required_configurations"] = c.required_configurations.get_str();
      r["budget"] = c.budget;
      if (!c.formula_value && !c.formula_note.empty()) r["note"] = c.formula_note;
    }
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  return doc;
}

std::string dp_report_table(const std::string& label, const Graph& g,
                            const std::vector<DpComputation>& runs) {
  std::ostringstream os;
  os << label << " (n=" << g.vertex_count() << ", edges=" << g.edge_count() << ")\n";
  for (const DpComputation& c : runs) {
    os << "  m=" << c.m << ": ";
    const auto v = c.value();
    os << (v ? v->get_str() : std::string("unknown"));
    const auto prov = c.provenance();
    if (!prov.empty()) os << "  [" << join(prov, ", ") << "]";
    if (c.exact)
      os << "  (" << c.exact->configurations_enumerated << " configurations)";
    else
      os << "  (exhaustive sweep skipped: needs " << c.required_configurations.get_str()
         << " configurations, budget " << c.budget << ")";
    if (!v && !c.formula_note.empty()) os << "  " << c.formula_note;
    os << '\n';
  }
  return os.str();
}

std::string scan_csv(const std::string& label, const Graph& g,
                     const std::vector<DpComputation>& runs) {
  std::ostringstream os;
  os << "graph,n,edges,m,chromatic,dp_value,dp_provenance,gap\n";
  const IntPolynomial p = chromatic_polynomial(g);
  for (const DpComputation& c : runs) {
    const Int chrom = p.eval(c.m);
    const auto v = c.value();
    os << csv_field(label) << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << c.m
       << ',' << chrom.get_str() << ',';
    if (v) os << v->get_str();
    os << ',' << csv_field(join(c.provenance(), "+")) << ',';
    if (v) os << Int(chrom - *v).get_str();
    os << '\n';
  }
  return os.str();
}

OrderedJson bounds_json(const std::string& label, const Graph& g, int m, const BoundReport& r) {
  OrderedJson doc;
  doc["graph"] = label;
  doc["n"] = g.vertex_count();
  doc["edges"] = g.edge_count();
  doc["m"] = m;
  if (r.greedy_lower)
    doc["greedy_lower"] = r.greedy_lower->get_str();
  else
    doc["greedy_lower"] = nullptr;
  doc["chromatic_upper"] = r.chromatic_upper.get_str();
  doc["expected_mean"] = to_decimal(r.expected_mean);
  doc["monte_carlo_mean"] = to_decimal(r.monte_carlo_mean);
  doc["sample_variance"] = to_decimal(r.sample_variance);
  doc["min_sampled"] = r.min_sampled.get_str();
  doc["samples"] = r.samples;
  doc["seed"] = r.seed;
  return doc;
}

std::string bounds_table(const std::string& label, const Graph& g, int m, const BoundReport& r) {
  std::ostringstream os;
  os << label << " (n=" << g.vertex_count() << ", edges=" << g.edge_count() << "), m=" << m
     << '\n';
  os << "  greedy lower bound:   "
     << (r.greedy_lower ? r.greedy_lower->get_str() : std::string("n/a (m too small)")) << '\n';
  os << "  chromatic upper:      " << r.chromatic_upper.get_str() << '\n';
  os << "  expected mean:        " << to_decimal(r.expected_mean) << '\n';
  os << "  monte carlo mean:     " << to_decimal(r.monte_carlo_mean) << '\n';
  os << "  sample variance:      " << to_decimal(r.sample_variance) << '\n';
  os << "  min sampled count:    " << r.min_sampled.get_str() << '\n';
  os << "  samples:              " << r.samples << '\n';
  os << "  seed:                 " << r.seed << '\n';
  return os.str();
}

std::string check_reports_jsonl(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const CheckReport& r : reports) {
    OrderedJson j;
    j["name"] = r.name;
    j["params"] = r.params;
    j["expected"] = r.expected;
    j["observed"] = r.observed;
    j["pass"] = r.pass;
    os << j.dump() << '\n';
  }
  return os.str();
}

std::string check_reports_table(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const CheckReport& r : reports) {
    os << (r.pass ? "pass" : "FAIL") << "  " << std::left << std::setw(18) << r.name << ' '
       << std::setw(34) << r.params << ' ' << std::right << std::fixed << std::setprecision(1)
       << std::setw(8) << r.runtime_ms << " ms\n";
    if (!r.pass) {
      os << "      expected: " << r.expected << '\n';
      os << "      observed: " << r.observed << '\n';
    }
    if (r.pass) ++passed;
  }
  os << passed << '/' << reports.size() << " checks passed\n";
  return os.str();
}

}  // namespace dpcolor
