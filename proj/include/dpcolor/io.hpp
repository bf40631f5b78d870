#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dpcolor/chromatic.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/dpmin.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/polynomial.hpp"
#include "dpcolor/verify.hpp"

namespace dpcolor {

using OrderedJson = nlohmann::ordered_json;

// family grammar: path:N, cycle:N, complete:N, theta:A,B, unicyclic:K,T,
// join:K<p>,<family>, file:PATH
Graph parse_family_spec(const std::string& spec);

// text format: header line "n e", then e lines "u v" (0-indexed)
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);

// "a" or inclusive "a..b"
std::pair<int, int> parse_m_range(const std::string& text);

OrderedJson poly_to_json(const IntPolynomial& p);
OrderedJson cover_to_json(const Cover& c);
Cover cover_from_json(const OrderedJson& j);

// one m-value of the dp pipeline: closed form when a theorem applies, the
// exhaustive sweep when it fits the budget; when both run they must agree
struct DpComputation {
  int m = 0;
  std::optional<ColoringCount> formula_value;
  std::string formula_provenance;
  std::string formula_note;
  std::optional<DpMinResult> exact;
  Int required_configurations;
  std::uint64_t budget = 0;

  std::optional<ColoringCount> value() const;
  std::vector<std::string> provenance() const;
};
DpComputation compute_dp(const Graph& g, int m, std::uint64_t budget, int threads);

// machine outputs carry no timing so identical inputs give identical bytes
OrderedJson dp_report_json(const std::string& label, const Graph& g,
                           const std::vector<DpComputation>& runs);
std::string dp_report_table(const std::string& label, const Graph& g,
                            const std::vector<DpComputation>& runs);

std::string scan_csv(const std::string& label, const Graph& g,
                     const std::vector<DpComputation>& runs);

OrderedJson bounds_json(const std::string& label, const Graph& g, int m, const BoundReport& r);
std::string bounds_table(const std::string& label, const Graph& g, int m, const BoundReport& r);

std::string check_reports_jsonl(const std::vector<CheckReport>& reports);
std::string check_reports_table(const std::vector<CheckReport>& reports);

}  // namespace dpcolor
