#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/dpmin.hpp"

namespace dpcolor {

struct CheckReport {
  std::string name;
  std::string params;
  std::string expected;
  std::string observed;
  bool pass = false;
  double runtime_ms = 0.0;
};

// Each check compares an independently computed prediction against the
// engine. Precondition violations and exhausted budgets come back as failed
// reports carrying the error text, never as silent skips.

// dp_exact == chromatic polynomial (via the PEO product) for every m in 1..m_max
CheckReport check_chordal_equality(const Graph& g, int m_max,
                                   std::uint64_t budget = kDefaultConfigBudget);
// dp_exact == the one-cycle formula for the parity of the unique cycle
CheckReport check_unicyclic(const Graph& g, int m, std::uint64_t budget = kDefaultConfigBudget);
// dp_exact(theta(a,b), m) == the matching closed form
CheckReport check_theta(int a, int b, int m, std::uint64_t budget = kDefaultConfigBudget);
// diagonal/off-diagonal end-coloring classes of G-e are uniform and satisfy
// m r = P(G-e,m) - P(G,m) and m (m-1) t = P(G,m)
CheckReport check_lemma_ends(const Graph& g, Edge e, int m);
// low-order coefficients of P match the binomial expressions in s, g, t
CheckReport check_broken_circuit(const Graph& g);
// the five path-pattern covers lose exactly A_1..A_5 colorings, and when
// deleting both path edges leaves a forest the sweep minimum is base - max A_i
CheckReport check_path_delete(const Graph& g, int a1, int a2, int a3, int m,
                              std::uint64_t budget = kDefaultConfigBudget);
// every sampled cover of K_1 v g at fold m counts at least the join bound
CheckReport check_join_bound(const Graph& g, int m, long samples, std::uint64_t seed,
                             std::uint64_t budget = kDefaultConfigBudget);

// count of the lemma-selected extremal cover equals edge_delete_extremal_value
// for every edge
CheckReport check_edge_delete_extremal(const Graph& g, int m);
// witness present iff expected; when present its twisted cover count equals
// the witness value, strictly below P(G,m)
CheckReport check_strict_gap(const Graph& g, int m, bool expect_witness);
// sampled mean within three standard errors of the exact expectation
CheckReport check_monte_carlo(const Graph& g, int m, long samples, std::uint64_t seed);
// greedy lower bound (when defined) <= dp_exact <= identity-cover count
CheckReport check_sandwich(const Graph& g, int m, std::uint64_t budget = kDefaultConfigBudget);
// P(G,m) - dp_formula value stays within m^(n-2) across the range
CheckReport check_asymptotic_gap(const Graph& g, int m_lo, int m_hi);
// identity-cover count equals the chromatic polynomial evaluation
CheckReport check_natural_bijection(const Graph& g, int m);

// named graphs exercised by run_all and the test suites
std::vector<std::pair<std::string, Graph>> standard_battery();

std::vector<CheckReport> run_all(std::uint64_t budget, std::uint64_t seed);

}  // namespace dpcolor
