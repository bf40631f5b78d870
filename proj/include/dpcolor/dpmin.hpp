#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/cover.hpp"

namespace dpcolor {

inline constexpr std::uint64_t kDefaultConfigBudget = 10'000'000;

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(Int required_, std::uint64_t budget_);
  Int required;
  std::uint64_t budget;
};

struct DpMinResult {
  ColoringCount minimum;
  // gauge-normalized, lexicographically first minimizer by permutation rank
  // sequence over the non-tree edges
  Cover witness;
  std::uint64_t configurations_enumerated = 0;
  bool exhaustive = false;
};

// Exact minimum coloring count over all m-fold covers with full matchings.
// Fiber relabelings make every spanning-tree matching the identity without
// changing the count, so only the non-tree edges are swept: (m!)^c
// configurations for cyclomatic number c, in lexicographic rank order.
// Deterministic for any thread count.
DpMinResult dp_exact(const Graph& g, int m, std::uint64_t budget = kDefaultConfigBudget,
                     int threads = 1);

struct DpFormula {
  std::optional<ColoringCount> value;
  // which family matched: "chordal", "onecycle(i)", "onecycle(ii)",
  // "cyclepluschord(i)", "cyclepluschord(ii)", "cyclepluschord(iii)";
  // empty when no family matched
  std::string provenance;
  // set when a family matched but m is below the formula's validity range
  std::string note;
};
// closed-form value where one is known to hold
DpFormula dp_formula(const Graph& g, int m);

// product of (m - d_i) over the degeneracy ordering's back degrees;
// requires m strictly above the maximum back degree
ColoringCount greedy_lower_bound(const Graph& g, int m);

struct BoundReport {
  std::optional<ColoringCount> greedy_lower;  // absent when m <= max back degree
  ColoringCount chromatic_upper;              // identity-cover count = P(G,m)
  Rat expected_mean;                          // m^n (m-1)^E / m^E
  Rat monte_carlo_mean;
  Rat sample_variance;                        // unbiased, exact
  ColoringCount min_sampled;
  long samples = 0;
  std::uint64_t seed = 0;
};
BoundReport monte_carlo_bound(const Graph& g, int m, long samples, std::uint64_t seed);

// P(G-e,m) - max{ P(G-e,m) - P(G,m), P(G,m)/(m-1) }, the extremal coloring
// count over covers differing from the identity only at e
ColoringCount edge_delete_extremal_value(const Graph& g, int m, Edge e);
// the cover attaining it: identity matching everywhere when
// P(G-e,m) - P(G,m) >= P(G,m)/(m-1), otherwise the cyclic twist at e
Cover extremal_edge_cover(const Graph& g, int m, Edge e);

struct GapWitness {
  Edge edge;
  ColoringCount value;  // P(G-e,m) - P(G,m)/(m-1), strictly below P(G,m)
};
// first edge (lexicographically) with P(G-e,m) < m/(m-1) P(G,m), if any
std::optional<GapWitness> strict_gap_witness(const Graph& g, int m);

struct PathDeleteReport {
  std::array<Rat, 5> quantities;                  // A_1..A_5
  std::array<ColoringCount, 5> predicted_counts;  // P(G_0,m) - A_i
  ColoringCount base;                             // P(G_0,m), both path edges deleted
  int max_index = 0;                              // 1-based, smallest index attaining max A_i
};
// exact coloring-count losses of the five path-pattern covers on a1-a2-a3
PathDeleteReport path_delete_quantities(const Graph& g, int m, int a1, int a2, int a3);

// right-hand side of the join bound for K_p v G: the minimum of P(K_p v G, m)
// and the recursively built product-plus-remainder term. Requires the
// coloring number of g to be at least 3 and m >= col(g) + 2 + p.
ColoringCount join_lower_bound(const Graph& g, int p, int m,
                               std::uint64_t budget = kDefaultConfigBudget);

}  // namespace dpcolor
