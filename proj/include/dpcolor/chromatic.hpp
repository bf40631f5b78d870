#pragma once

#include <vector>

#include "dpcolor/graph.hpp"
#include "dpcolor/polynomial.hpp"

namespace dpcolor {

struct ChromaticOptions {
  long node_budget = 1'000'000;
  // detect trees, cycles and cliques and emit their closed forms instead of
  // recursing all the way down to edgeless graphs
  bool closed_forms = true;
};

// exact chromatic polynomial by deletion-contraction over a non-bridge edge,
// splitting into connected components first
IntPolynomial chromatic_polynomial(const Graph& g, const ChromaticOptions& opt = {});

Int eval_poly(const IntPolynomial& p, const Int& m);

// product of (x - alpha_i) over a verified perfect elimination ordering
IntPolynomial chordal_product_poly(const EliminationOrdering& peo);

// polynomial of a clique-sum from the operands' polynomials, gluing over a
// k-clique: p1 * p2 with the shared falling factorial divided back out
IntPolynomial clique_sum_poly(const IntPolynomial& p1, const IntPolynomial& p2, int k);

// coefficients a_0..a_{g-1} with P(G,m) = sum_i (-1)^i a_i m^{n-i}, from the
// edge count s, the girth g, and the number t of girth-length cycles
std::vector<Int> broken_circuit_coeffs(long s, int g, long t);

// least positive integer where p evaluates to a positive value
int chromatic_number(const IntPolynomial& p);

}  // namespace dpcolor
