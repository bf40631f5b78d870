#include "doctest.h"

#include "dpcolor/chromatic.hpp"
#include "dpcolor/verify.hpp"
#include "oracle.hpp"

using namespace dpcolor;

TEST_CASE("deletion-contraction matches brute-force counting on the battery") {
  for (const auto& [name, g] : standard_battery()) {
    CAPTURE(name);
    const IntPolynomial p = chromatic_polynomial(g);
    for (int m = 1; m <= 4; ++m) CHECK(p.eval(m) == oracle::proper_colorings(g, m));
  }
}

TEST_CASE("shortcut detection changes nothing") {
  ChromaticOptions raw;
  raw.closed_forms = false;
  for (const auto& [name, g] : standard_battery()) {
    CAPTURE(name);
    CHECK(chromatic_polynomial(g) == chromatic_polynomial(g, raw));
  }
}

TEST_CASE("closed forms of the classic families") {
  CHECK(chromatic_polynomial(Graph::cycle(4)).coeffs() ==
        std::vector<Int>{Int(0), Int(-3), Int(6), Int(-4), Int(1)});

  // trees: m (m-1)^{n-1}
  const IntPolynomial tree = chromatic_polynomial(Graph::path(5));
  for (int m = 1; m <= 5; ++m) CHECK(tree.eval(m) == Int(m) * int_pow(Int(m - 1), 4));

  const IntPolynomial k4 = chromatic_polynomial(Graph::complete(4));
  CHECK(k4.eval(1) == 0);
  CHECK(k4.eval(2) == 0);
  CHECK(k4.eval(3) == 0);
  CHECK(k4.eval(4) == 24);

  // disconnected input: product over components
  const Graph two(5, {{0, 1}, {1, 2}, {3, 4}});
  const IntPolynomial p = chromatic_polynomial(two);
  CHECK(p.eval(3) == 12 * 6);
}

TEST_CASE("chordal product form equals deletion-contraction") {
  for (const auto& [name, g] : standard_battery()) {
    const auto peo = chordal_peo(g);
    if (!peo) continue;
    CAPTURE(name);
    CHECK(chordal_product_poly(*peo) == chromatic_polynomial(g));
  }
}

TEST_CASE("clique-sum polynomial factorization") {
  const IntPolynomial pc3 = chromatic_polynomial(Graph::cycle(3));
  const IntPolynomial pc4 = chromatic_polynomial(Graph::cycle(4));
  CHECK(clique_sum_poly(pc3, pc4, 2) == chromatic_polynomial(Graph::theta(3, 4)));

  const IntPolynomial pk2 = chromatic_polynomial(Graph::complete(2));
  CHECK(clique_sum_poly(pk2, pk2, 1) == chromatic_polynomial(Graph::path(3)));
}

TEST_CASE("leading coefficients from edge count, girth, and girth cycles") {
  CHECK(broken_circuit_coeffs(4, 4, 1) == std::vector<Int>{Int(1), Int(4), Int(6), Int(3)});
  CHECK(broken_circuit_coeffs(5, 5, 1) ==
        std::vector<Int>{Int(1), Int(5), Int(10), Int(10), Int(4)});
  CHECK(broken_circuit_coeffs(6, 3, 1) == std::vector<Int>{Int(1), Int(6), Int(14)});
  CHECK_THROWS(broken_circuit_coeffs(2, 2, 1));
  CHECK_THROWS(broken_circuit_coeffs(2, 3, 1));

  // against actual polynomials, all girthy battery members
  for (const auto& [name, g] : standard_battery()) {
    const auto gi = girth_and_count(g);
    if (!gi.girth) continue;
    CAPTURE(name);
    const IntPolynomial p = chromatic_polynomial(g);
    const auto want = broken_circuit_coeffs(g.edge_count(), *gi.girth, gi.cycle_count);
    const int n = g.vertex_count();
    for (int i = 0; i < *gi.girth; ++i)
      CHECK(want[i] == Int(i % 2 == 0 ? 1 : -1) * p.coeff(n - i));
  }
}

TEST_CASE("chromatic number read off the polynomial") {
  CHECK(chromatic_number(chromatic_polynomial(Graph::cycle(5))) == 3);
  CHECK(chromatic_number(chromatic_polynomial(Graph::complete(4))) == 4);
  CHECK(chromatic_number(chromatic_polynomial(Graph::path(6))) == 2);
  CHECK(chromatic_number(chromatic_polynomial(join_with_complete(Graph::cycle(4), 1))) == 3);
  CHECK_THROWS(chromatic_number(IntPolynomial{}));
}

TEST_CASE("node budget stops runaway recursion loudly") {
  ChromaticOptions opt;
  opt.node_budget = 2;
  opt.closed_forms = false;
  CHECK_THROWS_AS(chromatic_polynomial(Graph::complete(5), opt), std::runtime_error);
}
