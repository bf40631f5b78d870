#include "doctest.h"

#include "dpcolor/bigint.hpp"
#include "dpcolor/polynomial.hpp"

using namespace dpcolor;

TEST_CASE("big integer helpers") {
  CHECK(int_pow(Int(3), 0) == 1);
  CHECK(int_pow(Int(-2), 5) == -32);
  CHECK(factorial(6) == 720);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 7) == 0);
  CHECK(falling_factorial_at(Int(5), 3) == 60);
  CHECK(falling_factorial_at(Int(2), 4) == 0);

  CHECK(exact_div(Int(45), Int(3)) == 15);
  CHECK_THROWS(exact_div(Int(44), Int(3)));
  CHECK_THROWS(exact_div(Int(7), Int(0)));
}

TEST_CASE("rationals are canonicalized on construction") {
  CHECK(make_rat(Int(4), Int(6)) == make_rat(Int(2), Int(3)));
  CHECK(make_rat(Int(-4), Int(-6)) == make_rat(Int(2), Int(3)));
  CHECK(make_rat(Int(3), Int(-1)) < Rat(0));
  CHECK_THROWS(make_rat(Int(1), Int(0)));

  CHECK(is_integral(make_rat(Int(12), Int(4))));
  CHECK_FALSE(is_integral(make_rat(Int(13), Int(4))));
  CHECK(to_integer(make_rat(Int(12), Int(4))) == 3);
  CHECK_THROWS(to_integer(make_rat(Int(13), Int(4))));

  CHECK(to_decimal(make_rat(Int(32), Int(2))) == "16");
  CHECK(to_decimal(make_rat(Int(1), Int(3))) == "1/3");
}

TEST_CASE("polynomial arithmetic and evaluation") {
  const IntPolynomial p({Int(1), Int(-2), Int(1)});  // (x-1)^2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Int(4)) == 9);
  CHECK(p.coeff(5) == 0);

  const IntPolynomial q = IntPolynomial::monomial(Int(3), 1);  // 3x
  CHECK((p * q).eval(Int(2)) == 6);
  CHECK((p + q).eval(Int(2)) == 7);
  CHECK((p - q).eval(Int(2)) == -5);

  // trailing zero coefficients trim away
  CHECK(IntPolynomial({Int(1), Int(0), Int(0)}).degree() == 0);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{}.eval(Int(7)) == 0);
}

TEST_CASE("synthetic division is exact or loud") {
  // (x-1)(x-2) / (x-1)
  const IntPolynomial p({Int(2), Int(-3), Int(1)});
  const IntPolynomial q = p.divide_linear_exact(Int(1));
  CHECK(q.degree() == 1);
  CHECK(q.eval(Int(5)) == 3);
  CHECK_THROWS(p.divide_linear_exact(Int(4)));
}

TEST_CASE("falling factorial polynomial") {
  const IntPolynomial ff3 = falling_factorial_poly(3);  // x(x-1)(x-2)
  CHECK(ff3.coeffs() == std::vector<Int>{Int(0), Int(2), Int(-3), Int(1)});
  CHECK(ff3.eval(Int(5)) == 60);
  CHECK(falling_factorial_poly(0).eval(Int(9)) == 1);
}
