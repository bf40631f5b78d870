#pragma once

#include <vector>

#include "dpcolor/bigint.hpp"

namespace dpcolor {

// Exact integer-coefficient polynomial, coefficient of the i-th power at
// index i. Normalized: no trailing zero coefficients, zero polynomial is the
// empty list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;

  // quotient of division by (x - root); throws std::domain_error on a
  // nonzero remainder
  IntPolynomial divide_linear_exact(const Int& root) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Int> coeffs_;
};

// x (x-1) ... (x-k+1)
IntPolynomial falling_factorial_poly(int k);

}  // namespace dpcolor
