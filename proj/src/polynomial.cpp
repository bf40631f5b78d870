#include "dpcolor/polynomial.hpp"

#include <stdexcept>

namespace dpcolor {

namespace {
void trim(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

IntPolynomial IntPolynomial::constant(Int c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::monomial(Int c, int power) {
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  std::vector<Int> v(power + 1, Int(0));
  v[power] = std::move(c);
  return IntPolynomial(std::move(v));
}

Int IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Int IntPolynomial::eval(const Int& x) const {
  Int r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPolynomial IntPolynomial::divide_linear_exact(const Int& root) const {
  if (coeffs_.empty()) return {};
  std::vector<Int> q(coeffs_.size() - 1, Int(0));
  Int carry = 0;  // running value of the synthetic division
  for (int i = degree(); i >= 1; --i) {
    carry = carry * root + coeffs_[i];
    q[i - 1] = carry;
  }
  const Int remainder = carry * root + coeffs_[0];
  if (remainder != 0)
    throw std::domain_error("divide_linear_exact: nonzero remainder " + remainder.get_str() +
                            " at root " + root.get_str());
  return IntPolynomial(std::move(q));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(r));
}

IntPolynomial falling_factorial_poly(int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial_poly: negative k");
  IntPolynomial r = IntPolynomial::constant(1);
  for (int i = 0; i < k; ++i)
    r = r * IntPolynomial({Int(-i), Int(1)});
  return r;
}

}  // namespace dpcolor
