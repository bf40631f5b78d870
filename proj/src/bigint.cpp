#include "dpcolor/bigint.hpp"

#include <stdexcept>

namespace dpcolor {

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int falling_factorial_at(const Int& m, unsigned long k) {
  Int r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= m - static_cast<long>(i);
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_decimal(const Int& x) { return x.get_str(); }

std::string to_decimal(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

Int exact_div(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("exact_div: zero divisor");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0)
    throw std::domain_error("exact_div: " + num.get_str() + " not divisible by " + den.get_str());
  return q;
}

bool is_integral(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_den() == 1;
}

Int to_integer(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() != 1)
    throw std::domain_error("to_integer: " + c.get_str() + " is not an integer");
  return c.get_num();
}

}  // namespace dpcolor
