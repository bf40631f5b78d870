#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dpcolor {

// Exact arithmetic everywhere: coloring counts are integers, the path-delete
// quantities and Monte Carlo statistics are rationals. No floating point.
using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(const Int& base, unsigned long exp);
Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// m (m-1) ... (m-k+1) at an integer point
Int falling_factorial_at(const Int& m, unsigned long k);

// canonicalized rational num/den (mpq_class does not canonicalize on its own)
Rat make_rat(const Int& num, const Int& den);

std::string to_decimal(const Int& x);
std::string to_decimal(const Rat& x);  // "p/q" in lowest terms, "p" when integral

// throws std::domain_error if den does not divide num
Int exact_div(const Int& num, const Int& den);

bool is_integral(const Rat& x);
Int to_integer(const Rat& x);  // throws std::domain_error if not integral

}  // namespace dpcolor
