#pragma once

// Exact rational scalars and vectors.  Every computation in this library runs
// on these types; there is no floating point anywhere on the computation path.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsn {

// Raised for malformed input (bad rational strings, bad JSON, unknown keys).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace exactq {

// mpq_class keeps itself canonical (reduced, positive denominator) after
// every arithmetic operation; values built from raw parts go through
// make_rational() which canonicalizes.
using Rational = mpq_class;
using Integer  = mpz_class;
using Vector   = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p" or "p/q" with optional leading '-', decimal digits only.
// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Vector& v);

Integer ceil(const Rational& q);
Integer floor(const Rational& q);
Rational abs(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& a, const Vector& v);
Rational dot(const Vector& a, const Vector& b);
Rational l1_norm(const Vector& v);

}  // namespace exactq
}  // namespace fsn
