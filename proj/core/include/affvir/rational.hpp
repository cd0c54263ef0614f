#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace affvir {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonicalizes after every operation).
using Rat = mpq_class;
using Int = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

/// Parses "p" or "p/q" with an optional leading sign.
std::optional<Rat> parse_rat(std::string_view text);

std::string to_string(const Rat& r);

bool is_integer(const Rat& r);

/// Exact square root when r is the square of a rational.
std::optional<Rat> rat_sqrt(const Rat& r);

/// n! as an exact integer.
Int factorial(unsigned n);

/// Binomial coefficient C(n, k).
Int binomial(unsigned n, unsigned k);

/// Signed rational power; throws DivisionByZero for 0^negative.
Rat rat_pow(const Rat& base, long exponent);

}  // namespace affvir
