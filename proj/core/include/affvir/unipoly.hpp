#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affvir/scalar.hpp"

namespace affvir {

class NotCoprime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Q(λ, α, β, γ); coeffs()[k] multiplies x^k.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);
  UniPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static UniPoly x();
  /// a*x + b
  static UniPoly linear(const Scalar& a, const Scalar& b);

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& leading() const { return c_.back(); }
  Scalar coeff(int k) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Scalar& s) const;

  UniPoly monic() const;
  /// p(x + shift)
  UniPoly shifted(const Rat& shift) const;
  Scalar evaluate(const Scalar& at) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Scalar> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) throws std::invalid_argument.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

struct Bezout {
  UniPoly a;
  UniPoly b;
};

/// Cofactors with a*p + b*q = 1, deg a < deg q and deg b < deg p.
/// Throws NotCoprime when gcd(p, q) != 1.
Bezout ext_euclid(const UniPoly& p, const UniPoly& q);

std::string to_string(const UniPoly& p, const std::string& var = "t");

}  // namespace affvir
