#pragma once

#include <map>
#include <optional>
#include <string>

#include "affvir/param_poly.hpp"

namespace affvir {

/// Element of Q(λ, α, β, γ) in canonical form: gcd(num, den) = 1 and den is a
/// primitive integer polynomial with positive leading coefficient. Equality is
/// structural. A Scalar with no parameters is a plain rational (instantiated
/// mode).
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(const Rat& r) : num_(r), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : Scalar(Rat(v)) {}          // NOLINT(google-explicit-constructor)
  Scalar(const ParamPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

  static Scalar param(Param p) { return Scalar(ParamPoly::variable(p)); }
  /// Builds num/den and normalizes; throws DivisionByZero if den is zero.
  static Scalar fraction(ParamPoly num, ParamPoly den);

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rat> as_rational() const;
  /// True when the printed form starts with a minus sign.
  bool is_negative_leading() const { return !num_.is_zero() && sgn(num_.leading().coef) < 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar scaled(const Rat& c) const;

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar substitute(Param p, const Rat& value) const;
  Scalar substitute(const std::map<Param, Rat>& bindings) const;
  bool depends_on(Param p) const { return num_.contains(p) || den_.contains(p); }

  /// Square root inside Q(λ, α, β, γ) when one exists.
  std::optional<Scalar> sqrt() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Scalar(ParamPoly num, ParamPoly den, bool /*canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  ParamPoly num_;
  ParamPoly den_;
};

std::string to_string(const Scalar& s);

/// Appends one summand `coef*body` to a sum being printed. An empty body means
/// a constant term. Handles the sign and parenthesizes multi-term coefficients
/// so the output reparses to the same value.
void append_term(std::string& out, const Scalar& coef, const std::string& body);

}  // namespace affvir
