#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "affvir/unipoly.hpp"

namespace affvir {

/// Exponent pair (deg_s, deg_t).
struct SExp {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  friend bool operator==(const SExp&, const SExp&) = default;
};

/// Descending graded order on (s, t) with s > t; this is the print order.
struct SExpOrder {
  bool operator()(const SExp& a, const SExp& b) const {
    if (a.s + a.t != b.s + b.t) return a.s + a.t > b.s + b.t;
    return a.s > b.s;
  }
};

/// Variable names used when printing; modules use (s, t), the classifier
/// uses (d0, h0).
struct SVarNames {
  std::string s = "s";
  std::string t = "t";
};

/// Sparse polynomial in s, t with Scalar coefficients.
class SPoly {
 public:
  using TermMap = std::map<SExp, Scalar, SExpOrder>;

  SPoly() = default;
  SPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  SPoly(long c) : SPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static SPoly monomial(std::uint32_t s_deg, std::uint32_t t_deg, const Scalar& c = Scalar(1));
  static SPoly s() { return monomial(1, 0); }
  static SPoly t() { return monomial(0, 1); }
  static SPoly from_t(const UniPoly& p);
  static SPoly from_s(const UniPoly& p);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(std::uint32_t s_deg, std::uint32_t t_deg) const;
  /// -1 for the zero polynomial.
  int degree_s() const;
  int degree_t() const;

  SPoly& add(const SExp& e, const Scalar& c);
  SPoly operator-() const;
  SPoly& operator+=(const SPoly& o);
  SPoly& operator-=(const SPoly& o);
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  SPoly scaled(const Scalar& c) const;
  SPoly pow(unsigned n) const;

  /// g(s + ds, t + dt), by binomial expansion.
  SPoly shifted(const Rat& ds, const Rat& dt) const;

  /// Coefficient of s^j as a polynomial in t.
  UniPoly coeff_s(std::uint32_t j) const;
  /// Coefficient of t^k as a polynomial in s.
  UniPoly coeff_t(std::uint32_t k) const;
  /// The polynomial as an element of (Q(params)[s])[t]: index k holds the
  /// t^k coefficient.
  std::optional<UniPoly> as_t_only() const;

  SPoly substitute(const std::map<Param, Rat>& bindings) const;

  friend bool operator==(const SPoly&, const SPoly&) = default;

 private:
  TermMap terms_;
};

std::string to_string(const SPoly& p, const SVarNames& names = {});

/// Prints a polynomial with rational coefficients as `(primitive)/den` when the
/// content has a nontrivial denominator, e.g. (t^2-1)/4. Falls back to
/// to_string for coefficients that involve parameters.
std::string to_string_content_form(const SPoly& p, const SVarNames& names = {});

}  // namespace affvir
