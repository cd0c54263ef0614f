#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affvir/rational.hpp"

namespace affvir {

/// The four module parameters λ, α, β, γ; printed as L, A, B, G.
enum class Param : std::uint8_t { Lambda = 0, Alpha = 1, Beta = 2, Gamma = 3 };
inline constexpr int kNumParams = 4;

char param_symbol(Param p);
std::optional<Param> param_from_symbol(char c);

/// Exponent vector (deg_λ, deg_α, deg_β, deg_γ) packed into one word so that
/// integer comparison is graded-lexicographic with λ > α > β > γ.
/// Layout: [total:16][λ:12][α:12][β:12][γ:12].
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 4095;

  constexpr Monomial() = default;
  static Monomial from_exponents(const std::array<unsigned, kNumParams>& e);
  static Monomial variable(Param p, unsigned power = 1);

  unsigned exponent(Param p) const {
    return static_cast<unsigned>((bits_ >> shift(p)) & 0xFFFu);
  }
  unsigned total_degree() const { return static_cast<unsigned>(bits_ >> 48); }
  std::array<unsigned, kNumParams> exponents() const;
  bool is_one() const { return bits_ == 0; }

  bool divides(Monomial other) const;
  /// Requires divides(other).
  Monomial quotient_of(Monomial other) const { return Monomial(other.bits_ - bits_); }
  static Monomial min(Monomial a, Monomial b);

  friend Monomial operator*(Monomial a, Monomial b);
  friend constexpr auto operator<=>(Monomial a, Monomial b) = default;

 private:
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  static constexpr unsigned shift(Param p) { return 36u - 12u * static_cast<unsigned>(p); }
  std::uint64_t bits_ = 0;
};

struct ParamTerm {
  Monomial mono;
  Rat coef;
};

/// Sparse polynomial in λ, α, β, γ with rational coefficients. Terms are kept
/// sorted by descending monomial with no zero coefficients.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  static ParamPoly variable(Param p);
  static ParamPoly term(const Rat& c, Monomial m);
  /// Takes terms in any order, merges duplicates and drops zeros.
  static ParamPoly from_terms(std::vector<ParamTerm> terms);

  const std::vector<ParamTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<Rat> constant_value() const;
  std::size_t size() const { return terms_.size(); }

  const ParamTerm& leading() const { return terms_.front(); }
  unsigned degree(Param p) const;
  unsigned total_degree() const;
  unsigned min_total_degree() const;
  bool contains(Param p) const { return degree(p) > 0; }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly scaled(const Rat& c) const;
  ParamPoly times_monomial(const Rat& c, Monomial m) const;

  /// Exact quotient, or nullopt when `d` does not divide *this.
  std::optional<ParamPoly> divide_exact(const ParamPoly& d) const;

  /// Positive rational c such that *this / c has coprime integer coefficients.
  Rat content() const;

  ParamPoly substitute(Param p, const Rat& value) const;

  /// Coefficients with respect to `p`, indexed by degree in `p`.
  std::vector<ParamPoly> coefficients_in(Param p) const;
  static ParamPoly from_coefficients(Param p, const std::vector<ParamPoly>& coeffs);

  /// Exact square root with positive leading coefficient, if one exists.
  std::optional<ParamPoly> sqrt() const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

 private:
  std::vector<ParamTerm> terms_;
};

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive leading coefficient. gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// Divides by the signed content so the result has coprime integer
/// coefficients and a positive leading coefficient. Returns the factor removed.
Rat make_primitive(ParamPoly& p);

std::string to_string(const ParamPoly& p);

}  // namespace affvir
