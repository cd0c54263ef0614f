#pragma once

// Random generators and independent evaluators shared by the test suites.

#include <affvir/module.hpp>

#include <map>
#include <random>

namespace affvir::testkit {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// p/q with |p| <= 9, 1 <= q <= 6.
inline Rat random_rat(Rng& rng, bool nonzero = false) {
  for (;;) {
    Rat r = make_rat(uniform(rng, -9, 9), uniform(rng, 1, 6));
    if (!nonzero || r != 0) return r;
  }
}

/// Small random polynomial in L, A, B, G.
inline ParamPoly random_param_poly(Rng& rng, int terms = 3, unsigned max_exp = 2) {
  ParamPoly out;
  for (int i = 0; i < terms; ++i) {
    std::array<unsigned, kNumParams> e{};
    for (auto& x : e) x = static_cast<unsigned>(uniform(rng, 0, max_exp));
    out += ParamPoly::term(random_rat(rng), Monomial::from_exponents(e));
  }
  return out;
}

inline Scalar random_scalar(Rng& rng, bool nonzero = false) {
  for (;;) {
    ParamPoly den = random_param_poly(rng, 2, 1);
    if (den.is_zero()) den = ParamPoly(1);
    Scalar x = Scalar::fraction(random_param_poly(rng), den);
    if (!nonzero || !x.is_zero()) return x;
  }
}

/// Random polynomial in s, t with rational coefficients, total degree <= degree.
inline SPoly random_spoly(Rng& rng, int degree, int terms = 4) {
  SPoly out;
  for (int i = 0; i < terms; ++i) {
    auto j = static_cast<std::uint32_t>(uniform(rng, 0, degree));
    auto k = static_cast<std::uint32_t>(uniform(rng, 0, degree - static_cast<long>(j)));
    out += SPoly::monomial(j, k, Scalar(random_rat(rng)));
  }
  return out;
}

inline std::map<Param, Rat> random_point(Rng& rng) {
  return {{Param::Lambda, random_rat(rng, true)},
          {Param::Alpha, random_rat(rng, true)},
          {Param::Beta, random_rat(rng)},
          {Param::Gamma, random_rat(rng)}};
}

/// Value of a parameter-free Scalar.
inline Rat value(const Scalar& x) {
  auto r = x.as_rational();
  if (!r) throw std::logic_error("value: scalar still depends on parameters");
  return *r;
}

/// Evaluates a polynomial with rational coefficients at (s, t) by plain
/// Horner-free summation.
inline Rat eval(const SPoly& p, const Rat& s, const Rat& t) {
  Rat out = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat term = value(c);
    for (std::uint32_t i = 0; i < e.s; ++i) term *= s;
    for (std::uint32_t i = 0; i < e.t; ++i) term *= t;
    out += term;
  }
  return out;
}

}  // namespace affvir::testkit
