#include "affvir/structure.hpp"

#include <algorithm>

namespace affvir {

std::string to_string(StructureError::Code code) {
  switch (code) {
    case StructureError::Code::ZeroVector: return "ZeroVector";
    case StructureError::Code::NotSimple: return "NotSimple";
    case StructureError::Code::SearchExhausted: return "SearchExhausted";
    case StructureError::Code::ParameterNotHalfInteger: return "ParameterNotHalfInteger";
    case StructureError::Code::InvalidWitness: return "InvalidWitness";
  }
  return "?";
}

namespace {

std::optional<long> twice_nonneg_integer(const Scalar& beta) {
  auto b = beta.as_rational();
  if (!b) return std::nullopt;
  Rat twice = 2 * *b;
  if (!is_integer(twice) || sgn(twice) < 0 || !twice.get_num().fits_slong_p()) return std::nullopt;
  return twice.get_num().get_si();
}

Int ceil_abs(const Rat& r) {
  Int out;
  Int num = abs(r.get_num());
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
  return out;
}

Int floor_of(const Rat& r) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return out;
}

}  // namespace

std::optional<long> twice_beta_in_nonneg_integers(const ModuleSpec& spec) {
  if (!spec.beta()) return std::nullopt;
  return twice_nonneg_integer(*spec.beta());
}

bool is_simple(const ModuleSpec& spec) {
  if (spec.family() != Family::Theta) return true;
  return !twice_beta_in_nonneg_integers(spec).has_value();
}

UniPoly theta_submodule_generator(const Rat& beta) {
  auto n2 = twice_nonneg_integer(Scalar(beta));
  if (!n2) throw StructureError(StructureError::Code::ParameterNotHalfInteger, "2*beta is not in Z+");
  UniPoly out(Scalar(1));
  for (long n = 0; n <= *n2; ++n)
    out = out * UniPoly::linear(Scalar(make_rat(1, 2)), Scalar(beta - n));
  return out;
}

std::optional<SubmoduleShape> proper_submodule(const ModuleSpec& spec) {
  if (is_simple(spec)) return std::nullopt;
  return SubmoduleShape{SubmoduleShape::Kind::Principal, theta_submodule_generator(*spec.beta()->as_rational())};
}

bool in_shape(const SubmoduleShape& shape, const SPoly& p) {
  if (p.is_zero()) return true;
  SPoly quotient;
  for (int j = 0; j <= p.degree_s(); ++j) {
    UniPoly c = p.coeff_s(static_cast<std::uint32_t>(j));
    if (c.is_zero()) continue;
    DivMod qr = divmod(c, shape.g);
    if (!qr.remainder.is_zero()) return false;
    quotient += SPoly::from_t(qr.quotient) * SPoly::monomial(static_cast<std::uint32_t>(j), 0);
  }
  if (shape.kind == SubmoduleShape::Kind::TwoGen) return quotient.coeff(0, 0).is_zero();
  return true;
}

CheckReport check_invariance(const ModuleSpec& spec, const SubmoduleShape& shape, int window, int degree) {
  CheckReport report;
  const auto basis = basis_window(window);
  std::vector<SPoly> multipliers;
  if (shape.kind == SubmoduleShape::Kind::Principal)
    multipliers = {SPoly(1)};
  else
    multipliers = {SPoly::s(), SPoly::t()};
  const SPoly g = SPoly::from_t(shape.g);
  for (const auto& x : basis) {
    ActionFormula f = action_formula(spec, x);
    for (int j = 0; j <= degree; ++j) {
      for (int k = 0; k <= degree; ++k) {
        for (const auto& m : multipliers) {
          SPoly v = SPoly::monomial(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)) * m * g;
          SPoly image = apply_formula(f, v);
          ++report.checked;
          if (!in_shape(shape, image))
            report.failures.push_back({"NotInvariant", "x=" + to_string(x) + " v=" + to_string(v),
                                       "element of the submodule", to_string(image), ""});
        }
      }
    }
  }
  return report;
}

CheckReport tau_check(const Scalar& lambda, const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                      int degree, int window) {
  auto b = beta.as_rational();
  if (!b || !twice_nonneg_integer(beta))
    throw StructureError(StructureError::Code::ParameterNotHalfInteger,
                         "tau needs 2*beta in Z+, got beta = " + to_string(beta));
  const SPoly product = SPoly::from_t(theta_submodule_generator(*b));
  const ModuleSpec source = ModuleSpec::make(Family::Theta, lambda, alpha, -beta - Scalar(1), gamma);
  const ModuleSpec target = ModuleSpec::make(Family::Theta, lambda, alpha, beta, gamma);
  CheckReport report;
  for (const auto& x : basis_window(window)) {
    ActionFormula fs = action_formula(source, x);
    ActionFormula ft = action_formula(target, x);
    for (int j = 0; j <= degree; ++j) {
      for (int k = 0; k <= degree; ++k) {
        SPoly g = SPoly::monomial(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k));
        SPoly lhs = apply_formula(fs, g) * product;
        SPoly rhs = apply_formula(ft, g * product);
        ++report.checked;
        if (lhs != rhs)
          report.failures.push_back({"tau_intertwines", "x=" + to_string(x) + " g=" + to_string(g), to_string(rhs),
                                     to_string(lhs), "difference " + to_string(lhs - rhs)});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// generate_one

GenWitness::GenWitness(const ModuleSpec& spec, EnvelopingElement u, SPoly target, int shift)
    : u_(std::move(u)), target_(std::move(target)), shift_(shift) {
  SPoly image = act_word(spec, u_, target_);
  if (image != SPoly(1))
    throw StructureError(StructureError::Code::InvalidWitness,
                         "witness does not map " + to_string(target_) + " to 1: got " + to_string(image));
}

namespace {

EnvelopingElement poly_in_h0(const UniPoly& p) {
  EnvelopingElement out;
  for (int m = 0; m <= p.degree(); ++m) {
    const Scalar& c = p.coeffs()[static_cast<std::size_t>(m)];
    if (!c.is_zero()) out.add(Word(static_cast<std::size_t>(m), Gen::h(0)), c);
  }
  return out;
}

UniPoly to_t_poly(const SPoly& p) {
  auto u = p.as_t_only();
  if (!u) throw std::logic_error("expected a polynomial in t alone");
  return *u;
}

int search_bound(const ModuleSpec& spec, const UniPoly& seed) {
  const long d = seed.degree();
  long beta_term = 0;
  std::optional<Rat> beta;
  if (spec.beta()) beta = spec.beta()->as_rational();
  if (beta) beta_term = ceil_abs(2 * *beta).get_si();
  // Heuristic bound; see below for the ones that are guaranteed.
  long bound = 2 * d + beta_term + 2;
  // Each bad k needs two roots of the seed at distance 2k (Omega, Delta) or
  // 4k (Theta): at most d(d-1)/2 values.
  const long pair_bound = d * (d - 1) / 2 + 1;
  bound = std::max(bound, pair_bound);
  if (spec.family() == Family::Theta && beta) {
    // Theta also needs k beyond every collision between a seed root r and the
    // product roots 2n - 2beta, 2beta - 2n; those need k <= |beta| + |r|/2, and
    // Cauchy's bound R >= |r| is computable when the seed is rational.
    UniPoly monic = seed.monic();
    Rat radius = 0;
    bool rational = true;
    for (int i = 0; i < monic.degree(); ++i) {
      auto c = monic.coeffs()[static_cast<std::size_t>(i)].as_rational();
      if (!c) {
        rational = false;
        break;
      }
      radius = std::max(radius, Rat(abs(*c)));
    }
    if (rational) {
      Rat reach = abs(*beta) + (1 + radius) / 2;
      bound = std::max(bound, pair_bound + floor_of(reach).get_si());
    }
  }
  return static_cast<int>(bound);
}

}  // namespace

GenWitness generate_one(const ModuleSpec& spec, const SPoly& w) {
  using Code = StructureError::Code;
  if (w.is_zero()) throw StructureError(Code::ZeroVector, "generate_one: the zero vector generates nothing");
  if (!is_simple(spec)) {
    auto shape = proper_submodule(spec);
    bool inside = in_shape(*shape, w);
    throw StructureError(Code::NotSimple, to_string(spec) + " is not simple: C[s,t]*(" + to_string(shape->g) +
                                              ") is a proper submodule" +
                                              (inside ? " containing w" : ""));
  }

  const Scalar& lambda = spec.lambda();
  const GenKind raise = spec.family() == Family::Delta ? GenKind::F : GenKind::E;

  // (lambda x_0 - x_1) . g = (unit) * (g(s,.) - g(s-1,.)) with a t-shift,
  // so each application lowers the s-degree by one.
  const EnvelopingElement strip_step = lambda * EnvelopingElement(Gen{raise, 0}) - EnvelopingElement(Gen{raise, 1});
  EnvelopingElement strip = EnvelopingElement::unit();
  SPoly cur = w;
  while (cur.degree_s() > 0) {
    cur = act_word(spec, strip_step, cur);
    strip = strip_step * strip;
  }
  const UniPoly seed = to_t_poly(cur);
  if (seed.degree() == 0) return GenWitness(spec, seed.leading().inverse() * strip, w, 0);

  const int bound = search_bound(spec, seed);
  const SPoly seed_poly = cur;
  for (int k = 1; k <= bound; ++k) {
    EnvelopingElement up, uq;
    if (spec.family() == Family::Theta) {
      up = EnvelopingElement(Gen::e(0)).pow(static_cast<unsigned>(k));
      uq = EnvelopingElement(Gen::f(0)).pow(static_cast<unsigned>(k));
    } else {
      up = EnvelopingElement::unit();
      uq = EnvelopingElement(Gen{raise, 0}).pow(static_cast<unsigned>(k));
    }
    UniPoly p = to_t_poly(act_word(spec, up, seed_poly));
    UniPoly q = to_t_poly(act_word(spec, uq, seed_poly));
    if (gcd(p, q).degree() != 0) continue;
    Bezout bz = ext_euclid(p, q);
    EnvelopingElement closing = poly_in_h0(bz.a) * up + poly_in_h0(bz.b) * uq;
    return GenWitness(spec, closing * strip, w, k);
  }
  throw StructureError(Code::SearchExhausted, "generate_one: no coprime shift found for k <= " +
                                                  std::to_string(bound));
}

// ---------------------------------------------------------------------------
// iso_check

namespace {

int e0_t_degree(Family f) {
  switch (f) {
    case Family::Omega: return 0;
    case Family::Theta: return 1;
    case Family::Delta: return 2;
  }
  return -1;
}

}  // namespace

IsoResult iso_check(const ModuleSpec& a, const ModuleSpec& b) {
  if (a.family() != b.family()) {
    // An isomorphism commutes with d_0 = s and h_0 = t, so it is
    // multiplication by a nonzero constant and must carry e_0 . 1 to itself.
    const int da = e0_t_degree(a.family());
    const int db = e0_t_degree(b.family());
    std::string reason = "distinguishing invariant: e[0].1 has t-degree " + std::to_string(da) + " in " +
                         to_string(a.family()) + " and " + std::to_string(db) + " in " + to_string(b.family()) +
                         "; e[0] acts bijectively only in Omega";
    return {false, reason, true};
  }
  if (a.lambda() != b.lambda()) return {false, "lambda differs", false};
  if (a.gamma() != b.gamma()) return {false, "gamma differs", false};
  if (a.alpha() != b.alpha()) return {false, "alpha differs", false};
  if (a.family() == Family::Theta) {
    if (*a.beta() == *b.beta()) return {true, "parameters equal", false};
    return {false, "beta differs; Theta is determined by its parameters", false};
  }
  if (a.beta() && b.beta()) {
    if (*a.beta() == *b.beta()) return {true, "parameters equal", false};
    if (*a.beta() == -*b.beta() - Scalar(1)) return {true, "related by beta -> -beta-1", false};
  }
  if (a.kappa() == b.kappa()) return {true, "same beta*(beta+1)", false};
  return {false, "beta*(beta+1) differs", false};
}

}  // namespace affvir
