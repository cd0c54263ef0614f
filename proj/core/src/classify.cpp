#include "affvir/classify.hpp"

namespace affvir {

std::string to_string(ClassifyError::Code code) {
  using C = ClassifyError::Code;
  switch (code) {
    case C::Equ1Violated: return "Equ1Violated";
    case C::DegreeConstraintViolated: return "DegreeConstraintViolated";
    case C::NonConstantResidual: return "NonConstantResidual";
    case C::ValidationFailed: return "ValidationFailed";
    case C::PNotConstant: return "PNotConstant";
    case C::UnsupportedGenerator: return "UnsupportedGenerator";
  }
  return "?";
}

UniPoly HFreeData::p_at(long i) const {
  if (p) return p->scaled(Scalar(i));
  return UniPoly(gamma * Scalar(i));
}

namespace {

using Code = ClassifyError::Code;

const char* const kEF = "[e0,f0].1 = h0";
const char* const kEE = "[e0,e1].1 = 0";
const char* const kFF = "[f0,f1].1 = 0";
const char* const kDegree = "m+n = 2 and a_m*b_n = -1/4";
const char* const kDE = "[d1,e0].1 = 0";

SPoly h0() { return SPoly::t(); }
SPoly d0() { return SPoly::s(); }

std::string show(const SPoly& p) { return to_string(p, kCartanNames); }
std::string show_d0(const UniPoly& p) { return to_string(p, "d0"); }

SPoly h_action(const HFreeData& base, long i, const SPoly& g) {
  return g.shifted(Rat(-i), 0).scaled(base.lambda.pow(i)) * h0();
}

SPoly d_action(const HFreeData& base, long i, const SPoly& g) {
  SPoly factor = d0() + SPoly::from_t(base.p_at(i));
  return g.shifted(Rat(-i), 0).scaled(base.lambda.pow(i)) * factor;
}

/// h-free part of a polynomial in d0, h0, as a polynomial in d0.
UniPoly h_free(const SPoly& p) { return p.coeff_t(0); }

}  // namespace

SPoly derive_e(const EFCandidate& c, long i) {
  if (i == 0) return c.e0;
  // e_i . 1 = 1/2 (h_i . E0 - e_0 . (h_i . 1))
  SPoly hi_one = h_action(c.base, i, SPoly(1));
  SPoly e0_hi = hi_one.shifted(0, -2) * c.e0;
  return (h_action(c.base, i, c.e0) - e0_hi).scaled(Scalar(make_rat(1, 2)));
}

SPoly derive_f(const EFCandidate& c, long i) {
  if (i == 0) return c.f0;
  // f_i . 1 = -1/2 (h_i . F0 - f_0 . (h_i . 1))
  SPoly hi_one = h_action(c.base, i, SPoly(1));
  SPoly f0_hi = hi_one.shifted(0, 2) * c.f0;
  return (h_action(c.base, i, c.f0) - f0_hi).scaled(Scalar(make_rat(-1, 2)));
}

SPoly derive_action(const EFCandidate& c, const Gen& x, const SPoly& g, ActionPolicy policy) {
  const long i = x.index;
  switch (x.kind) {
    case GenKind::E:
    case GenKind::F: {
      if (i != 0 && policy == ActionPolicy::DirectOnly)
        throw ClassifyError(Code::UnsupportedGenerator, "",
                            to_string(x) + " is not determined directly by E0 and F0");
      const bool e = x.kind == GenKind::E;
      SPoly factor = e ? derive_e(c, i) : derive_f(c, i);
      return g.shifted(Rat(-i), e ? -2 : 2) * factor;
    }
    case GenKind::H: return h_action(c.base, i, g);
    case GenKind::D: return d_action(c.base, i, g);
    case GenKind::C: return SPoly();
  }
  return SPoly();
}

CheckReport lemma_identity_check(const ModuleSpec& spec, long i, int m, int degree) {
  if (m < 0) throw std::invalid_argument("lemma_identity_check: m must be nonnegative");
  CheckReport report;
  const auto power = static_cast<unsigned>(m);
  const EnvelopingElement d = Gen::d(0);
  const EnvelopingElement h = Gen::h(0);
  struct Identity {
    std::string name;
    EnvelopingElement lhs;
    EnvelopingElement rhs;
  };
  const std::string ie = "e[" + std::to_string(i) + "]";
  const std::string jf = "f[" + std::to_string(i) + "]";
  const EnvelopingElement e = Gen::e(i);
  const EnvelopingElement f = Gen::f(i);
  const Scalar shift(i);
  const std::vector<Identity> identities = {
      {ie + " d[0]^m = (d[0]-i)^m " + ie, e * d.pow(power), (d - EnvelopingElement(shift)).pow(power) * e},
      {jf + " d[0]^m = (d[0]-i)^m " + jf, f * d.pow(power), (d - EnvelopingElement(shift)).pow(power) * f},
      {ie + " h[0]^m = (h[0]-2)^m " + ie, e * h.pow(power), (h - EnvelopingElement(Scalar(2))).pow(power) * e},
      {jf + " h[0]^m = (h[0]+2)^m " + jf, f * h.pow(power), (h + EnvelopingElement(Scalar(2))).pow(power) * f},
  };
  for (const auto& id : identities) {
    for (int j = 0; j <= degree; ++j) {
      for (int k = 0; k <= degree; ++k) {
        SPoly g = SPoly::monomial(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k));
        SPoly lhs = act_word(spec, id.lhs, g);
        SPoly rhs = act_word(spec, id.rhs, g);
        ++report.checked;
        if (lhs != rhs)
          report.failures.push_back({id.name, "m=" + std::to_string(m) + " g=" + to_string(g), to_string(rhs),
                                     to_string(lhs), "difference " + to_string(lhs - rhs)});
      }
    }
  }
  return report;
}

EFCandidate roundtrip_extract(const ModuleSpec& spec) {
  EFCandidate c;
  c.e0 = act_gen(spec, Gen::e(0), SPoly(1));
  c.f0 = act_gen(spec, Gen::f(0), SPoly(1));
  c.base.lambda = spec.lambda();
  c.base.gamma = spec.gamma();
  return c;
}

namespace {

void require_constant_residual(const UniPoly& residual, const std::string& constraint, const std::string& what,
                               const UniPoly& culprit) {
  if (residual.is_zero()) return;
  throw ClassifyError(Code::NonConstantResidual, constraint,
                      constraint + ": h0-free part " + show_d0(residual) + " is nonzero, so " + what + " = " +
                          show_d0(culprit) + " is not constant in d0");
}

std::vector<Scalar> beta_roots(const Scalar& kappa) {
  auto root = (Scalar(1) + Scalar(4) * kappa).sqrt();
  if (!root) return {};
  const Scalar half(make_rat(1, 2));
  Scalar b1 = (*root - Scalar(1)) * half;
  Scalar b2 = (-*root - Scalar(1)) * half;
  if (b1 == b2) return {b1};
  return {b1, b2};
}

}  // namespace

ClassResult classify_candidate(const EFCandidate& c) {
  if (c.base.lambda.is_zero()) throw std::invalid_argument("classify_candidate: lambda must be nonzero");
  ClassResult r;
  r.lambda = c.base.lambda;
  const SPoly& E0 = c.e0;
  const SPoly& F0 = c.f0;

  const int m = E0.degree_t();
  const int n = F0.degree_t();
  if (m > 2 || n > 2)
    throw ClassifyError(Code::DegreeConstraintViolated, kDegree,
                        std::string(kDegree) + ": h0-degrees (" + std::to_string(m) + "," + std::to_string(n) +
                            ") exceed 2");
  if (E0.is_zero() || F0.is_zero())
    throw ClassifyError(Code::Equ1Violated, kEF, std::string(kEF) + " fails: E0*F0 = 0 would force h0 = 0");
  const UniPoly am = E0.coeff_t(static_cast<std::uint32_t>(m));
  const UniPoly bn = F0.coeff_t(static_cast<std::uint32_t>(n));
  if (m + n != 2)
    throw ClassifyError(Code::DegreeConstraintViolated, kDegree,
                        std::string(kDegree) + ": (m,n) = (" + std::to_string(m) + "," + std::to_string(n) + ")");
  if (am * bn != UniPoly(Scalar(make_rat(-1, 4))))
    throw ClassifyError(Code::DegreeConstraintViolated, kDegree,
                        std::string(kDegree) + ": a_m*b_n = " + show_d0(am * bn));
  r.derivation.push_back("degree: (m,n) = (" + std::to_string(m) + "," + std::to_string(n) + "), a_m*b_n = -1/4");

  const SPoly equ1 = E0 * F0.shifted(0, -2) - E0.shifted(0, 2) * F0;
  if (equ1 != h0())
    throw ClassifyError(Code::Equ1Violated, kEF,
                        std::string(kEF) + " fails: E0(d0,h0)F0(d0,h0-2)-E0(d0,h0+2)F0(d0,h0) = " + show(equ1));
  r.derivation.push_back(std::string(kEF) + ": E0(d0,h0)F0(d0,h0-2)-E0(d0,h0+2)F0(d0,h0) = h0");

  std::optional<Scalar> beta;
  if (m == 0 || m == 2) {
    // Omega (m,n) = (0,2), Delta (2,0): the constant side is alpha, the
    // quadratic side is -(1/alpha)(h0^2/4 -+ h0/2) + v(d0).
    const bool omega = m == 0;
    r.family = omega ? Family::Omega : Family::Delta;
    const SPoly& flat = omega ? E0 : F0;
    const SPoly& quad = omega ? F0 : E0;
    r.alpha = flat.coeff(0, 0);
    const UniPoly v = quad.coeff_t(0);
    r.derivation.push_back(std::string(omega ? "F0" : "E0") + " = -1/(4*alpha)*h0^2 " + (omega ? "-" : "+") +
                           " 1/(2*alpha)*h0 + v(d0), alpha = " + to_string(r.alpha));
    SPoly residual;
    if (omega) {
      const SPoly F1 = derive_f(c, 1);
      r.derivation.push_back("F1 from [h1,f0].1 = -2 f1.1: " + show(F1));
      residual = F0 * F1.shifted(0, 2) - F0.shifted(-1, 2) * F1;
      require_constant_residual(h_free(residual), kFF, "v", v);
      r.derivation.push_back(std::string(kFF) + ": h0-free part 2*lambda*v(d0)(v(d0)-v(d0-1)) vanishes, v constant");
    } else {
      const SPoly E1 = derive_e(c, 1);
      r.derivation.push_back("E1 from [h1,e0].1 = 2 e1.1: " + show(E1));
      residual = E0 * E1.shifted(0, -2) - E0.shifted(-1, -2) * E1;
      require_constant_residual(h_free(residual), kEE, "v", v);
      r.derivation.push_back(std::string(kEE) + ": h0-free part vanishes, v constant");
    }
    r.kappa = r.alpha * v.coeff(0);
    r.betas = beta_roots(r.kappa);
    r.derivation.push_back("beta^2+beta = alpha*v = " + to_string(r.kappa));
    if (!r.betas.empty()) beta = r.betas.front();
  } else {
    r.family = Family::Theta;
    r.alpha = Scalar(2) * am.coeff(0);
    const UniPoly u = E0.coeff_t(0);
    r.derivation.push_back("E0 = alpha/2*h0 + u(d0), F0 = -1/(2*alpha)*h0 + u(d0)/alpha^2, alpha = " +
                           to_string(r.alpha));
    const SPoly E1 = derive_e(c, 1);
    r.derivation.push_back("E1 from [h1,e0].1 = 2 e1.1: " + show(E1));
    const SPoly residual = E0 * E1.shifted(0, -2) - E0.shifted(-1, -2) * E1;
    require_constant_residual(h_free(residual), kEE, "u", u);
    r.derivation.push_back(std::string(kEE) + ": h0-free part 2*lambda*u(d0)(u(d0)-u(d0-1)) vanishes, u constant");
    beta = u.coeff(0) / r.alpha;
    r.betas = {*beta};
    r.kappa = *beta * (*beta + Scalar(1));
    r.derivation.push_back("beta = u/alpha = " + to_string(*beta));
  }

  if (c.base.p) {
    const SPoly lhs =
        derive_action(c, Gen::d(1), E0) - derive_action(c, Gen::e(0), derive_action(c, Gen::d(1), SPoly(1)));
    if (!lhs.is_zero())
      throw ClassifyError(Code::PNotConstant, kDE,
                          std::string(kDE) + " fails: p(h0) = " + to_string(*c.base.p, "h0") + " gives " + show(lhs));
    r.gamma = c.base.p->coeff(0);
    r.derivation.push_back(std::string(kDE) + ": p constant, gamma = " + to_string(r.gamma));
  } else {
    r.gamma = c.base.gamma;
  }

  r.spec = beta ? ModuleSpec::make(r.family, r.lambda, r.alpha, *beta, r.gamma)
                : ModuleSpec::from_kappa(r.family, r.lambda, r.alpha, r.kappa, r.gamma);
  EFCandidate back = roundtrip_extract(r.spec);
  if (back.e0 != E0 || back.f0 != F0)
    throw ClassifyError(Code::ValidationFailed, "rebuilt module",
                        "rebuilt " + to_string(r.spec) + " has E0 = " + show(back.e0) + ", F0 = " + show(back.f0));
  CheckReport axioms = check_module_axiom(r.spec, 2, 2);
  if (!axioms.passed())
    throw ClassifyError(Code::ValidationFailed, "module axiom",
                        "module axiom fails for " + to_string(r.spec) + ": " + axioms.first_failure()->check + " at " + axioms.first_failure()->inputs);
  r.derivation.push_back("validated " + to_string(r.spec) + ": module axiom, window 2, degree 2, " +
                         std::to_string(axioms.checked) + " checks");
  return r;
}

}  // namespace affvir
