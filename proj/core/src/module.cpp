#include "affvir/module.hpp"

#include <unordered_map>
#include <vector>

namespace affvir {

std::string to_string(Family f) {
  switch (f) {
    case Family::Omega: return "Omega";
    case Family::Delta: return "Delta";
    case Family::Theta: return "Theta";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "Omega" || name == "omega") return Family::Omega;
  if (name == "Delta" || name == "delta") return Family::Delta;
  if (name == "Theta" || name == "theta") return Family::Theta;
  return std::nullopt;
}

ModuleSpec::ModuleSpec(Family f, Scalar l, Scalar a, std::optional<Scalar> b, Scalar k, Scalar g)
    : family_(f), lambda_(std::move(l)), alpha_(std::move(a)), beta_(std::move(b)), kappa_(std::move(k)),
      gamma_(std::move(g)) {
  if (lambda_.is_zero()) throw InvalidModuleSpec("lambda must be nonzero");
  if (alpha_.is_zero()) throw InvalidModuleSpec("alpha must be nonzero");
}

ModuleSpec ModuleSpec::make(Family family, Scalar lambda, Scalar alpha, Scalar beta, Scalar gamma) {
  Scalar kappa = beta * (beta + Scalar(1));
  return ModuleSpec(family, std::move(lambda), std::move(alpha), std::move(beta), std::move(kappa),
                    std::move(gamma));
}

ModuleSpec ModuleSpec::from_kappa(Family family, Scalar lambda, Scalar alpha, Scalar kappa, Scalar gamma) {
  if (family == Family::Theta) throw InvalidModuleSpec("Theta needs beta itself, not beta*(beta+1)");
  return ModuleSpec(family, std::move(lambda), std::move(alpha), std::nullopt, std::move(kappa),
                    std::move(gamma));
}

ModuleSpec ModuleSpec::symbolic(Family family) {
  return make(family, Scalar::param(Param::Lambda), Scalar::param(Param::Alpha), Scalar::param(Param::Beta),
              Scalar::param(Param::Gamma));
}

ModuleSpec ModuleSpec::substitute(const std::map<Param, Rat>& bindings) const {
  std::optional<Scalar> b;
  if (beta_) b = beta_->substitute(bindings);
  return ModuleSpec(family_, lambda_.substitute(bindings), alpha_.substitute(bindings), std::move(b),
                    kappa_.substitute(bindings), gamma_.substitute(bindings));
}

std::string to_string(const ModuleSpec& spec) {
  std::string beta = spec.beta() ? to_string(*spec.beta()) : "[B^2+B=" + to_string(spec.kappa()) + "]";
  return to_string(spec.family()) + "(" + to_string(spec.lambda()) + "," + to_string(spec.alpha()) + "," + beta +
         "," + to_string(spec.gamma()) + ")";
}

// ---------------------------------------------------------------------------
// Actions

namespace {

// a*t + b
SPoly linear_t(const Scalar& a, const Scalar& b) { return SPoly::monomial(0, 1, a) + SPoly(b); }

}  // namespace

ActionFormula action_formula(const ModuleSpec& spec, const Gen& x) {
  const int i = x.index;
  if (x.kind == GenKind::C) return {SPoly(), 0, 0};
  const Scalar li = spec.lambda().pow(i);
  const Scalar& a = spec.alpha();
  const Scalar half(make_rat(1, 2));
  const Scalar quarter(make_rat(1, 4));
  switch (x.kind) {
    case GenKind::H:
      return {SPoly::monomial(0, 1, li), -i, 0};
    case GenKind::D:
      return {SPoly::monomial(1, 0, li) + SPoly(li * Scalar(static_cast<long>(i)) * spec.gamma()), -i, 0};
    case GenKind::E:
      switch (spec.family()) {
        case Family::Omega:
          return {SPoly(li * a), -i, -2};
        case Family::Delta: {
          // -(l^i/a)(t/2+b)(t/2-b-1) = -(l^i/a)(t^2/4 - t/2 - kappa)
          Scalar c = -li / a;
          SPoly quad = SPoly::monomial(0, 2, quarter) - SPoly::monomial(0, 1, half) - SPoly(spec.kappa());
          return {quad.scaled(c), -i, -2};
        }
        case Family::Theta:
          return {linear_t(half, *spec.beta()).scaled(li * a), -i, -2};
      }
      break;
    case GenKind::F:
      switch (spec.family()) {
        case Family::Omega: {
          // -(l^i/a)(t/2-b)(t/2+b+1) = -(l^i/a)(t^2/4 + t/2 - kappa)
          Scalar c = -li / a;
          SPoly quad = SPoly::monomial(0, 2, quarter) + SPoly::monomial(0, 1, half) - SPoly(spec.kappa());
          return {quad.scaled(c), -i, 2};
        }
        case Family::Delta:
          return {SPoly(li * a), -i, 2};
        case Family::Theta:
          return {linear_t(half, -*spec.beta()).scaled(-li / a), -i, 2};
      }
      break;
    case GenKind::C:
      break;
  }
  return {SPoly(), 0, 0};
}

SPoly apply_formula(const ActionFormula& f, const SPoly& g) {
  if (f.prefactor.is_zero() || g.is_zero()) return {};
  return f.prefactor * g.shifted(Rat(f.ds), Rat(f.dt));
}

SPoly act_gen(const ModuleSpec& spec, const Gen& x, const SPoly& g) {
  return apply_formula(action_formula(spec, x), g);
}

SPoly act_elem(const ModuleSpec& spec, const AlgebraElement& x, const SPoly& g) {
  SPoly out;
  for (const auto& [gen, c] : x.terms()) out += act_gen(spec, gen, g).scaled(c);
  return out;
}

SPoly act_word(const ModuleSpec& spec, const EnvelopingElement& u, const SPoly& g) {
  // Value of every evaluated word suffix applied to g.
  std::map<Word, SPoly> suffix_value;
  std::map<Gen, ActionFormula> formulas;
  auto formula = [&](const Gen& x) -> const ActionFormula& {
    auto it = formulas.find(x);
    if (it == formulas.end()) it = formulas.emplace(x, action_formula(spec, x)).first;
    return it->second;
  };
  SPoly out;
  for (const auto& [w, c] : u.terms()) {
    // Longest already-evaluated suffix.
    std::size_t start = w.size();
    const SPoly* base = &g;
    for (std::size_t k = 0; k < w.size(); ++k) {
      auto it = suffix_value.find(Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
      if (it != suffix_value.end()) {
        start = k;
        base = &it->second;
        break;
      }
    }
    SPoly cur = *base;
    for (std::size_t k = start; k-- > 0;) {
      cur = apply_formula(formula(w[k]), cur);
      suffix_value.emplace(Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()), cur);
    }
    out += cur.scaled(c);
  }
  return out;
}

CheckReport check_module_axiom(const ModuleSpec& spec, int window, int degree) {
  CheckReport report;
  const auto basis = basis_window(window);
  std::vector<ActionFormula> formulas;
  formulas.reserve(basis.size());
  for (const auto& x : basis) formulas.push_back(action_formula(spec, x));

  std::vector<SPoly> monomials;
  for (int j = 0; j <= degree; ++j)
    for (int k = 0; k <= degree; ++k)
      monomials.push_back(SPoly::monomial(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)));

  const std::size_t n = basis.size();
  for (const auto& g : monomials) {
    std::vector<SPoly> single(n);
    for (std::size_t a = 0; a < n; ++a) single[a] = apply_formula(formulas[a], g);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        SPoly xy = apply_formula(formulas[a], single[b]);
        SPoly yx = a == b ? xy : apply_formula(formulas[b], single[a]);
        SPoly commutator = xy - yx;
        for (int pass = 0; pass < (a == b ? 1 : 2); ++pass) {
          const Gen& x = pass == 0 ? basis[a] : basis[b];
          const Gen& y = pass == 0 ? basis[b] : basis[a];
          SPoly lhs = pass == 0 ? commutator : -commutator;
          SPoly rhs = act_elem(spec, bracket(x, y), g);
          ++report.checked;
          if (lhs != rhs) {
            report.failures.push_back({"module_axiom",
                                       "x=" + to_string(x) + " y=" + to_string(y) + " g=" + to_string(g),
                                       to_string(rhs), to_string(lhs), "difference " + to_string(lhs - rhs)});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace affvir
