#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "affvir/liealg.hpp"
#include "affvir/spoly.hpp"

namespace affvir {

enum class Family { Omega, Delta, Theta };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);

class InvalidModuleSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One of the rank-one U(C d0 + C h0)-free modules Omega, Delta, Theta on
/// C[s,t], with parameters lambda, alpha (nonzero), beta, gamma.
///
/// Omega and Delta depend on beta only through kappa = beta*(beta+1), which is
/// invariant under beta -> -beta-1. A spec may therefore be built from kappa
/// alone when beta itself is not in the coefficient field.
class ModuleSpec {
 public:
  static ModuleSpec make(Family family, Scalar lambda, Scalar alpha, Scalar beta, Scalar gamma);
  /// Omega/Delta from the invariant kappa = beta*(beta+1).
  static ModuleSpec from_kappa(Family family, Scalar lambda, Scalar alpha, Scalar kappa, Scalar gamma);
  /// Fully symbolic parameters L, A, B, G.
  static ModuleSpec symbolic(Family family);

  Family family() const { return family_; }
  const Scalar& lambda() const { return lambda_; }
  const Scalar& alpha() const { return alpha_; }
  const std::optional<Scalar>& beta() const { return beta_; }
  const Scalar& gamma() const { return gamma_; }
  /// beta*(beta+1); meaningful for every family.
  const Scalar& kappa() const { return kappa_; }

  ModuleSpec substitute(const std::map<Param, Rat>& bindings) const;

 private:
  ModuleSpec(Family f, Scalar l, Scalar a, std::optional<Scalar> b, Scalar k, Scalar g);

  Family family_;
  Scalar lambda_;
  Scalar alpha_;
  std::optional<Scalar> beta_;
  Scalar kappa_;
  Scalar gamma_;
};

/// "Omega(L,A,B,G)"; a kappa-only spec prints its beta slot as [B^2+B=...].
std::string to_string(const ModuleSpec& spec);

/// x . g = prefactor * g(s + ds, t + dt) for a single basis symbol.
struct ActionFormula {
  SPoly prefactor;
  int ds = 0;
  int dt = 0;
};

ActionFormula action_formula(const ModuleSpec& spec, const Gen& x);
SPoly apply_formula(const ActionFormula& f, const SPoly& g);

SPoly act_gen(const ModuleSpec& spec, const Gen& x, const SPoly& g);
SPoly act_elem(const ModuleSpec& spec, const AlgebraElement& x, const SPoly& g);
/// Right-to-left composition; shared word suffixes are evaluated once.
SPoly act_word(const ModuleSpec& spec, const EnvelopingElement& u, const SPoly& g);

/// x(y g) - y(x g) = [x,y] g for all basis pairs with |index| <= window and
/// all monomials s^j t^k with j, k <= degree.
CheckReport check_module_axiom(const ModuleSpec& spec, int window, int degree);

}  // namespace affvir
