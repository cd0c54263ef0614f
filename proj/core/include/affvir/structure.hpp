#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "affvir/module.hpp"

namespace affvir {

class StructureError : public std::runtime_error {
 public:
  enum class Code { ZeroVector, NotSimple, SearchExhausted, ParameterNotHalfInteger, InvalidWitness };
  StructureError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

std::string to_string(StructureError::Code code);

/// Shapes of h-submodules of C[s,t]: Principal is C[s,t] g(t); TwoGen is
/// C[s,t] s g(t) + C[s,t] t g(t).
struct SubmoduleShape {
  enum class Kind { Principal, TwoGen };
  Kind kind = Kind::Principal;
  UniPoly g;
};

/// 2*beta when beta is a rational with 2*beta a nonnegative integer.
std::optional<long> twice_beta_in_nonneg_integers(const ModuleSpec& spec);

/// Omega and Delta are always simple; Theta is simple unless 2*beta is a
/// nonnegative integer. A symbolic beta is treated as transcendental.
bool is_simple(const ModuleSpec& spec);

/// prod_{n=0}^{2 beta} (t/2 + beta - n) for rational beta with 2 beta in Z+.
UniPoly theta_submodule_generator(const Rat& beta);

/// The proper submodule C[s,t] * prod(t/2+beta-n) of a non-simple Theta, or
/// nullopt for simple modules.
std::optional<SubmoduleShape> proper_submodule(const ModuleSpec& spec);

bool in_shape(const SubmoduleShape& shape, const SPoly& p);

/// x . v lies in the shape for every basis x with |index| <= window and every
/// shape vector v = s^j t^k m g(t), j, k <= degree, m in {1} or {s, t}.
/// Failures are NotInvariant witnesses.
CheckReport check_invariance(const ModuleSpec& spec, const SubmoduleShape& shape, int window, int degree);

/// tau(g) = g * prod_{n=0}^{2 beta}(t/2+beta-n) intertwines
/// Theta(lambda, alpha, -beta-1, gamma) with the submodule of
/// Theta(lambda, alpha, beta, gamma). Throws ParameterNotHalfInteger unless
/// 2*beta is a nonnegative integer.
CheckReport tau_check(const Scalar& lambda, const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                      int degree, int window = 2);

/// An enveloping element u with u . target = 1, checked on construction.
class GenWitness {
 public:
  GenWitness(const ModuleSpec& spec, EnvelopingElement u, SPoly target, int shift = 0);

  const EnvelopingElement& u() const { return u_; }
  const SPoly& target() const { return target_; }
  /// The k at which the shifted seeds became coprime (0 if none was needed).
  int shift() const { return shift_; }

 private:
  EnvelopingElement u_;
  SPoly target_;
  int shift_;
};

/// Builds u with u . w = 1 for a nonzero w in a simple module: strip the
/// s-dependence with (lambda x_0 - x_1), shift the t-only seed with x_0^k
/// (and y_0^k for Theta) until two available vectors are coprime, then close
/// with Bezout cofactors in h_0.
GenWitness generate_one(const ModuleSpec& spec, const SPoly& w);

struct IsoResult {
  bool isomorphic = false;
  std::string reason;
  /// Set when the answer rests on an invariant that compares different families.
  bool cross_family = false;
};

IsoResult iso_check(const ModuleSpec& a, const ModuleSpec& b);

}  // namespace affvir
