#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affvir/module.hpp"

namespace affvir {

/// Polynomials in d0, h0 reuse SPoly with s = d0 and t = h0.
inline const SVarNames kCartanNames{"d0", "h0"};

/// The h-free part of the data: d_i . g = lambda^i (d0 + p_i(h0)) g(d0-i, h0),
/// h_i . g = lambda^i h0 g(d0-i, h0), C . g = 0, with p_i = i * gamma.
///
/// When `p` is set (strict mode) it is the polynomial P with p_i = i*P(h0);
/// the classifier then checks that P is constant instead of assuming it.
struct HFreeData {
  Scalar lambda{1};
  Scalar gamma{0};
  std::optional<UniPoly> p;

  /// p_i(h0) as a polynomial in h0.
  UniPoly p_at(long i) const;
};

/// Candidate module data E0 = e_0 . 1 and F0 = f_0 . 1.
struct EFCandidate {
  SPoly e0;
  SPoly f0;
  HFreeData base;
};

class ClassifyError : public std::runtime_error {
 public:
  enum class Code {
    Equ1Violated,
    DegreeConstraintViolated,
    NonConstantResidual,
    ValidationFailed,
    PNotConstant,
    UnsupportedGenerator,
  };
  ClassifyError(Code code, std::string constraint, const std::string& what)
      : std::runtime_error(what), code_(code), constraint_(std::move(constraint)) {}
  Code code() const { return code_; }
  /// The violated relation, e.g. "[e0,f0].1 = h0".
  const std::string& constraint() const { return constraint_; }

 private:
  Code code_;
  std::string constraint_;
};

std::string to_string(ClassifyError::Code code);

struct ClassResult {
  Family family = Family::Omega;
  Scalar lambda;
  Scalar alpha;
  /// Theta: one value. Omega/Delta: both roots of beta^2 + beta = kappa when
  /// they lie in the coefficient field, otherwise empty.
  std::vector<Scalar> betas;
  Scalar kappa;
  Scalar gamma;
  std::vector<std::string> derivation;
  ModuleSpec spec = ModuleSpec::symbolic(Family::Omega);
};

enum class ActionPolicy {
  /// e_i, f_i for i != 0 are derived from [h_i, e_0] = 2 e_i and
  /// [h_i, f_0] = -2 f_i.
  Derived,
  /// Only e_0, f_0 and the h-free generators are accepted.
  DirectOnly,
};

/// x . g on the candidate module. Throws ClassifyError(UnsupportedGenerator)
/// for e_i, f_i with i != 0 under DirectOnly.
SPoly derive_action(const EFCandidate& c, const Gen& x, const SPoly& g, ActionPolicy policy = ActionPolicy::Derived);

/// E_i = e_i . 1 and F_i = f_i . 1 through the brackets with h_i.
SPoly derive_e(const EFCandidate& c, long i);
SPoly derive_f(const EFCandidate& c, long i);

/// Checks, as operators on the module and on monomials s^j t^k with
/// j, k <= degree:
///   e_i d0^m = (d0-i)^m e_i,  f_i d0^m = (d0-i)^m f_i,
///   e_i h0^m = (h0-2)^m e_i,  f_i h0^m = (h0+2)^m f_i.
CheckReport lemma_identity_check(const ModuleSpec& spec, long i, int m, int degree = 3);

/// Decides which family the candidate generates, or throws ClassifyError
/// naming the violated constraint.
ClassResult classify_candidate(const EFCandidate& c);

/// E0 = e_0 . 1, F0 = f_0 . 1 read off a module.
EFCandidate roundtrip_extract(const ModuleSpec& spec);

}  // namespace affvir
