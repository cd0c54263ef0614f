#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "affvir/report.hpp"
#include "affvir/scalar.hpp"

namespace affvir {

enum class GenKind : std::uint8_t { E, F, H, D, C };

/// Basis symbol e_i, f_i, h_i, d_i or the central C (whose index is always 0).
struct Gen {
  GenKind kind = GenKind::C;
  int index = 0;

  static Gen e(int i) { return {GenKind::E, i}; }
  static Gen f(int i) { return {GenKind::F, i}; }
  static Gen h(int i) { return {GenKind::H, i}; }
  static Gen d(int i) { return {GenKind::D, i}; }
  static Gen c() { return {GenKind::C, 0}; }

  friend auto operator<=>(const Gen&, const Gen&) = default;
};

std::string to_string(const Gen& g);

/// All basis symbols with |index| <= window, plus C.
std::vector<Gen> basis_window(int window);

/// Finite Scalar-linear combination of basis symbols.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const Gen& g, const Scalar& coef = Scalar(1));  // NOLINT(google-explicit-constructor)

  const std::map<Gen, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Gen& g) const;

  AlgebraElement& add(const Gen& g, const Scalar& coef);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& x);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<Gen, Scalar> terms_;
};

std::string to_string(const AlgebraElement& x);

/// Central term of [h_i, h_j].
///
/// InvariantForm takes it from the loop-algebra cocycle i*(h,h)*delta_{i+j,0}*C
/// with (e,f) = 1, hence (h,h) = 2: [h_i,h_j] = 2i delta C. PrintedTable uses
/// -2i delta C as commonly tabulated; that sign breaks the Jacobi identity on
/// triples (e_i, f_j, h_k) with i+j+k = 0 and is kept only for auditing.
/// Every module in this library has C acting as 0, so actions do not depend
/// on the choice.
enum class CentralConvention { InvariantForm, PrintedTable };

/// The structure constants of the affine-Virasoro algebra of type A1.
AlgebraElement bracket(const Gen& x, const Gen& y,
                       CentralConvention conv = CentralConvention::InvariantForm);
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y,
                       CentralConvention conv = CentralConvention::InvariantForm);

/// [x,y] + [y,x] = 0 over all basis pairs in the window.
CheckReport check_antisymmetry(int window, CentralConvention conv = CentralConvention::InvariantForm);
/// [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over all basis triples in the window.
CheckReport check_jacobi(int window, CentralConvention conv = CentralConvention::InvariantForm);

using Word = std::vector<Gen>;

/// Scalar-linear combination of free words in the basis symbols. Words are not
/// reordered; the word [x1, ..., xn] acts on a module as x1(x2(...(xn g))).
/// The empty word is the unit.
class EnvelopingElement {
 public:
  EnvelopingElement() = default;
  EnvelopingElement(const Scalar& s);  // NOLINT(google-explicit-constructor)
  EnvelopingElement(const Gen& g);     // NOLINT(google-explicit-constructor)
  EnvelopingElement(const AlgebraElement& x);  // NOLINT(google-explicit-constructor)
  static EnvelopingElement unit() { return EnvelopingElement(Scalar(1)); }
  static EnvelopingElement word(Word w, const Scalar& coef = Scalar(1));

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  EnvelopingElement& add(const Word& w, const Scalar& coef);
  EnvelopingElement& operator+=(const EnvelopingElement& o);
  EnvelopingElement& operator-=(const EnvelopingElement& o);
  friend EnvelopingElement operator+(EnvelopingElement a, const EnvelopingElement& b) { return a += b; }
  friend EnvelopingElement operator-(EnvelopingElement a, const EnvelopingElement& b) { return a -= b; }
  friend EnvelopingElement operator*(const Scalar& s, const EnvelopingElement& u);
  /// Concatenation product (word_mul).
  friend EnvelopingElement operator*(const EnvelopingElement& u, const EnvelopingElement& v);
  EnvelopingElement pow(unsigned n) const;

  /// The element as a linear combination of single generators, if it is one.
  std::optional<AlgebraElement> as_algebra_element() const;

  friend bool operator==(const EnvelopingElement&, const EnvelopingElement&) = default;

 private:
  std::map<Word, Scalar> terms_;
};

EnvelopingElement word_mul(const EnvelopingElement& u, const EnvelopingElement& v);

std::string to_string(const Word& w);
std::string to_string(const EnvelopingElement& u);

}  // namespace affvir
