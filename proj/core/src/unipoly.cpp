#include "affvir/unipoly.hpp"

namespace affvir {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::x() { return UniPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

UniPoly UniPoly::linear(const Scalar& a, const Scalar& b) { return UniPoly(std::vector<Scalar>{b, a}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar();
  return c_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
  if (s.is_zero()) return {};
  UniPoly out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

UniPoly UniPoly::shifted(const Rat& shift) const {
  // Horner in the shifted variable: p(x+c) = (...(a_n (x+c) + a_{n-1})(x+c) ...)
  UniPoly out;
  UniPoly step = UniPoly::linear(Scalar(1), Scalar(shift));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * step + UniPoly(*it);
  return out;
}

Scalar UniPoly::evaluate(const Scalar& at) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1));
  Scalar inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Scalar& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Scalar q = top * inv;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k - db + i)] -= q * b.coeffs()[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(k - db)] = q;
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  UniPoly a = p.monic(), b = q.monic();
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Bezout ext_euclid(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) {
    const UniPoly& other = p.is_zero() ? q : p;
    if (other.degree() != 0) throw NotCoprime("ext_euclid: operands are not coprime");
    Scalar inv = other.leading().inverse();
    return p.is_zero() ? Bezout{UniPoly(), UniPoly(inv)} : Bezout{UniPoly(inv), UniPoly()};
  }
  // Invariant: r_k = s_k p + t_k q.
  UniPoly r0 = p, r1 = q;
  UniPoly s0(Scalar(1)), s1;
  UniPoly t0, t1(Scalar(1));
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    UniPoly s2 = s0 - qr.quotient * s1;
    UniPoly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw NotCoprime("ext_euclid: operands are not coprime");
  Scalar inv = r0.leading().inverse();
  return {s0.scaled(inv), t0.scaled(inv)};
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    std::string body;
    if (k == 1) body = var;
    if (k > 1) body = var + "^" + std::to_string(k);
    append_term(out, p.coeffs()[static_cast<std::size_t>(k)], body);
  }
  return out;
}

}  // namespace affvir
