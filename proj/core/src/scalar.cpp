#include "affvir/scalar.hpp"

namespace affvir {

Scalar Scalar::fraction(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw DivisionByZero("division by the zero scalar");
  Scalar out(std::move(num), std::move(den), true);
  out.normalize();
  return out;
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(1 / den_.leading().coef);
    den_ = ParamPoly(1);
    return;
  }
  ParamPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  Rat c = make_primitive(den_);
  if (c != 1) num_ = num_.scaled(1 / c);
}

std::optional<Rat> Scalar::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return num_.constant_value();
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = ParamPoly(1);
    return *this;
  }
  // With g = gcd(b, d): a/b + c/d = (a d' + c b') / (b d') where b = g b',
  // d = g d', and only factors of g can cancel.
  ParamPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  } else {
    ParamPoly a = *den_.divide_exact(g);
    ParamPoly b = *o.den_.divide_exact(g);
    num_ = num_ * b + o.num_ * a;
    if (num_.is_zero()) return *this = Scalar();
    ParamPoly cancel = gcd(num_, g);
    if (!cancel.is_one()) {
      num_ = *num_.divide_exact(cancel);
      g = *g.divide_exact(cancel);
    }
    den_ = a * b * g;
  }
  if (num_.is_zero()) return *this = Scalar();
  Rat c = make_primitive(den_);
  if (c != 1) num_ = num_.scaled(1 / c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  ParamPoly g1 = gcd(num_, o.den_);
  ParamPoly g2 = gcd(o.num_, den_);
  ParamPoly n1 = g1.is_one() ? num_ : *num_.divide_exact(g1);
  ParamPoly d2 = g1.is_one() ? o.den_ : *o.den_.divide_exact(g1);
  ParamPoly n2 = g2.is_one() ? o.num_ : *o.num_.divide_exact(g2);
  ParamPoly d1 = g2.is_one() ? den_ : *den_.divide_exact(g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  Rat c = make_primitive(den_);
  if (c != 1) num_ = num_.scaled(1 / c);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::scaled(const Rat& c) const {
  if (sgn(c) == 0) return Scalar();
  return Scalar(num_.scaled(c), den_, true);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by the zero scalar");
  Scalar out(den_, num_, true);
  Rat c = make_primitive(out.den_);
  if (c != 1) out.num_ = out.num_.scaled(1 / c);
  return out;
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Scalar Scalar::substitute(Param p, const Rat& value) const {
  if (!depends_on(p)) return *this;
  return fraction(num_.substitute(p, value), den_.substitute(p, value));
}

Scalar Scalar::substitute(const std::map<Param, Rat>& bindings) const {
  ParamPoly n = num_, d = den_;
  for (const auto& [p, v] : bindings) {
    n = n.substitute(p, v);
    d = d.substitute(p, v);
  }
  return fraction(std::move(n), std::move(d));
}

std::optional<Scalar> Scalar::sqrt() const {
  // Canonical form makes num and den individually squares whenever the
  // quotient is: den is primitive with positive leading coefficient.
  auto n = num_.sqrt();
  if (!n) return std::nullopt;
  auto d = den_.sqrt();
  if (!d) return std::nullopt;
  return fraction(std::move(*n), std::move(*d));
}

namespace {

bool needs_parens(const ParamPoly& p) { return p.size() > 1; }

std::string denominator_string(const ParamPoly& d) {
  std::string body = to_string(d);
  const auto& lt = d.leading();
  bool single_factor = d.size() == 1 && lt.coef == 1 && body.find('*') == std::string::npos;
  return single_factor ? body : "(" + body + ")";
}

}  // namespace

std::string to_string(const Scalar& s) {
  if (s.denominator().is_one()) return to_string(s.numerator());
  std::string num = to_string(s.numerator());
  if (needs_parens(s.numerator())) num = "(" + num + ")";
  return num + "/" + denominator_string(s.denominator());
}

void append_term(std::string& out, const Scalar& coef, const std::string& body) {
  if (coef.is_zero()) return;
  bool neg = coef.is_negative_leading();
  Scalar mag = neg ? -coef : coef;
  if (neg)
    out += '-';
  else if (!out.empty())
    out += '+';
  if (body.empty()) {
    std::string c = to_string(mag);
    if (neg && needs_parens(mag.numerator()) && mag.denominator().is_one()) c = "(" + c + ")";
    out += c;
    return;
  }
  if (mag.is_one()) {
    out += body;
    return;
  }
  std::string c = to_string(mag);
  if (needs_parens(mag.numerator()) && mag.denominator().is_one()) c = "(" + c + ")";
  out += c + "*" + body;
}

}  // namespace affvir
