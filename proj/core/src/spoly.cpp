#include "affvir/spoly.hpp"

#include <algorithm>
#include <vector>

namespace affvir {

SPoly::SPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(SExp{0, 0}, c);
}

SPoly SPoly::monomial(std::uint32_t s_deg, std::uint32_t t_deg, const Scalar& c) {
  SPoly out;
  if (!c.is_zero()) out.terms_.emplace(SExp{s_deg, t_deg}, c);
  return out;
}

SPoly SPoly::from_t(const UniPoly& p) {
  SPoly out;
  for (int k = 0; k <= p.degree(); ++k) out.add({0, static_cast<std::uint32_t>(k)}, p.coeffs()[k]);
  return out;
}

SPoly SPoly::from_s(const UniPoly& p) {
  SPoly out;
  for (int k = 0; k <= p.degree(); ++k) out.add({static_cast<std::uint32_t>(k), 0}, p.coeffs()[k]);
  return out;
}

Scalar SPoly::coeff(std::uint32_t s_deg, std::uint32_t t_deg) const {
  auto it = terms_.find({s_deg, t_deg});
  return it == terms_.end() ? Scalar() : it->second;
}

int SPoly::degree_s() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.s));
  return d;
}

int SPoly::degree_t() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.t));
  return d;
}

SPoly& SPoly::add(const SExp& e, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

SPoly SPoly::operator-() const {
  SPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SPoly& SPoly::operator+=(const SPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  SPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add({ea.s + eb.s, ea.t + eb.t}, ca * cb);
  return out;
}

SPoly SPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  SPoly out = *this;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

SPoly SPoly::pow(unsigned n) const {
  SPoly out(1);
  for (unsigned k = 0; k < n; ++k) out = out * *this;
  return out;
}

namespace {

// Row n of (x + shift)^n expanded: entry p is C(n, p) * shift^(n - p).
std::vector<Rat> shifted_powers(unsigned n, const Rat& shift) {
  std::vector<Rat> row(n + 1);
  std::vector<Rat> powers(n + 1);
  powers[0] = 1;
  for (unsigned k = 1; k <= n; ++k) powers[k] = powers[k - 1] * shift;
  for (unsigned p = 0; p <= n; ++p) row[p] = Rat(binomial(n, p)) * powers[n - p];
  return row;
}

}  // namespace

SPoly SPoly::shifted(const Rat& ds, const Rat& dt) const {
  if (sgn(ds) == 0 && sgn(dt) == 0) return *this;
  const int max_s = std::max(degree_s(), 0);
  const int max_t = std::max(degree_t(), 0);
  std::vector<std::vector<Rat>> srows, trows;
  for (int n = 0; n <= max_s; ++n) srows.push_back(shifted_powers(static_cast<unsigned>(n), ds));
  for (int n = 0; n <= max_t; ++n) trows.push_back(shifted_powers(static_cast<unsigned>(n), dt));
  SPoly out;
  for (const auto& [e, c] : terms_) {
    const auto& sr = srows[e.s];
    const auto& tr = trows[e.t];
    for (std::uint32_t p = 0; p <= e.s; ++p) {
      if (sgn(sr[p]) == 0) continue;
      for (std::uint32_t q = 0; q <= e.t; ++q) {
        if (sgn(tr[q]) == 0) continue;
        out.add({p, q}, c.scaled(sr[p] * tr[q]));
      }
    }
  }
  return out;
}

UniPoly SPoly::coeff_s(std::uint32_t j) const {
  std::vector<Scalar> c;
  for (const auto& [e, v] : terms_) {
    if (e.s != j) continue;
    if (c.size() <= e.t) c.resize(e.t + 1);
    c[e.t] = v;
  }
  return UniPoly(std::move(c));
}

UniPoly SPoly::coeff_t(std::uint32_t k) const {
  std::vector<Scalar> c;
  for (const auto& [e, v] : terms_) {
    if (e.t != k) continue;
    if (c.size() <= e.s) c.resize(e.s + 1);
    c[e.s] = v;
  }
  return UniPoly(std::move(c));
}

std::optional<UniPoly> SPoly::as_t_only() const {
  if (degree_s() > 0) return std::nullopt;
  return coeff_s(0);
}

SPoly SPoly::substitute(const std::map<Param, Rat>& bindings) const {
  SPoly out;
  for (const auto& [e, c] : terms_) out.add(e, c.substitute(bindings));
  return out;
}

namespace {

std::string monomial_body(const SExp& e, const SVarNames& names) {
  std::string body;
  auto factor = [&](const std::string& v, std::uint32_t d) {
    if (d == 0) return;
    if (!body.empty()) body += '*';
    body += v;
    if (d > 1) body += "^" + std::to_string(d);
  };
  factor(names.s, e.s);
  factor(names.t, e.t);
  return body;
}

}  // namespace

std::string to_string(const SPoly& p, const SVarNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) append_term(out, c, monomial_body(e, names));
  return out;
}

std::string to_string_content_form(const SPoly& p, const SVarNames& names) {
  if (p.is_zero()) return "0";
  Int g = 0, l = 1;
  for (const auto& [e, c] : p.terms()) {
    auto r = c.as_rational();
    if (!r) return to_string(p, names);
    g = gcd(g, Int(r->get_num()));
    l = lcm(l, Int(r->get_den()));
  }
  Rat content = make_rat(Int(abs(g)), l);
  if (sgn(p.terms().begin()->second.numerator().leading().coef) < 0) content = -content;
  if (content == 1) return to_string(p, names);
  SPoly prim = p.scaled(Scalar(1 / content));
  std::string out = "(" + to_string(prim, names) + ")";
  const Int& num = content.get_num();
  const Int& den = content.get_den();
  if (num == -1) out = "-" + out;
  else if (num != 1) out = num.get_str() + "*" + out;
  if (den != 1) out += "/" + den.get_str();
  return out;
}

}  // namespace affvir
