#include "affvir/param_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace affvir {

namespace {
constexpr std::array<char, kNumParams> kSymbols{'L', 'A', 'B', 'G'};
constexpr std::array<Param, kNumParams> kAllParams{Param::Lambda, Param::Alpha, Param::Beta,
                                                   Param::Gamma};
}  // namespace

char param_symbol(Param p) { return kSymbols[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_symbol(char c) {
  for (std::size_t i = 0; i < kSymbols.size(); ++i)
    if (kSymbols[i] == c) return static_cast<Param>(i);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_exponents(const std::array<unsigned, kNumParams>& e) {
  std::uint64_t bits = 0;
  unsigned total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > kMaxExponent) throw std::overflow_error("parameter exponent too large");
    bits |= static_cast<std::uint64_t>(e[i]) << shift(static_cast<Param>(i));
    total += e[i];
  }
  return Monomial(bits | (static_cast<std::uint64_t>(total) << 48));
}

Monomial Monomial::variable(Param p, unsigned power) {
  std::array<unsigned, kNumParams> e{};
  e[static_cast<std::size_t>(p)] = power;
  return from_exponents(e);
}

std::array<unsigned, kNumParams> Monomial::exponents() const {
  std::array<unsigned, kNumParams> e{};
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(static_cast<Param>(i));
  return e;
}

bool Monomial::divides(Monomial other) const {
  for (Param p : kAllParams)
    if (exponent(p) > other.exponent(p)) return false;
  return true;
}

Monomial Monomial::min(Monomial a, Monomial b) {
  std::array<unsigned, kNumParams> e{};
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto p = static_cast<Param>(i);
    e[i] = std::min(a.exponent(p), b.exponent(p));
  }
  return from_exponents(e);
}

Monomial operator*(Monomial a, Monomial b) {
  for (Param p : kAllParams)
    if (a.exponent(p) + b.exponent(p) > Monomial::kMaxExponent)
      throw std::overflow_error("parameter exponent too large");
  return Monomial(a.bits_ + b.bits_);
}

// ---------------------------------------------------------------------------
// ParamPoly

ParamPoly::ParamPoly(const Rat& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

ParamPoly ParamPoly::variable(Param p) { return term(Rat(1), Monomial::variable(p)); }

ParamPoly ParamPoly::term(const Rat& c, Monomial m) {
  ParamPoly out;
  if (sgn(c) != 0) out.terms_.push_back({m, c});
  return out;
}

ParamPoly ParamPoly::from_terms(std::vector<ParamTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const ParamTerm& a, const ParamTerm& b) { return a.mono > b.mono; });
  ParamPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coef += t.coef;
      if (sgn(out.terms_.back().coef) == 0) out.terms_.pop_back();
    } else if (sgn(t.coef) != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool ParamPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

std::optional<Rat> ParamPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coef;
  return std::nullopt;
}

unsigned ParamPoly::degree(Param p) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(p));
  return d;
}

unsigned ParamPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.total_degree();
}

unsigned ParamPoly::min_total_degree() const {
  unsigned d = total_degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.total_degree());
  return d;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

namespace {
template <bool Subtract>
std::vector<ParamTerm> merge_terms(const std::vector<ParamTerm>& a, const std::vector<ParamTerm>& b) {
  std::vector<ParamTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(b[j++]);
      if constexpr (Subtract) out.back().coef = -out.back().coef;
    } else {
      Rat c = Subtract ? Rat(a[i].coef - b[j].coef) : Rat(a[i].coef + b[j].coef);
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms<false>(terms_, o.terms_);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, o.terms_);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].coef, a.terms_[0].mono);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].coef, b.terms_[0].mono);
  std::vector<ParamTerm> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coef * y.coef});
  return ParamPoly::from_terms(std::move(prod));
}

ParamPoly ParamPoly::scaled(const Rat& c) const {
  if (sgn(c) == 0) return {};
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.coef *= c;
  return out;
}

ParamPoly ParamPoly::times_monomial(const Rat& c, Monomial m) const {
  if (sgn(c) == 0) return {};
  ParamPoly out = *this;
  for (auto& t : out.terms_) {
    t.mono = t.mono * m;
    t.coef *= c;
  }
  return out;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return ParamPoly{};
  const ParamTerm& ld = d.leading();
  if (d.terms_.size() == 1) {
    ParamPoly out = *this;
    Rat inv = 1 / ld.coef;
    for (auto& t : out.terms_) {
      if (!ld.mono.divides(t.mono)) return std::nullopt;
      t.mono = ld.mono.quotient_of(t.mono);
      t.coef *= inv;
    }
    return out;
  }
  ParamPoly rem = *this;
  std::vector<ParamTerm> quot;
  while (!rem.is_zero()) {
    const ParamTerm& lr = rem.leading();
    if (!ld.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = ld.mono.quotient_of(lr.mono);
    Rat c = lr.coef / ld.coef;
    rem -= d.times_monomial(c, m);
    quot.push_back({m, std::move(c)});
  }
  return ParamPoly::from_terms(std::move(quot));
}

Rat ParamPoly::content() const {
  if (terms_.empty()) return Rat(1);
  Int g = 0, l = 1;
  for (const auto& t : terms_) {
    g = gcd(g, Int(t.coef.get_num()));
    l = lcm(l, Int(t.coef.get_den()));
  }
  return make_rat(abs(g), l);
}

ParamPoly ParamPoly::substitute(Param p, const Rat& value) const {
  std::vector<ParamTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(p);
    if (e == 0) {
      out.push_back(t);
      continue;
    }
    auto exps = t.mono.exponents();
    exps[static_cast<std::size_t>(p)] = 0;
    out.push_back({Monomial::from_exponents(exps), t.coef * rat_pow(value, e)});
  }
  return from_terms(std::move(out));
}

std::vector<ParamPoly> ParamPoly::coefficients_in(Param p) const {
  std::vector<std::vector<ParamTerm>> buckets(degree(p) + 1);
  for (const auto& t : terms_) {
    auto exps = t.mono.exponents();
    unsigned e = exps[static_cast<std::size_t>(p)];
    exps[static_cast<std::size_t>(p)] = 0;
    buckets[e].push_back({Monomial::from_exponents(exps), t.coef});
  }
  std::vector<ParamPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

ParamPoly ParamPoly::from_coefficients(Param p, const std::vector<ParamPoly>& coeffs) {
  std::vector<ParamTerm> out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    Monomial m = Monomial::variable(p, static_cast<unsigned>(e));
    for (const auto& t : coeffs[e].terms_) out.push_back({t.mono * m, t.coef});
  }
  return from_terms(std::move(out));
}

std::optional<ParamPoly> ParamPoly::sqrt() const {
  if (is_zero()) return ParamPoly{};
  const ParamTerm& lt = leading();
  auto exps = lt.mono.exponents();
  for (auto& e : exps) {
    if (e % 2 != 0) return std::nullopt;
    e /= 2;
  }
  auto c = rat_sqrt(lt.coef);
  if (!c) return std::nullopt;

  // Peel off one root term at a time: each new term is lt(rem) / (2 lt(root)).
  // Root terms have total degree in [mindeg/2, deg/2] and strictly decrease,
  // which bounds the loop.
  ParamTerm root_lead{Monomial::from_exponents(exps), *c};
  ParamPoly root = term(root_lead.coef, root_lead.mono);
  ParamPoly rem = *this - root * root;
  const unsigned floor_degree = min_total_degree();
  Monomial last = root_lead.mono;
  while (!rem.is_zero()) {
    const ParamTerm& lr = rem.leading();
    if (!root_lead.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = root_lead.mono.quotient_of(lr.mono);
    if (!(m < last) || 2 * m.total_degree() < floor_degree) return std::nullopt;
    Rat coef = lr.coef / (2 * root_lead.coef);
    ParamPoly t = term(coef, m);
    rem -= t * (root.scaled(Rat(2)) + t);
    root += t;
    last = m;
  }
  return root;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

// ---------------------------------------------------------------------------
// gcd: recursive primitive polynomial remainder sequences.

Rat make_primitive(ParamPoly& p) {
  if (p.is_zero()) return Rat(1);
  Rat c = p.content();
  if (sgn(p.leading().coef) < 0) c = -c;
  if (c != 1) p = p.scaled(1 / c);
  return c;
}

namespace {

using Coeffs = std::vector<ParamPoly>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

ParamPoly monomial_gcd(const ParamPoly& mono, const ParamPoly& other) {
  Monomial m = mono.leading().mono;
  for (const auto& t : other.terms()) {
    m = Monomial::min(m, t.mono);
    if (m.is_one()) break;
  }
  return ParamPoly::term(Rat(1), m);
}

ParamPoly content_in(const Coeffs& a) {
  ParamPoly g;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Coeffs divide_all(const Coeffs& a, const ParamPoly& d) {
  Coeffs out;
  out.reserve(a.size());
  for (const auto& c : a) {
    auto q = c.divide_exact(d);
    if (!q) throw std::logic_error("content does not divide coefficient");
    out.push_back(std::move(*q));
  }
  return out;
}

// Pseudo-remainder of a by b as polynomials in the main variable:
// lc(b)^(deg a - deg b + 1) a mod b.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const std::size_t db = b.size() - 1;
  const ParamPoly& lb = b.back();
  std::size_t steps = a.size() - 1 - db + 1;
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    ParamPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    --steps;
  }
  for (; steps > 0; --steps)
    for (auto& c : a) c = c * lb;
  return a;
}

// Removes the polynomial content and then the rational content, so that the
// coefficients stay integral and coprime through the remainder sequence.
Coeffs primitive_part(const Coeffs& a, const ParamPoly* known_content = nullptr) {
  ParamPoly c = known_content ? *known_content : content_in(a);
  Coeffs out = c.is_one() ? a : divide_all(a, c);
  Int num = 0, den = 1;
  for (const auto& x : out) {
    if (x.is_zero()) continue;
    Rat k = x.content();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), k.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), k.get_den().get_mpz_t());
  }
  Rat k = make_rat(num, den);
  if (k != 0 && k != 1)
    for (auto& x : out) x = x.scaled(1 / k);
  return out;
}

ParamPoly gcd_nontrivial(const ParamPoly& a, const ParamPoly& b) {
  std::optional<Param> var;
  for (int i = kNumParams - 1; i >= 0; --i) {
    auto p = static_cast<Param>(i);
    if (a.contains(p) || b.contains(p)) {
      var = p;
      break;
    }
  }
  const Param v = *var;
  if (!a.contains(v)) return gcd(a, content_in(b.coefficients_in(v)));
  if (!b.contains(v)) return gcd(content_in(a.coefficients_in(v)), b);

  Coeffs ca = a.coefficients_in(v);
  Coeffs cb = b.coefficients_in(v);
  ParamPoly cont_a = content_in(ca);
  ParamPoly cont_b = content_in(cb);
  ParamPoly cont = gcd(cont_a, cont_b);
  Coeffs pa = primitive_part(ca, &cont_a);
  Coeffs pb = primitive_part(cb, &cont_b);
  if (pa.size() < pb.size()) std::swap(pa, pb);

  // Subresultant remainder sequence: exact divisions by g h^delta keep the
  // coefficients small without a content computation per step.
  ParamPoly g(1), h(1);
  while (true) {
    const std::size_t delta = pa.size() - pb.size();
    Coeffs r = pseudo_remainder(pa, pb);
    if (r.empty()) break;
    if (r.size() == 1) return cont;
    ParamPoly divisor = g;
    for (std::size_t k = 0; k < delta; ++k) divisor = divisor * h;
    pa = std::move(pb);
    pb = divide_all(r, divisor);
    g = pa.back();
    if (delta == 0) continue;
    ParamPoly gd(1);
    for (std::size_t k = 0; k < delta; ++k) gd = gd * g;
    ParamPoly hd(1);
    for (std::size_t k = 1; k < delta; ++k) hd = hd * h;
    auto q = gd.divide_exact(hd);
    if (!q) throw std::logic_error("subresultant sequence: inexact division");
    h = std::move(*q);
  }
  ParamPoly out = ParamPoly::from_coefficients(v, primitive_part(pb)) * cont;
  make_primitive(out);
  return out;
}

// Heuristic gcd (Char, Geddes, Gonnet): evaluate one variable at a large
// integer xi, recurse, and read the gcd back off the xi-adic digits of the
// image. With xi > 2 min(|f|, |g|) + 1 a reconstruction that divides both
// inputs is the gcd. Inputs have integer coefficients; nullopt when the
// heuristic gives up.
Int max_norm(const ParamPoly& p) {
  Int m = 0;
  for (const auto& t : p.terms()) m = std::max(m, Int(abs(t.coef.get_num())));
  return m;
}

Int integer_content(const ParamPoly& p) {
  Int g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num().get_mpz_t());
  return g;
}

ParamPoly symmetric_digits(const ParamPoly& h, const Int& xi, ParamPoly& rest) {
  std::vector<ParamTerm> digit, carry;
  const Int half = xi / 2;
  for (const auto& t : h.terms()) {
    Int c = t.coef.get_num();
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    if (r != 0) digit.push_back({t.mono, Rat(r)});
    Int q = (c - r) / xi;
    if (q != 0) carry.push_back({t.mono, Rat(q)});
  }
  rest = ParamPoly::from_terms(std::move(carry));
  return ParamPoly::from_terms(std::move(digit));
}

std::optional<ParamPoly> heuristic_gcd(const ParamPoly& f0, const ParamPoly& g0) {
  Int cf = integer_content(f0), cg = integer_content(g0);
  Int common;
  mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  ParamPoly f = f0.scaled(Rat(1) / Rat(cf));
  ParamPoly g = g0.scaled(Rat(1) / Rat(cg));
  if (f.is_constant() || g.is_constant()) return ParamPoly(Rat(common));

  std::optional<Param> var;
  for (int i = kNumParams - 1; i >= 0; --i) {
    auto p = static_cast<Param>(i);
    if (f.contains(p) || g.contains(p)) {
      var = p;
      break;
    }
  }
  const Param x = *var;
  Int xi = 2 * std::min(max_norm(f), max_norm(g)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 73794 / 27011) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(f.degree(x), g.degree(x)) > 6000) return std::nullopt;
    ParamPoly fi = f.substitute(x, Rat(xi));
    ParamPoly gi = g.substitute(x, Rat(xi));
    if (fi.is_zero() || gi.is_zero()) continue;
    auto h = heuristic_gcd(fi, gi);
    if (!h) continue;
    ParamPoly candidate, rest = *h;
    for (unsigned k = 0; !rest.is_zero(); ++k) {
      ParamPoly next;
      ParamPoly digit = symmetric_digits(rest, xi, next);
      candidate += digit.times_monomial(Rat(1), Monomial::variable(x, k));
      rest = std::move(next);
    }
    if (candidate.is_zero()) continue;
    Int cc = integer_content(candidate);
    candidate = candidate.scaled(Rat(1) / Rat(cc));
    if (f.divide_exact(candidate) && g.divide_exact(candidate)) return candidate.scaled(Rat(common));
  }
  return std::nullopt;
}

ParamPoly substitute_all_but(const ParamPoly& p, Param keep, const std::array<Rat, kNumParams>& values) {
  ParamPoly out = p;
  for (int i = 0; i < kNumParams; ++i) {
    auto q = static_cast<Param>(i);
    if (q != keep && out.contains(q)) out = out.substitute(q, values[static_cast<std::size_t>(i)]);
  }
  return out;
}

// Sufficient test for gcd(a, b) = 1. For each variable v occurring in both,
// specialize the others at a point where the leading coefficients in v
// survive; a gcd of positive v-degree would survive too and divide both
// images. Returns false when the test is inconclusive.
bool coprime_by_specialization(const ParamPoly& a, const ParamPoly& b) {
  static const long kPoints[][kNumParams] = {{2, 3, 5, 7}, {-3, 7, 11, -2}, {13, -5, 3, 17}};
  for (int i = 0; i < kNumParams; ++i) {
    auto v = static_cast<Param>(i);
    if (!a.contains(v) || !b.contains(v)) continue;
    bool separated = false;
    for (const auto& point : kPoints) {
      std::array<Rat, kNumParams> values;
      for (int k = 0; k < kNumParams; ++k) values[static_cast<std::size_t>(k)] = point[k];
      ParamPoly ia = substitute_all_but(a, v, values);
      ParamPoly ib = substitute_all_but(b, v, values);
      if (ia.degree(v) != a.degree(v) || ib.degree(v) != b.degree(v)) continue;
      if (gcd_nontrivial(ia, ib).is_constant()) separated = true;
      break;
    }
    if (!separated) return false;
  }
  return true;
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    ParamPoly g = a.is_zero() ? b : a;
    make_primitive(g);
    return g;
  }
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b || a == -b) {
    ParamPoly g = a;
    make_primitive(g);
    return g;
  }
  if (coprime_by_specialization(a, b)) return ParamPoly(1);
  ParamPoly ia = a, ib = b;
  make_primitive(ia);
  make_primitive(ib);
  if (auto h = heuristic_gcd(ia, ib)) {
    make_primitive(*h);
    return *h;
  }
  ParamPoly g = gcd_nontrivial(a, b);
  make_primitive(g);
  return g;
}

// ---------------------------------------------------------------------------
// Printing

namespace {
std::string monomial_string(Monomial m) {
  std::string out;
  for (Param p : kAllParams) {
    unsigned e = m.exponent(p);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += param_symbol(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}
}  // namespace

std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat c = t.coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (neg)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    std::string mono = monomial_string(t.mono);
    if (mono.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace affvir
