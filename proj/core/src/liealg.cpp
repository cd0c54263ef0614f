#include "affvir/liealg.hpp"

namespace affvir {

std::string to_string(const Gen& g) {
  switch (g.kind) {
    case GenKind::E: return "e[" + std::to_string(g.index) + "]";
    case GenKind::F: return "f[" + std::to_string(g.index) + "]";
    case GenKind::H: return "h[" + std::to_string(g.index) + "]";
    case GenKind::D: return "d[" + std::to_string(g.index) + "]";
    case GenKind::C: return "c";
  }
  return "?";
}

std::vector<Gen> basis_window(int window) {
  std::vector<Gen> out;
  for (GenKind k : {GenKind::E, GenKind::F, GenKind::H, GenKind::D})
    for (int i = -window; i <= window; ++i) out.push_back({k, i});
  out.push_back(Gen::c());
  return out;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(const Gen& g, const Scalar& coef) { add(g, coef); }

Scalar AlgebraElement::coeff(const Gen& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar() : it->second;
}

AlgebraElement& AlgebraElement::add(const Gen& g, const Scalar& coef) {
  if (coef.is_zero()) return *this;
  Gen key = g.kind == GenKind::C ? Gen::c() : g;
  auto [it, inserted] = terms_.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) {
  AlgebraElement out;
  if (s.is_zero()) return out;
  for (const auto& [g, c] : x.terms_) out.terms_.emplace(g, s * c);
  return out;
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : x.terms()) append_term(out, c, to_string(g));
  return out;
}

// ---------------------------------------------------------------------------
// Structure constants

namespace {

int delta(int n) { return n == 0 ? 1 : 0; }

// One entry per unordered pair of kinds; the reversed order follows from
// antisymmetry.
bool table_entry(const Gen& x, const Gen& y, CentralConvention conv, AlgebraElement& out) {
  const int i = x.index, j = y.index;
  using K = GenKind;
  switch (x.kind) {
    case K::E:
      if (y.kind == K::F) {
        out.add(Gen::h(i + j), Scalar(1));
        out.add(Gen::c(), Scalar(static_cast<long>(i) * delta(i + j)));
        return true;
      }
      if (y.kind == K::E) return true;
      return false;
    case K::F:
      return y.kind == K::F;
    case K::H:
      if (y.kind == K::E) {
        out.add(Gen::e(i + j), Scalar(2));
        return true;
      }
      if (y.kind == K::F) {
        out.add(Gen::f(i + j), Scalar(-2));
        return true;
      }
      if (y.kind == K::H) {
        const long sign = conv == CentralConvention::InvariantForm ? 2 : -2;
        out.add(Gen::c(), Scalar(sign * i * delta(i + j)));
        return true;
      }
      return false;
    case K::D:
      if (y.kind == K::D) {
        out.add(Gen::d(i + j), Scalar(static_cast<long>(j - i)));
        if (i + j == 0) {
          const long cube = static_cast<long>(i) * i * i - i;
          out.add(Gen::c(), Scalar(make_rat(cube, 12)));
        }
        return true;
      }
      if (y.kind == K::H) {
        out.add(Gen::h(i + j), Scalar(static_cast<long>(j)));
        return true;
      }
      if (y.kind == K::E) {
        out.add(Gen::e(i + j), Scalar(static_cast<long>(j)));
        return true;
      }
      if (y.kind == K::F) {
        out.add(Gen::f(i + j), Scalar(static_cast<long>(j)));
        return true;
      }
      return false;
    case K::C:
      return true;
  }
  return false;
}

}  // namespace

AlgebraElement bracket(const Gen& x, const Gen& y, CentralConvention conv) {
  AlgebraElement out;
  if (table_entry(x, y, conv, out)) return out;
  AlgebraElement rev;
  table_entry(y, x, conv, rev);
  return Scalar(-1) * rev;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, CentralConvention conv) {
  AlgebraElement out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) out += (cx * cy) * bracket(gx, gy, conv);
  return out;
}

CheckReport check_antisymmetry(int window, CentralConvention conv) {
  CheckReport report;
  const auto basis = basis_window(window);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      ++report.checked;
      AlgebraElement sum = bracket(x, y, conv) + bracket(y, x, conv);
      if (!sum.is_zero())
        report.failures.push_back({"antisymmetry", to_string(x) + "," + to_string(y), "0", to_string(sum), ""});
    }
  }
  return report;
}

CheckReport check_jacobi(int window, CentralConvention conv) {
  CheckReport report;
  const auto basis = basis_window(window);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      AlgebraElement xy = bracket(x, y, conv);
      for (const auto& z : basis) {
        ++report.checked;
        AlgebraElement sum = bracket(xy, AlgebraElement(z), conv) +
                             bracket(bracket(y, z, conv), AlgebraElement(x), conv) +
                             bracket(bracket(z, x, conv), AlgebraElement(y), conv);
        if (!sum.is_zero())
          report.failures.push_back({"jacobi", to_string(x) + "," + to_string(y) + "," + to_string(z),
                                     "0", to_string(sum), ""});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// EnvelopingElement

EnvelopingElement::EnvelopingElement(const Scalar& s) { add(Word{}, s); }

EnvelopingElement::EnvelopingElement(const Gen& g) { add(Word{g.kind == GenKind::C ? Gen::c() : g}, Scalar(1)); }

EnvelopingElement::EnvelopingElement(const AlgebraElement& x) {
  for (const auto& [g, c] : x.terms()) add(Word{g}, c);
}

EnvelopingElement EnvelopingElement::word(Word w, const Scalar& coef) {
  EnvelopingElement out;
  for (auto& g : w)
    if (g.kind == GenKind::C) g = Gen::c();
  out.add(w, coef);
  return out;
}

EnvelopingElement& EnvelopingElement::add(const Word& w, const Scalar& coef) {
  if (coef.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(w, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

EnvelopingElement& EnvelopingElement::operator+=(const EnvelopingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

EnvelopingElement& EnvelopingElement::operator-=(const EnvelopingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

EnvelopingElement operator*(const Scalar& s, const EnvelopingElement& u) {
  EnvelopingElement out;
  if (s.is_zero()) return out;
  for (const auto& [w, c] : u.terms_) out.terms_.emplace(w, s * c);
  return out;
}

EnvelopingElement operator*(const EnvelopingElement& u, const EnvelopingElement& v) {
  EnvelopingElement out;
  for (const auto& [wu, cu] : u.terms_) {
    for (const auto& [wv, cv] : v.terms_) {
      Word w = wu;
      w.insert(w.end(), wv.begin(), wv.end());
      out.add(w, cu * cv);
    }
  }
  return out;
}

EnvelopingElement word_mul(const EnvelopingElement& u, const EnvelopingElement& v) { return u * v; }

EnvelopingElement EnvelopingElement::pow(unsigned n) const {
  EnvelopingElement out = unit();
  for (unsigned k = 0; k < n; ++k) out = out * *this;
  return out;
}

std::optional<AlgebraElement> EnvelopingElement::as_algebra_element() const {
  AlgebraElement out;
  for (const auto& [w, c] : terms_) {
    if (w.size() != 1) return std::nullopt;
    out.add(w.front(), c);
  }
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out += '*';
    out += to_string(w[i]);
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

std::string to_string(const EnvelopingElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : u.terms()) append_term(out, c, to_string(w));
  return out;
}

}  // namespace affvir
