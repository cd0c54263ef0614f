#include "affvir/rational.hpp"


namespace affvir {

Rat make_rat(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rat> parse_rat(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view v) {
    std::size_t i = 0;
    if (!v.empty() && (v[0] == '-' || v[0] == '+')) i = 1;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') return std::nullopt;
  if (num[0] == '+') num.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) return std::nullopt;
  return make_rat(n, d);
}

std::string to_string(const Rat& r) { return r.get_str(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Int& n = r.get_num();
  const Int& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return make_rat(Int(sqrt(n)), Int(sqrt(d)));
}

Int factorial(unsigned n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int binomial(unsigned n, unsigned k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rat rat_pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw DivisionByZero("zero raised to a negative power");
    Rat inv = 1 / base;
    return rat_pow(inv, -exponent);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return make_rat(num, den);
}

}  // namespace affvir
