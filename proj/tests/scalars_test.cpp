#include <gtest/gtest.h>

#include <affvir/parse.hpp>
#include <affvir/unipoly.hpp>

#include "support.hpp"

using namespace affvir;
using affvir::testkit::Rng;

namespace {

const Scalar L = Scalar::param(Param::Lambda);
const Scalar A = Scalar::param(Param::Alpha);
const Scalar B = Scalar::param(Param::Beta);
const Scalar G = Scalar::param(Param::Gamma);

UniPoly t_minus(long c) { return UniPoly::linear(Scalar(1), Scalar(-c)); }
UniPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Scalar> c;
  for (long x : coeffs) c.emplace_back(x);
  return UniPoly(c);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(make_rat(6, -4), make_rat(-3, 2));
  EXPECT_EQ(to_string(make_rat(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rat(0, 5)), "0");
  EXPECT_EQ(parse_rat("-12/8"), make_rat(-3, 2));
  EXPECT_FALSE(parse_rat("1/0").has_value());
  EXPECT_EQ(rat_sqrt(make_rat(9, 4)), make_rat(3, 2));
  EXPECT_FALSE(rat_sqrt(make_rat(2)).has_value());
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_THROW(rat_pow(Rat(0), -1), DivisionByZero);
}

TEST(Scalar, Examples) {
  EXPECT_TRUE((L / A * (A / L)).is_one());
  EXPECT_EQ(L.pow(-2), Scalar(1) / (L * L));
  EXPECT_EQ(to_string(L.pow(-2)), "1/L^2");
  EXPECT_EQ((B + Scalar(1)) * B, B * B + B);
  EXPECT_EQ(to_string((B + Scalar(1)) * B), "B^2+B");
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(L / Scalar(0), DivisionByZero);
  EXPECT_THROW(Scalar(0).pow(-1), DivisionByZero);
  EXPECT_THROW((L - L).inverse(), DivisionByZero);
}

TEST(Scalar, CancelsCommonFactors) {
  Scalar x = (L * L - A * A) / (L - A);
  EXPECT_EQ(x, L + A);
  EXPECT_TRUE(x.denominator().is_one());
  Scalar y = (Scalar(2) * L * B + Scalar(2) * L) / (Scalar(-4) * L * A);
  EXPECT_EQ(to_string(y), "(-1/2*B-1/2)/A");
  EXPECT_TRUE(y.denominator().leading().coef > 0);
}

TEST(Scalar, SqrtOfSquares) {
  auto r = (Scalar(1) + Scalar(4) * (B * B + B)).sqrt();
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, Scalar(4) * B * B + Scalar(4) * B + Scalar(1));
  EXPECT_FALSE((B * B + Scalar(1)).sqrt().has_value());
  EXPECT_EQ(Scalar(make_rat(9, 4)).sqrt(), Scalar(make_rat(3, 2)));
}

TEST(ScalarProperty, FieldLaws) {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    Scalar x = testkit::random_scalar(rng), y = testkit::random_scalar(rng), z = testkit::random_scalar(rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) {
      EXPECT_TRUE((x * x.inverse()).is_one());
      EXPECT_EQ((y / x) * x, y);
    }
  }
}

TEST(ScalarProperty, NormalizationIsIdempotent) {
  Rng rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    Scalar x = testkit::random_scalar(rng);
    Scalar again = Scalar::fraction(x.numerator(), x.denominator());
    EXPECT_EQ(again, x);
    EXPECT_EQ(to_string(again), to_string(x));
    EXPECT_TRUE(gcd(x.numerator(), x.denominator()).is_constant());
  }
}

// Oracle: substituting rationals for the parameters is a ring homomorphism, so
// evaluating the operands first and computing with GMP rationals must agree.
TEST(ScalarProperty, EvaluationHomomorphism) {
  Rng rng(13);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Scalar x = testkit::random_scalar(rng), y = testkit::random_scalar(rng);
    auto point = testkit::random_point(rng);
    auto at = [&](const Scalar& v) -> std::optional<Rat> {
      ParamPoly d = v.denominator();
      ParamPoly n = v.numerator();
      for (const auto& [p, r] : point) {
        d = d.substitute(p, r);
        n = n.substitute(p, r);
      }
      if (d.is_zero()) return std::nullopt;
      return *n.constant_value() / *d.constant_value();
    };
    auto xv = at(x), yv = at(y), sum = at(x + y), prod = at(x * y);
    if (!xv || !yv || !sum || !prod) continue;
    EXPECT_EQ(*sum, *xv + *yv);
    EXPECT_EQ(*prod, *xv * *yv);
    EXPECT_EQ(testkit::value(x.substitute(point)), *xv);
    ++compared;
  }
  EXPECT_GT(compared, 150);
}

TEST(ParamPoly, GcdOfProducts) {
  Rng rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    ParamPoly a = testkit::random_param_poly(rng, 2), b = testkit::random_param_poly(rng, 2),
              c = testkit::random_param_poly(rng, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    ParamPoly g = gcd(a * b, a * c);
    EXPECT_TRUE((a * b).divide_exact(g).has_value());
    EXPECT_TRUE((a * c).divide_exact(g).has_value());
    EXPECT_TRUE(g.divide_exact(a).has_value()) << to_string(g) << " vs " << to_string(a);
  }
}

TEST(ParamPoly, PrintsCompactly) {
  ParamPoly p = ParamPoly::variable(Param::Lambda) * ParamPoly::variable(Param::Lambda) *
                    ParamPoly::variable(Param::Alpha) +
                ParamPoly::variable(Param::Beta).scaled(make_rat(3, 2)) - ParamPoly(1);
  EXPECT_EQ(to_string(p), "L^2*A+3/2*B-1");
}

TEST(UniPoly, GcdExamples) {
  EXPECT_EQ(gcd(UniPoly::x(), t_minus(2)), UniPoly(Scalar(1)));
  EXPECT_EQ(gcd(poly({-1, 0, 1}), t_minus(1)), t_minus(1));
  EXPECT_EQ(gcd(UniPoly(), UniPoly::x()), UniPoly::x());
  EXPECT_THROW(gcd(UniPoly(), UniPoly()), std::invalid_argument);
}

TEST(UniPoly, ExtEuclidExamples) {
  Bezout r = ext_euclid(UniPoly::x(), t_minus(2));
  EXPECT_EQ(r.a, UniPoly(Scalar(make_rat(1, 2))));
  EXPECT_EQ(r.b, UniPoly(Scalar(make_rat(-1, 2))));

  r = ext_euclid(t_minus(3), UniPoly(Scalar(1)));
  EXPECT_TRUE(r.a.is_zero());
  EXPECT_EQ(r.b, UniPoly(Scalar(1)));

  r = ext_euclid(poly({-1, 0, 1}), UniPoly::x());
  EXPECT_EQ(r.a, UniPoly(Scalar(-1)));
  EXPECT_EQ(r.b, UniPoly::x());

  EXPECT_THROW(ext_euclid(poly({-1, 0, 1}), t_minus(1)), NotCoprime);
}

TEST(UniPolyProperty, BezoutWitnessIsExact) {
  Rng rng(15);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    // Coefficients r or r*P for one parameter P per trial: Euclid over Q(P).
    const Scalar param = Scalar::param(static_cast<Param>(testkit::uniform(rng, 0, kNumParams - 1)));
    auto random_uni = [&](int degree) {
      std::vector<Scalar> c;
      auto coefficient = [&] {
        Scalar r(testkit::random_rat(rng));
        return testkit::uniform(rng, 0, 1) == 0 ? r : r * param;
      };
      for (int i = 0; i <= degree; ++i) c.push_back(coefficient());
      while (c.back().is_zero()) c.back() = coefficient();
      return UniPoly(c);
    };
    UniPoly p = random_uni(static_cast<int>(testkit::uniform(rng, 1, 3)));
    UniPoly q = random_uni(static_cast<int>(testkit::uniform(rng, 1, 3)));
    if (gcd(p, q).degree() != 0) continue;
    Bezout r = ext_euclid(p, q);
    EXPECT_EQ(r.a * p + r.b * q, UniPoly(Scalar(1)));
    EXPECT_LT(r.a.degree(), q.degree());
    EXPECT_LT(r.b.degree(), p.degree());
    ++checked;
  }
  EXPECT_GT(checked, 60);
}

TEST(UniPoly, DivModAndShift) {
  DivMod qr = divmod(poly({-1, 0, 1}), t_minus(1));
  EXPECT_EQ(qr.quotient, UniPoly::linear(Scalar(1), Scalar(1)));
  EXPECT_TRUE(qr.remainder.is_zero());
  EXPECT_EQ(poly({0, 0, 1}).shifted(Rat(-2)), poly({4, -4, 1}));
  EXPECT_EQ(poly({1, 2, 3}).evaluate(Scalar(2)), Scalar(17));
  EXPECT_EQ(to_string(poly({-1, 0, 1})), "t^2-1");
}

TEST(ScalarProperty, PrintParseRoundtrip) {
  Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar x = testkit::random_scalar(rng);
    EXPECT_EQ(parse_scalar(to_string(x)), x) << to_string(x);
  }
}
