#include <gtest/gtest.h>

#include <array>
#include <map>

#include "affvir/liealg.hpp"

using namespace affvir;

namespace {

// Oracle: sl2 (x) C[t, 1/t] with the trace form, the Witt algebra acting by
// t d/dt, and one central element. 2x2 matrices are stored row-major.
using Mat = std::array<Rat, 4>;

struct LoopElement {
  std::map<int, Mat> loop;
  std::map<int, Rat> witt;
  Rat central = 0;
};

Mat matmul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat commutator(const Mat& a, const Mat& b) {
  Mat ab = matmul(a, b), ba = matmul(b, a), out;
  for (int k = 0; k < 4; ++k) out[k] = ab[k] - ba[k];
  return out;
}

Rat trace_form(const Mat& a, const Mat& b) {
  Mat ab = matmul(a, b);
  return ab[0] + ab[3];
}

void add_loop(LoopElement& x, int i, const Mat& m, const Rat& c) {
  Mat& slot = x.loop[i];
  for (int k = 0; k < 4; ++k) slot[k] += c * m[k];
}

LoopElement embed(const Gen& g) {
  LoopElement x;
  switch (g.kind) {
    case GenKind::E: x.loop[g.index] = {0, 1, 0, 0}; break;
    case GenKind::F: x.loop[g.index] = {0, 0, 1, 0}; break;
    case GenKind::H: x.loop[g.index] = {1, 0, 0, -1}; break;
    case GenKind::D: x.witt[g.index] = 1; break;
    case GenKind::C: x.central = 1; break;
  }
  return x;
}

LoopElement oracle_bracket(const LoopElement& x, const LoopElement& y) {
  LoopElement out;
  for (const auto& [i, a] : x.loop) {
    for (const auto& [j, b] : y.loop) {
      add_loop(out, i + j, commutator(a, b), 1);
      if (i + j == 0) out.central += Rat(i) * trace_form(a, b);
    }
  }
  for (const auto& [i, c] : x.witt) {
    for (const auto& [j, b] : y.loop) add_loop(out, i + j, b, c * j);
    for (const auto& [j, c2] : y.witt) {
      out.witt[i + j] += c * c2 * (j - i);
      if (i + j == 0) out.central += c * c2 * make_rat(static_cast<long>(i) * i * i - i, 12);
    }
  }
  for (const auto& [j, c] : y.witt)
    for (const auto& [i, a] : x.loop) add_loop(out, i + j, a, -c * i);
  return out;
}

LoopElement embed(const AlgebraElement& x) {
  LoopElement out;
  for (const auto& [g, c] : x.terms()) {
    Rat r = c.as_rational().value();
    LoopElement y = embed(g);
    for (const auto& [i, m] : y.loop) add_loop(out, i, m, r);
    for (const auto& [i, w] : y.witt) out.witt[i] += r * w;
    out.central += r * y.central;
  }
  return out;
}

bool same(const LoopElement& a, const LoopElement& b) {
  auto nonzero_loop = [](const LoopElement& x) {
    std::map<int, Mat> m;
    for (const auto& [i, v] : x.loop)
      if (v != Mat{0, 0, 0, 0}) m[i] = v;
    return m;
  };
  auto nonzero_witt = [](const LoopElement& x) {
    std::map<int, Rat> m;
    for (const auto& [i, v] : x.witt)
      if (v != 0) m[i] = v;
    return m;
  };
  return nonzero_loop(a) == nonzero_loop(b) && nonzero_witt(a) == nonzero_witt(b) && a.central == b.central;
}

}  // namespace

TEST(Bracket, MatchesLoopAlgebraOracle) {
  for (const auto& x : basis_window(3)) {
    for (const auto& y : basis_window(3)) {
      AlgebraElement got = bracket(x, y);
      EXPECT_TRUE(same(embed(got), oracle_bracket(embed(x), embed(y))))
          << to_string(x) << "," << to_string(y) << " gave " << to_string(got);
    }
  }
}

TEST(Bracket, TableEntries) {
  EXPECT_EQ(to_string(bracket(Gen::e(1), Gen::f(-1))), "h[0]+c");
  EXPECT_EQ(bracket(Gen::h(0), Gen::e(2)), AlgebraElement(Gen::e(2), Scalar(2)));
  EXPECT_EQ(bracket(Gen::h(0), Gen::f(2)), AlgebraElement(Gen::f(2), Scalar(-2)));
  EXPECT_EQ(bracket(Gen::d(1), Gen::e(2)), AlgebraElement(Gen::e(3), Scalar(2)));
  EXPECT_EQ(bracket(Gen::d(1), Gen::d(2)), AlgebraElement(Gen::d(3), Scalar(1)));
  EXPECT_EQ(bracket(Gen::d(2), Gen::d(-2)).coeff(Gen::c()), Scalar(make_rat(1, 2)));
  EXPECT_EQ(bracket(Gen::h(1), Gen::h(-1)), AlgebraElement(Gen::c(), Scalar(2)));
  EXPECT_EQ(bracket(Gen::h(1), Gen::h(-1), CentralConvention::PrintedTable),
            AlgebraElement(Gen::c(), Scalar(-2)));
  EXPECT_TRUE(bracket(Gen::c(), Gen::d(3)).is_zero());
  EXPECT_TRUE(bracket(Gen::e(1), Gen::e(2)).is_zero());
}

TEST(Bracket, BilinearOnSymbolicCombinations) {
  Scalar l = Scalar::param(Param::Lambda);
  AlgebraElement x = AlgebraElement(Gen::e(1), l) + AlgebraElement(Gen::d(0));
  AlgebraElement y = AlgebraElement(Gen::f(-1)) + AlgebraElement(Gen::h(2), Scalar(3));
  AlgebraElement expected = l * bracket(Gen::e(1), Gen::f(-1)) + Scalar(3) * l * bracket(Gen::e(1), Gen::h(2)) +
                            bracket(Gen::d(0), Gen::f(-1)) + Scalar(3) * bracket(Gen::d(0), Gen::h(2));
  EXPECT_EQ(bracket(x, y), expected);
}

TEST(Identities, HoldInWindowThree) {
  CheckReport anti = check_antisymmetry(3);
  EXPECT_TRUE(anti.passed());
  EXPECT_EQ(anti.checked, 29u * 29u);
  CheckReport jac = check_jacobi(3);
  EXPECT_TRUE(jac.passed()) << jac.first_failure()->inputs;
  EXPECT_EQ(jac.checked, 29u * 29u * 29u);
}

TEST(Identities, PrintedSignBreaksJacobiOnlyOnEFH) {
  CheckReport jac = check_jacobi(2, CentralConvention::PrintedTable);
  ASSERT_FALSE(jac.passed());
  for (const auto& f : jac.failures) {
    bool has_e = f.inputs.find("e[") != std::string::npos;
    bool has_f = f.inputs.find("f[") != std::string::npos;
    bool has_h = f.inputs.find("h[") != std::string::npos;
    EXPECT_TRUE(has_e && has_f && has_h) << f.inputs;
  }
  EXPECT_EQ(jac.first_failure()->inputs, "e[-2],f[0],h[2]");
  EXPECT_TRUE(check_antisymmetry(2, CentralConvention::PrintedTable).passed());
}

TEST(Enveloping, ConcatenationAndPowers) {
  EnvelopingElement e0(Gen::e(0)), f1(Gen::f(1));
  EnvelopingElement u = e0 * f1 + Scalar(2) * e0.pow(2);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(to_string(u), "2*e[0]^2+e[0]*f[1]");
  EXPECT_EQ(word_mul(e0, EnvelopingElement::unit()), e0);
  EXPECT_EQ((e0 * f1) * e0, e0 * (f1 * e0));
  EXPECT_NE(e0 * f1, f1 * e0);
  EXPECT_TRUE((u - u).is_zero());
  EXPECT_FALSE(u.as_algebra_element().has_value());
  EXPECT_EQ((e0 + f1).as_algebra_element(), AlgebraElement(Gen::e(0)) + AlgebraElement(Gen::f(1)));
}
