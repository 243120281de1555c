#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zetaverify/contour.hpp"
#include "zetaverify/gamma_expr.hpp"

using namespace zetaverify;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("gamma at classical points") {
  CHECK(rel(gamma_complex({1.0, 0.0}), {1.0, 0.0}) < 1e-15);
  CHECK(rel(gamma_complex({0.5, 0.0}), {std::sqrt(kPi), 0.0}) < 1e-14);
  CHECK(rel(gamma_complex({6.0, 0.0}), {120.0, 0.0}) < 1e-14);
}

TEST_CASE("gamma against the frozen high-precision oracle values") {
  // Reference values computed once with a 30-digit series oracle.
  struct Ref {
    Complex z, g;
  };
  const Ref refs[] = {
      {{4.0, 3.0}, {-1.12942849353205406791340031631, -1.51125195228995619889505696735}},
      {{12.3, 41.0}, {-2.61288942310695773252929707298e-9, 2.14712601847504148417151019238e-9}},
      {{-5.5, 0.0}, {0.0109126547819098629867323442938, 0.0}},
      {{0.25, -0.75}, {0.193336665450261838277888861571, 0.821451590707461648723637013443}},
      {{35.0, -20.0}, {-1.09423875345174430747232385909e36, -4.81436144864618236492195546318e35}},
  };
  for (const auto& r : refs) {
    INFO("z = ", r.z.real(), " + ", r.z.imag(), "i");
    CHECK(rel(gamma_complex(r.z), r.g) < 1e-13);
  }
}

TEST_CASE("functional equation Gamma(z+1) = z Gamma(z) on a random grid") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dre(-29.0, 29.0), dim(-29.0, 29.0);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 100; ++t) {
    Complex z(dre(rng), dim(rng));
    if (std::abs(z) > 30.0 || std::abs(z.imag()) < 1e-3) continue;
    ++checked;
    CHECK(rel(gamma_complex(z + 1.0), z * gamma_complex(z)) < 1e-12);
  }
  CHECK(checked == 100);
}

TEST_CASE("poles and overflow are distinct failures") {
  CHECK_THROWS_AS(gamma_complex({0.0, 0.0}), GammaPoleError);
  CHECK_THROWS_AS(gamma_complex({-3.0, 0.0}), GammaPoleError);
  CHECK_THROWS_AS(gamma_complex({500.0, 0.0}), GammaOverflowError);
  CHECK(rel(gamma_complex({-2.5, 0.0}), {-0.9453087204829418812256893, 0.0}) < 1e-13);
}

TEST_CASE("normalized gamma factors") {
  CHECK(rel(eval_gamma_R({1.0, 0.0}), {1.0, 0.0}) < 1e-14);
  CHECK(rel(eval_gamma_C({1.0, 0.0}), {1.0 / kPi, 0.0}) < 1e-14);
  CHECK(rel(eval_gamma_C({2.0, 0.0}), {1.0 / (2.0 * kPi * kPi), 0.0}) < 1e-14);
  // Definition match at a generic complex point.
  Complex s(1.7, 2.3);
  CHECK(rel(eval_gamma_R(s), std::pow(kPi, -s / 2.0) * gamma_complex(s / 2.0)) < 1e-12);
}

TEST_CASE("log_gamma is usable far beyond the direct range") {
  Complex z(200.0, 120.0);
  Complex lg = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
  // e^(difference) must be 1 regardless of branch.
  CHECK(std::abs(std::exp(lg) - 1.0) < 1e-11);
}

TEST_CASE("barnes closed forms") {
  SUBCASE("first lemma at (1,2,1,2)") {
    Complex v = barnes_first({1, 0}, {2, 0}, {1, 0}, {2, 0});
    Complex want = 2.0 * eval_gamma_R({2, 0}) * eval_gamma_R({3, 0}) * eval_gamma_R({3, 0}) *
                   eval_gamma_R({4, 0}) / eval_gamma_R({6, 0});
    CHECK(rel(v, want) < 1e-14);
  }
  SUBCASE("symmetry under swapping a and b") {
    Complex a(0.7, 0.1), b(1.9, -0.4), c(1.1, 0.0), d(2.5, 0.3);
    CHECK(rel(barnes_first(a, b, c, d), barnes_first(b, a, c, d)) < 1e-14);
  }
  SUBCASE("pinched contour is reported") {
    CHECK_THROWS_AS(barnes_first({-2, 0}, {1, 0}, {1, 0}, {1, 0}), PinchedContourError);
    CHECK_THROWS_AS(barnes_second({1, 0}, {1, 0}, {1, 0}, {-1, 0}, {1, 0}),
                    PinchedContourError);
  }
  SUBCASE("numeric contour integral matches the first lemma at (1,2,1,2)") {
    ContourSpec spec;
    spec.abscissa = barnes_first_abscissa({1, 0}, {2, 0}, {1, 0}, {2, 0});
    spec.height = 40.0;
    spec.nodes = 1600;
    auto f = [](Complex s) {
      return std::exp(log_gamma_R(s + 1.0) + log_gamma_R(s + 2.0) + log_gamma_R(-s + 1.0) +
                      log_gamma_R(-s + 2.0));
    };
    auto res = contour_integral(f, spec);
    CHECK(rel(res.value, barnes_first({1, 0}, {2, 0}, {1, 0}, {2, 0})) < 1e-8);
    CHECK(res.refine_error < 1e-8);
  }
  SUBCASE("gauss-legendre panel rule agrees with trapezoid") {
    ContourSpec t, g;
    t.abscissa = g.abscissa = 0.0;
    t.height = g.height = 30.0;
    t.nodes = 1400;
    g.rule = ContourSpec::GaussLegendrePanels;
    auto f = [](Complex s) {
      return std::exp(log_gamma_R(s + 1.0) + log_gamma_R(s + 1.5) + log_gamma_R(-s + 1.0) +
                      log_gamma_R(-s + 2.0));
    };
    CHECK(rel(contour_integral(f, t).value, contour_integral(f, g).value) < 1e-9);
  }
  SUBCASE("truncation check fires on a non-decayed integrand") {
    ContourSpec spec;
    spec.abscissa = 0.0;
    spec.height = 3.0;
    spec.nodes = 64;
    CHECK_THROWS_AS(contour_integral([](Complex) { return Complex(1.0, 0.0); }, spec),
                    TruncationError);
  }
}

TEST_CASE("gamma expression: poles detected with exact shift arithmetic") {
  GammaExpr e;
  e.mul_C(Rational(3, 2));
  CHECK(e.has_pole_at(Rational(-3, 2)));
  CHECK(e.has_pole_at(Rational(-5, 2)));
  CHECK_FALSE(e.has_pole_at(Rational(-1)));
  GammaExpr r;
  r.mul_R(Rational(0));
  CHECK(r.has_pole_at(Rational(0)));
  CHECK(r.has_pole_at(Rational(-2)));
  CHECK_FALSE(r.has_pole_at(Rational(-1)));  // Gamma_R(-1) = pi^(1/2) Gamma(-1/2), finite
  CHECK_THROWS_AS(r.eval_at(Rational(0)), GammaPoleError);
}

TEST_CASE("gamma_rational_part exact decompositions") {
  SUBCASE("Gamma_R(2) = 1/pi") {
    GammaExpr e;
    e.mul_R(Rational(2));
    PiPower p = e.rational_part(Rational(0));
    CHECK(p.coeff == GaussianRational(1));
    CHECK(p.pi_exponent == Rational(-1));
  }
  SUBCASE("Gamma_C(3) = (1/2) pi^-3") {
    GammaExpr e;
    e.mul_C(Rational(3));
    PiPower p = e.rational_part(Rational(0));
    CHECK(p.coeff == GaussianRational(Rational(1, 2)));
    CHECK(p.pi_exponent == Rational(-3));
  }
  SUBCASE("Gamma_R(13) = (10395/64) pi^-6") {
    GammaExpr e;
    e.mul_R(Rational(13));
    PiPower p = e.rational_part(Rational(0));
    CHECK(p.coeff == GaussianRational(Rational(10395, 64)));
    CHECK(p.pi_exponent == Rational(-6));
  }
  SUBCASE("numeric evaluation agrees with the exact decomposition") {
    GammaExpr e;
    e.mul_R(Rational(9)).mul_C(Rational(4), 2).mul_R(Rational(3), -1);
    PiPower p = e.rational_part(Rational(0));
    CHECK(rel(e.eval({0.0, 0.0}), p.to_complex()) < 1e-12);
  }
}

TEST_CASE("archimedean L-factors") {
  SUBCASE("Rankin-Selberg shape at (5,3), w = 0") {
    GammaExpr e = LFactorSpec::rankin_selberg(5, 3).expand();
    // Gamma_C(s+3) Gamma_C(s+1) Gamma_C(s+1): at s = 3/2 the arguments are
    // 9/2, 5/2, 5/2.
    REQUIRE(e.factors().size() == 3);
    CHECK(e.factors()[0].shift == Rational(3));
    CHECK(e.factors()[1].shift == Rational(1));
    CHECK(e.factors()[2].shift == Rational(1));
    Complex v = l_factor(LFactorSpec::rankin_selberg(5, 3), {1.5, 0.0});
    Complex want = eval_gamma_C({4.5, 0}) * eval_gamma_C({2.5, 0}) * eval_gamma_C({2.5, 0});
    CHECK(rel(v, want) < 1e-13);
  }
  SUBCASE("adjoint shape at ell = 5, s = 1") {
    Complex v = l_factor(LFactorSpec::adjoint(5), {1.0, 0.0});
    Complex want = eval_gamma_R({1, 0}) * eval_gamma_C({1, 0}) * eval_gamma_C({5, 0}) *
                   eval_gamma_C({3, 0}) * eval_gamma_C({3, 0});
    CHECK(rel(v, want) < 1e-13);
  }
  SUBCASE("pi-power bookkeeping for the adjoint L-value at s = 1") {
    // L(1) itself sits in pi^(-2l-2) Q^x; the full pairing target in
    // pi^(-2l-1) Q^x (the Theorem-level exponent).
    for (long ell : {3L, 5L}) {
      PiPower lv = LFactorSpec::adjoint(ell).expand().rational_part(Rational(1));
      CHECK(lv.pi_exponent == Rational(-2 * ell - 2));
      CHECK(lv.coeff.is_rational());
    }
  }
  SUBCASE("degree bookkeeping: 3x3 = 5+3+1 in gamma degrees") {
    CHECK(LFactorSpec::adjoint(5).expand().degree() == 9);
    // Sym4 piece: 2+2+1 gammas = degree 5, Sym2: 2+1 = 3, zeta: 1.
    GammaExpr sym4, sym2, zeta;
    sym4.mul_C(Rational(0)).mul_C(Rational(0)).mul_R(Rational(0));
    sym2.mul_C(Rational(0)).mul_R(Rational(0));
    zeta.mul_R(Rational(0));
    CHECK(sym4.degree() + sym2.degree() + zeta.degree() ==
          LFactorSpec::adjoint(5).expand().degree());
  }
  SUBCASE("half-integer arguments are rejected by rational_part") {
    GammaExpr e = LFactorSpec::rankin_selberg(5, 3, 0, 0).expand();
    // w = 0 with kappa odd puts Gamma_C at half-integers at s = 1/2.
    CHECK_THROWS(e.rational_part(Rational(1, 2)));
    // With the parity-correct twist w_pi = 1 everything is integral.
    GammaExpr e2 = LFactorSpec::rankin_selberg(5, 3, 0, 1).expand();
    CHECK_NOTHROW(e2.rational_part(Rational(1, 2)));
  }
}

TEST_CASE("criticality: no-pole window matches the branching window shape") {
  // L(s) at s = m + 1/2 and the dual factor at 1 - s, (ell, kappa) = (5, 3),
  // w_sigma = 0, w_pi = 1.
  GammaExpr lf = LFactorSpec::rankin_selberg(5, 3, 0, 1).expand();
  GammaExpr lf_dual = LFactorSpec::rankin_selberg(5, 3, 0, -1).expand();
  std::vector<long> no_pole;
  for (long m = -6; m <= 6; ++m) {
    Rational s(2 * m + 1, 2);
    if (!lf.has_pole_at(s) && !lf_dual.has_pole_at(Rational(1 - s))) no_pole.push_back(m);
  }
  CHECK(no_pole == std::vector<long>{-1, 0});
}
