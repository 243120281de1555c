#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "zetaverify/membership.hpp"

using namespace zetaverify;

namespace {
const char* kCache = "zv-zeta-test-cache";

ZetaQuadConfig test_config() {
  ZetaQuadConfig cfg;
  cfg.cache_dir = kCache;
  cfg.jobs = 2;
  return cfg;
}
}  // namespace

TEST_CASE("tanh-sinh panels integrate smooth functions to near machine precision") {
  auto r = integrate_panels([](double x) { return Complex(x * x, 0.0); }, 0.0, 1.0, 6);
  CHECK(std::abs(r.value - Complex(1.0 / 3.0, 0.0)) < 1e-14);
  auto g = integrate_panels([](double x) { return Complex(std::exp(-x * x), 0.0); }, -6.0, 6.0, 6);
  CHECK(std::abs(g.value.real() - std::sqrt(M_PI)) < 1e-13);
  auto t = integrate_panels_2d(
      [](double x, double y) { return Complex(std::exp(-x * x - y * y), 0.0); }, -5.0, 5.0,
      -5.0, 5.0, 5);
  CHECK(std::abs(t.value.real() - M_PI) < 1e-11);
}

TEST_CASE("rational reconstruction by continued fractions") {
  auto r = rational_reconstruct(-32.0);
  CHECK(r.ok);
  CHECK(r.value == Rational(-32));
  auto q = rational_reconstruct(2.0 / 35.0 + 3e-9);
  CHECK(q.ok);
  CHECK(q.value == Rational(2, 35));
  auto bad = rational_reconstruct(M_PI, 1000, 1e-9);
  CHECK_FALSE(bad.ok);
  auto big_den = rational_reconstruct(1.0 / 2000000.0, 1000000, 1e-6);
  CHECK((!big_den.ok || big_den.value == Rational(0)));
}

TEST_CASE("criticality equivalence: branching vs gamma-factor poles, |m| <= 6") {
  for (auto [ell, kappa] : std::vector<std::pair<long, long>>{{5, 3}, {7, 3}, {7, 5}}) {
    long w_pi = kappa % 2;
    Weight3 mu = gl3_weight(ell, 0);
    Weight2 lambda = gl2_weight(kappa, w_pi);
    GammaExpr lf = LFactorSpec::rankin_selberg(ell, kappa, 0, w_pi).expand();
    GammaExpr lf_dual = LFactorSpec::rankin_selberg(ell, kappa, 0, -w_pi).expand();
    for (long m = -6; m <= 6; ++m) {
      Rational s(2 * m + 1, 2);
      bool hom = branching_hom(lambda, m, mu).has_value();
      bool no_pole = !lf.has_pole_at(s) && !lf_dual.has_pole_at(Rational(1 - s));
      INFO("ell=", ell, " kappa=", kappa, " m=", m);
      CHECK(hom == no_pole);
    }
  }
}

TEST_CASE("rs zeta integral matches i^(2 kappa - ell) L(s) at (5,3,3/2)") {
  ZetaQuadConfig cfg = test_config();
  RsZetaReport rep = rs_zeta(5, 3, 0, 1, 1, Complex(1.5, 0.0), cfg);
  INFO("rel dev = ", rep.rel_dev, " refine = ", rep.quad_refine);
  CHECK(rep.rel_dev < 1e-6);
  // Claimed ratio is i^(2*3-5) = i.
  CHECK(rep.claimed_ratio == Complex(0.0, 1.0));
  // Golden numeric value (frozen from the first doubled-precision run; the
  // independent oracle is the closed form itself, already checked above).
  CHECK(rep.z_numeric.imag() ==
        doctest::Approx((rep.claimed_ratio * rep.l_value).imag()).epsilon(1e-6));
  // Reflection variant carries (-1)^(w_sigma/2) epsilon(-1).
  CHECK(rep.variant_sign == 1);
  CHECK(rep.z_variant == rep.z_numeric);
  RsZetaReport rep_neg = rs_zeta(5, 3, 0, 1, -1, Complex(1.5, 0.0), cfg);
  CHECK(rep_neg.variant_sign == -1);
}

TEST_CASE("rs zeta convergence threshold enforced") {
  ZetaQuadConfig cfg = test_config();
  CHECK_THROWS_AS(rs_zeta(5, 3, 0, 1, 1, Complex(0.25, 0.0), cfg), std::invalid_argument);
}

TEST_CASE("adjoint pairing matches the closed form at ell = 3") {
  ZetaQuadConfig cfg = test_config();
  AdjointReport rep = adjoint_pairing(3, cfg);
  INFO("rel dev = ", rep.rel_dev);
  CHECK(rep.rel_dev < 1e-4);
  // Target is negative real.
  CHECK(rep.target.imag() == 0.0);
  CHECK(rep.target.real() < 0.0);
  // ell = 3 exact target: -(2/35) pi^-7.
  PiPower t3 = adjoint_target_exact(3);
  CHECK(t3.coeff == GaussianRational(Rational(-2, 35)));
  CHECK(t3.pi_exponent == Rational(-7));
  // target * pi^(2l+1) is rational for ell in {3, 5}.
  CHECK(adjoint_target_exact(5).pi_exponent == Rational(-11));
  CHECK(adjoint_target_exact(5).coeff.is_rational());
}

TEST_CASE("rs membership: exact rationality, vanishing pattern, golden values") {
  for (long m : {-1L, 0L}) {
    for (int eps : {1, -1}) {
      RsMembershipReport rep = rs_cohomology_pairing(5, 3, 0, 1, eps, m, nullptr);
      INFO("m = ", m, " eps = ", eps);
      CHECK(rep.plus_rational_exact);
      CHECK(rep.minus_rational_exact);
      CHECK(rep.vanishing_pattern_ok);
      CHECK(rep.confirmed);
      CHECK(rep.exponent == 3 * m + 8);
    }
  }
  // The exponent difference between consecutive m is exactly 3.
  RsMembershipReport r0 = rs_cohomology_pairing(5, 3, 0, 1, 1, 0, nullptr);
  RsMembershipReport r1 = rs_cohomology_pairing(5, 3, 0, 1, 1, -1, nullptr);
  CHECK(r0.exponent - r1.exponent == 3);
  // Golden frozen value of the nonvanishing class at m = 0, eps = +1.
  CHECK(r0.expected_nonzero_sign == 1);
  CHECK(r0.plus_exact == Rational(-8388608, 893025));
  CHECK(r0.minus_exact == 0);
}

TEST_CASE("adjoint membership: B pi^(2l+1) is a nonzero rational") {
  AdjointMembershipReport r3 = adjoint_cohomology_pairing(3, nullptr);
  CHECK(r3.confirmed);
  CHECK(r3.b_pi_power_exact == Rational(-32));  // 560 * (-2/35)
  AdjointMembershipReport r5 = adjoint_cohomology_pairing(5, nullptr);
  CHECK(r5.confirmed);
  CHECK(r5.b_pi_power_exact != 0);
}

TEST_CASE("cleanup cache") { std::filesystem::remove_all(kCache); }
