// Acceptance suite: one test case per acceptance criterion, each printing a
// PASS/FAIL line with its measured numbers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "zetaverify/cli.hpp"
#include "zetaverify/membership.hpp"
#include "zetaverify/satake.hpp"

using namespace zetaverify;

namespace {

const char* kCache = "zv-acceptance-cache";

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int criterion, bool passed, const std::string& detail) {
  std::printf("criterion %2d: %s  (%s)\n", criterion, passed ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

ZetaQuadConfig config() {
  ZetaQuadConfig cfg;
  cfg.cache_dir = kCache;
  cfg.jobs = 2;
  return cfg;
}

}  // namespace

TEST_CASE("criterion 1: Barnes lemmas, 20 random tuples, 1e-8, <= 30 s") {
  Stopwatch sw;
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> re(0.5, 3.0), im(-1.0, 1.0);
  ContourSpec spec;
  spec.height = 40.0;
  spec.nodes = 1600;
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    Complex a(re(rng), im(rng)), b(re(rng), im(rng)), c(re(rng), im(rng)), d(re(rng), im(rng)),
        e(re(rng), im(rng));
    spec.abscissa = barnes_first_abscissa(a, b, c, d);
    auto f1 = [&](Complex s) {
      return std::exp(log_gamma_R(s + a) + log_gamma_R(s + b) + log_gamma_R(-s + c) +
                      log_gamma_R(-s + d));
    };
    worst = std::max(worst, std::abs(contour_integral(f1, spec).value -
                                     barnes_first(a, b, c, d)) /
                                std::abs(barnes_first(a, b, c, d)));
    spec.abscissa = barnes_second_abscissa(a, b, c, d, e);
    auto f2 = [&](Complex s) {
      return std::exp(log_gamma_R(s + a) + log_gamma_R(s + b) + log_gamma_R(s + c) +
                      log_gamma_R(-s + d) + log_gamma_R(-s + e) -
                      log_gamma_R(s + a + b + c + d + e));
    };
    worst = std::max(worst, std::abs(contour_integral(f2, spec).value -
                                     barnes_second(a, b, c, d, e)) /
                                std::abs(barnes_second(a, b, c, d, e)));
  }
  double secs = sw.seconds();
  bool pass = worst <= 1e-8 && secs <= 30.0;
  report(1, pass, "worst rel dev " + std::to_string(worst) + ", " + std::to_string(secs) + " s");
  CHECK(worst <= 1e-8);
  CHECK(secs <= 30.0);
}

TEST_CASE("criterion 2: exact representation suite, zero tolerance, <= 60 s") {
  Stopwatch sw;
  bool ok = true;
  std::string what = "all exact";

  // Minimal-K-type ladder relations for ell <= 9.
  for (long ell = 1; ell <= 9 && ok; ell += 2) {
    const SO3Module& mod = cached_so3_module(ell);
    ExactMatrix e12 = mod.lie_action(lie::E12());
    ExactMatrix ep = mod.lie_action(lie::E_plus());
    ExactMatrix em = mod.lie_action(lie::E_minus());
    for (long i = -ell; i <= ell && ok; ++i) {
      ExactVector v(mod.dim());
      v[i + ell] = GaussianRational(1);
      if (e12.apply(v) != scaled(v, GaussianRational(Rational(0), Rational(i)))) ok = false;
      ExactVector up(mod.dim()), dn(mod.dim());
      if (i + 1 <= ell) up[i + 1 + ell] = GaussianRational(ell - i);
      if (i - 1 >= -ell) dn[i - 1 + ell] = GaussianRational(-ell - i);
      if (ep.apply(v) != up || em.apply(v) != dn) ok = false;
    }
    if (!ok) what = "so3 ladder failed at ell=" + std::to_string(ell);
  }

  // Adjoint ladder on the X basis.
  if (ok) {
    ExactMatrix want12(5, 5), wantp(5, 5), wantm(5, 5);
    for (int i = -2; i <= 2; ++i) {
      want12.at(lie::x_index(i), lie::x_index(i)) = GaussianRational(Rational(0), Rational(i));
      if (i + 1 <= 2) wantp.at(lie::x_index(i + 1), lie::x_index(i)) = GaussianRational(2 - i);
      if (i - 1 >= -2) wantm.at(lie::x_index(i - 1), lie::x_index(i)) = GaussianRational(-2 - i);
    }
    ok = gl3_quotient().ad_p(lie::E12()) == want12 &&
         gl3_quotient().ad_p(lie::E_plus()) == wantp &&
         gl3_quotient().ad_p(lie::E_minus()) == wantm;
    if (!ok) what = "quotient adjoint ladder failed";
  }

  // Invariant vector annihilated exactly (throws on failure).
  if (ok) {
    try {
      for (long ell = 1; ell <= 9; ell += 2) so3_invariant_vector(ell);
    } catch (const std::exception& e) {
      ok = false;
      what = e.what();
    }
  }

  // Class-rewriting relation for (3,0), (5,0), (5,2), both degrees.
  if (ok) {
    for (auto [l, w] : std::vector<std::pair<long, long>>{{3, 0}, {5, 0}, {5, 2}})
      for (int d : {2, 3})
        if (relation_violation(l, w, d)) {
          ok = false;
          what = "relation failed at (" + std::to_string(l) + "," + std::to_string(w) + ")";
        }
  }

  // Conjugated-ladder rationality for mu from ell in {3, 5, 7}.
  if (ok) {
    for (long ell : {3L, 5L, 7L}) {
      Weight3 mu = gl3_weight(ell, 0);
      if (!rationality_check_ad(mu, +1).is_rational ||
          !rationality_check_ad(mu, -1).is_rational) {
        ok = false;
        what = "rationality failed at ell=" + std::to_string(ell);
      }
    }
  }

  // GL2 duality constants for kappa in {2..6} and the 8i wedge coefficient.
  if (ok) {
    for (long k = 2; k <= 6; ++k) {
      auto pc = poincare_constants_gl2(k, k % 2);
      if (!pc.identity_holds || pc.wedge_coeff != GaussianRational(Rational(0), Rational(8))) {
        ok = false;
        what = "gl2 duality constant failed at kappa=" + std::to_string(k);
      }
    }
  }

  double secs = sw.seconds();
  bool pass = ok && secs <= 60.0;
  report(2, pass, what + ", " + std::to_string(secs) + " s");
  CHECK(ok);
  CHECK(secs <= 60.0);
}

TEST_CASE("criterion 3: pairing anchors, exact") {
  auto mono2 = [](int i, int j) {
    WedgeCochain w(5, 2, 1);
    w.add({lie::x_index(i), lie::x_index(j)}, {GaussianRational(1)});
    return w;
  };
  WedgeCochain m3(5, 3, 1);
  m3.add({lie::x_index(0), lie::x_index(-1), lie::x_index(-2)}, {GaussianRational(1)});
  WedgeCochain yp(2, 1, 1), ym(2, 1, 1);
  yp.add({0}, {GaussianRational(1)});
  ym.add({1}, {GaussianRational(1)});

  bool a = pairing_s(mono2(0, -2), yp) == GaussianRational(8);
  bool b = pairing_s(mono2(0, 2), ym) == GaussianRational(-8);
  bool c = pairing_s5(m3, mono2(1, 2)) == GaussianRational(Rational(0), Rational(-4));
  report(3, a && b && c, "s = 8 / -8, s5 = -4i, all exact");
  CHECK(a);
  CHECK(b);
  CHECK(c);
}

TEST_CASE("criterion 4: rs zeta ratios at 1e-6 plus abscissa independence at 1e-8") {
  Stopwatch cold;
  ZetaQuadConfig cfg = config();
  double worst = 0.0;
  for (auto [ell, kappa, s] :
       std::vector<std::tuple<long, long, double>>{{5, 3, 1.5}, {7, 3, 2.5}, {7, 5, 1.5}}) {
    RsZetaReport rep = rs_zeta(ell, kappa, 0, kappa % 2, 1, Complex(s, 0.0), cfg);
    worst = std::max(worst, rep.rel_dev);
    CHECK(rep.rel_dev <= 1e-6);
  }
  double cold_secs = cold.seconds();

  // Contour-abscissa independence at (5,3,3/2).
  ZetaQuadConfig cfg2 = cfg;
  cfg2.contour1.abscissa = cfg2.contour2.abscissa = 1.25;
  RsZetaReport r1 = rs_zeta(5, 3, 0, 1, 1, Complex(1.5, 0.0), cfg);
  RsZetaReport r2 = rs_zeta(5, 3, 0, 1, 1, Complex(1.5, 0.0), cfg2);
  double ind = std::abs(r1.z_numeric - r2.z_numeric) / std::abs(r1.z_numeric);
  CHECK(ind <= 1e-8);

  // Warm rerun must be fast (grids cached).
  Stopwatch warm;
  rs_zeta(5, 3, 0, 1, 1, Complex(1.5, 0.0), cfg);
  rs_zeta(7, 3, 0, 1, 1, Complex(2.5, 0.0), cfg);
  rs_zeta(7, 5, 0, 1, 1, Complex(1.5, 0.0), cfg);
  double warm_secs = warm.seconds();

  bool pass = worst <= 1e-6 && ind <= 1e-8 && cold_secs <= 300.0 && warm_secs <= 30.0;
  report(4, pass,
         "worst rel dev " + std::to_string(worst) + ", independence " + std::to_string(ind) +
             ", cold " + std::to_string(cold_secs) + " s, warm " + std::to_string(warm_secs) +
             " s");
  CHECK(cold_secs <= 300.0);
  CHECK(warm_secs <= 30.0);
}

TEST_CASE("criterion 5: adjoint pairing at 1e-4 for ell in {3, 5}, <= 10 min cold") {
  Stopwatch sw;
  ZetaQuadConfig cfg = config();
  double worst = 0.0;
  for (long ell : {3L, 5L}) {
    AdjointReport rep = adjoint_pairing(ell, cfg);
    worst = std::max(worst, rep.rel_dev);
    CHECK(rep.rel_dev <= 1e-4);
  }
  double secs = sw.seconds();
  bool pass = worst <= 1e-4 && secs <= 600.0;
  report(5, pass, "worst rel dev " + std::to_string(worst) + ", " + std::to_string(secs) + " s");
  CHECK(secs <= 600.0);
}

TEST_CASE("criterion 6: Rankin-Selberg membership and the sign-vanishing pattern") {
  ZetaQuadConfig cfg = config();
  bool all = true;
  std::ostringstream detail;
  for (long m : critical_points(5, 3, 0, 1)) {
    for (int eps : {1, -1}) {
      RsMembershipReport rep = rs_cohomology_pairing(5, 3, 0, 1, eps, m, &cfg);
      // Reconstruction of the nonvanishing class value.
      const RationalCandidate& nz =
          rep.expected_nonzero_sign > 0 ? rep.plus_reconstructed : rep.minus_reconstructed;
      const Complex& wrong =
          rep.expected_nonzero_sign > 0 ? rep.numeric_minus : rep.numeric_plus;
      const Complex& right =
          rep.expected_nonzero_sign > 0 ? rep.numeric_plus : rep.numeric_minus;
      bool vanish_numeric = std::abs(wrong) <= 1e-8 * std::abs(right);
      bool okay = rep.confirmed && nz.ok && nz.residual < 1e-6 && vanish_numeric &&
                  rep.vanishing_pattern_ok;
      if (!okay) all = false;
      detail << "m=" << m << (eps > 0 ? "+" : "-") << (okay ? " ok" : " FAIL") << " ";
    }
  }
  report(6, all, detail.str());
  CHECK(all);
}

TEST_CASE("criterion 7: adjoint membership, B pi^(2l+1) rational and nonzero") {
  ZetaQuadConfig cfg = config();
  bool all = true;
  std::ostringstream detail;
  for (long ell : {3L, 5L}) {
    AdjointMembershipReport rep = adjoint_cohomology_pairing(ell, &cfg);
    bool okay = rep.confirmed && rep.reconstructed.ok && rep.b_pi_power_exact != 0 &&
                rep.reconstructed.value == rep.b_pi_power_exact;
    if (!okay) all = false;
    detail << "ell=" << ell << " B pi^(2l+1)=" << to_string(rep.b_pi_power_exact)
           << (okay ? " ok " : " FAIL ");
  }
  report(7, all, detail.str());
  CHECK(all);
}

TEST_CASE("criterion 8: criticality equivalence for |m| <= 6, exact") {
  bool all = true;
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
      if (hom != no_pole) all = false;
      CHECK(hom == no_pole);
    }
  }
  report(8, all, "branching Hom nonzero iff both gamma factors pole-free");
}

TEST_CASE("criterion 9: Euler factorizations with negative controls") {
  FactorizationCheck a = check_factorization("sym2_x_sym2");
  FactorizationCheck b = check_factorization("triple_product");
  FactorizationCheck na = check_factorization("sym2_x_sym2", true);
  FactorizationCheck nb = check_factorization("triple_product", true);
  bool pass = a.equal && a.symmetric_functions_equal && b.equal &&
              b.symmetric_functions_equal && !na.equal && !nb.equal;
  report(9, pass, "sym2_x_sym2 and triple_product exact; perturbations detected");
  CHECK(pass);
}

TEST_CASE("criterion 10: byte-identical JSON reports across consecutive runs") {
  // The full scripted sequence twice (warm: grids are already cached) and
  // compare the report subtrees byte for byte; the timestamp lives in the
  // envelope, outside the comparison.
  auto run_suite = [&]() {
    std::vector<std::string> reports;
    std::ostringstream sink, err;
    std::vector<std::vector<std::string>> commands = {
        {"verify", "rep", "--max-ell", "5"},
        {"verify", "barnes", "--count", "5"},
        {"verify", "factorization", "--id", "sym2_x_sym2"},
        {"verify", "factorization", "--id", "triple_product"},
        {"verify", "rs-zeta", "--ell", "5", "--kappa", "3", "--s", "1.5", "--cache-dir",
         kCache},
        {"verify", "adjoint", "--ell", "3", "--cache-dir", kCache},
        {"verify", "membership", "--id", "rs", "--ell", "5", "--kappa", "3", "--w-pi", "1"},
        {"verify", "membership", "--id", "adjoint", "--ell", "3"},
    };
    for (const auto& cmd : commands) {
      int code = cli::run(cmd, sink, err);
      CHECK(code == 0);
      reports.push_back(cli::last_report_json());
    }
    return reports;
  };
  auto first = run_suite();
  auto second = run_suite();
  bool identical = first == second;
  report(10, identical, "two consecutive full-suite runs compared");
  CHECK(identical);
}
