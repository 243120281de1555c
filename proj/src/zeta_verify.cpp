#include "zetaverify/zeta_verify.hpp"

#include <cmath>

#include "zetaverify/cohomology.hpp"

namespace zetaverify {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}
}  // namespace

RsZetaReport rs_zeta(long ell, long kappa, long w_sigma, long w_pi, int epsilon, Complex s,
                     const ZetaQuadConfig& cfg) {
  if (ell < kappa || kappa < 2)
    throw std::invalid_argument("rs_zeta: need ell >= kappa >= 2");
  if (w_sigma % 2 != 0 || (kappa - w_pi) % 2 != 0)
    throw std::invalid_argument("rs_zeta: parity violation in central twists");

  RsZetaReport rep;
  rep.ell = ell;
  rep.kappa = kappa;
  rep.w_sigma = w_sigma;
  rep.w_pi = w_pi;
  rep.epsilon = epsilon;
  rep.s = s;

  // Exact central-twist reduction: the w = 0 integral at the shifted point.
  const Complex s_eff = s + 0.5 * static_cast<double>(w_sigma + w_pi);
  if (s_eff.real() <= 0.5 * (kappa + 1) - 1.0 + 1e-12)
    throw std::invalid_argument("rs_zeta: Re(s) below the convergence threshold");

  // One grid per monomial index (i, kappa - i, ell - kappa).
  std::vector<WhittakerGrid> grids;
  for (long i = 0; i <= kappa; ++i) {
    bool cached = false;
    grids.push_back(WhittakerGrid::load_or_build(
        cfg.cache_dir, ell, 0, epsilon, static_cast<int>(i), static_cast<int>(kappa - i),
        static_cast<int>(ell - kappa), cfg.rs_geometry, cfg.contour1, cfg.contour2,
        cfg.interp_order, cfg.jobs, cfg.probe_grids, &cached));
    (cached ? rep.grids_cached : rep.grids_built) += 1;
    if (cfg.probe_grids)
      rep.probe_max_dev = std::max(rep.probe_max_dev, grids.back().self_test().max_rel_dev);
  }

  std::vector<Complex> coeff(kappa + 1);
  for (long i = 0; i <= kappa; ++i)
    coeff[i] = i_pow(kappa - i) * static_cast<double>(mpz_get_ui(binomial(kappa, i).get_mpz_t()));

  // Z = sum_i c_i  II a1^(s+(kappa-3)/2) a2^(2s-1) e^(-2 pi a1) W_i  dxa1 dxa2
  // in log coordinates u = log a.
  const Complex e1 = s_eff + 0.5 * (kappa - 3.0);
  const Complex e2 = 2.0 * s_eff - 1.0;
  auto integrand = [&](double u1, double u2) {
    const double a1 = std::exp(u1), a2 = std::exp(u2);
    Complex w(0, 0);
    for (long i = 0; i <= kappa; ++i) w += coeff[i] * grids[i].interpolate(a1, a2);
    return std::exp(e1 * u1 + e2 * u2 - kTwoPi * a1) * w;
  };
  const GridGeometry& g = cfg.rs_geometry;
  PanelQuadResult q = integrate_panels_2d(integrand, g.u1_min, g.u1_max, g.u2_min, g.u2_max,
                                          cfg.ts_level, cfg.panel_width);

  rep.z_numeric = q.value;
  rep.quad_refine = std::abs(q.value) > 0 ? q.refine_error / std::abs(q.value) : 0.0;
  rep.l_value = l_factor(LFactorSpec::rankin_selberg(ell, kappa, w_sigma, w_pi), s);
  rep.claimed_ratio = i_pow(2 * kappa - ell);
  rep.ratio = rep.z_numeric / rep.l_value;
  rep.abs_dev = std::abs(rep.z_numeric - rep.claimed_ratio * rep.l_value);
  rep.rel_dev = rep.abs_dev / std::abs(rep.claimed_ratio * rep.l_value);
  rep.variant_sign = ((w_sigma / 2) % 2 == 0 ? 1 : -1) * epsilon;
  rep.z_variant = static_cast<double>(rep.variant_sign) * rep.z_numeric;
  return rep;
}

PiPower adjoint_target_exact(long ell) {
  GammaExpr e;
  e.scale(GaussianRational(-4));
  e.mul_R(Rational(1));
  e.mul_C(Rational(ell));
  e.mul_C(Rational(ell + 1));
  e.mul_C(Rational(ell + 1, 2), 2);
  e.mul_R(Rational(2 * ell + 3), -1);
  return e.rational_part(Rational(0));
}

AdjointReport adjoint_pairing(long ell, const ZetaQuadConfig& cfg) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("adjoint_pairing: ell odd >= 3");
  AdjointReport rep;
  rep.ell = ell;

  bool cached = false;
  WhittakerGrid grid = WhittakerGrid::load_or_build(
      cfg.cache_dir, ell, 0, 1, 0, 0, static_cast<int>(ell), cfg.adjoint_geometry, cfg.contour1,
      cfg.contour2, cfg.interp_order, cfg.jobs, cfg.probe_grids, &cached);
  (cached ? rep.grids_cached : rep.grids_built) += 1;
  if (cfg.probe_grids) rep.probe_max_dev = grid.self_test().max_rel_dev;

  // <W, W> = II a1^-1 W(diag(a1 a2, a2, 1))^2 dxa1 dxa2.
  auto integrand = [&](double u1, double u2) {
    Complex w = grid.interpolate(std::exp(u1), std::exp(u2));
    return std::exp(-u1) * w * w;
  };
  const GridGeometry& g = cfg.adjoint_geometry;
  PanelQuadResult q = integrate_panels_2d(integrand, g.u1_min, g.u1_max, g.u2_min, g.u2_max,
                                          cfg.ts_level, cfg.panel_width);
  rep.pairing_numeric = q.value;
  rep.quad_refine = std::abs(q.value) > 0 ? q.refine_error / std::abs(q.value) : 0.0;
  rep.target = adjoint_target_exact(ell).to_complex();
  rep.abs_dev = std::abs(rep.pairing_numeric - rep.target);
  rep.rel_dev = rep.abs_dev / std::abs(rep.target);

  AdjointCombinatorialValue comb = combinatorial_pairing_adjoint(ell, 0);
  rep.b_pi_power_value =
      (comb.value.to_complex() * rep.pairing_numeric).real() * std::pow(M_PI, 2.0 * ell + 1.0);
  return rep;
}

}  // namespace zetaverify
