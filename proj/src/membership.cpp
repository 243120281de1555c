#include "zetaverify/membership.hpp"

#include <cmath>

namespace zetaverify {

RationalCandidate rational_reconstruct(double x, long den_bound, double tol) {
  RationalCandidate out;
  if (!std::isfinite(x)) return out;
  // Continued-fraction convergents p_k/q_k until the denominator bound.
  double v = x;
  BigInt p0(1), q0(0);  // p_{-1}, q_{-1}
  BigInt p1, q1(1);     // p_0 = floor(x), q_0 = 1
  double fl = std::floor(v);
  p1 = static_cast<long>(fl);
  BigInt best_p = p1, best_q = q1;
  for (int it = 0; it < 64; ++it) {
    double frac = v - std::floor(v);
    if (frac < 1e-15) break;
    v = 1.0 / frac;
    if (!std::isfinite(v) || v > 1e18) break;
    BigInt a(static_cast<long>(std::floor(v)));
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > den_bound) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    best_p = p1;
    best_q = q1;
  }
  Rational r(best_p, best_q);
  r.canonicalize();
  out.value = r;
  out.residual = std::abs(x - to_double(r)) / std::max(1.0, std::abs(x));
  out.ok = out.residual < tol && mpz_cmp_si(r.get_den().get_mpz_t(), den_bound) <= 0;
  return out;
}

std::vector<long> critical_points(long ell, long kappa, long w_sigma, long w_pi, long scan) {
  const Weight3 mu = gl3_weight(ell, w_sigma);
  const Weight2 lambda = gl2_weight(kappa, w_pi);
  std::vector<long> out;
  for (long m = -scan; m <= scan; ++m)
    if (branching_nonzero_oracle(lambda, m, mu)) out.push_back(m);
  return out;
}

namespace {

Complex cpow_2pii(long e) {
  // (2 pi i)^e as a complex double (exact bookkeeping happens separately).
  Complex base(0.0, 2.0 * M_PI);
  Complex acc(1.0, 0.0);
  long n = std::labs(e);
  for (long k = 0; k < n; ++k) acc *= base;
  return e >= 0 ? acc : 1.0 / acc;
}

}  // namespace

RsMembershipReport rs_cohomology_pairing(long ell, long kappa, long w_sigma, long w_pi,
                                         int epsilon, long m, const ZetaQuadConfig* config) {
  if (ell <= kappa) throw std::invalid_argument("rs_cohomology_pairing: need ell > kappa");
  RsMembershipReport rep{};
  rep.ell = ell;
  rep.kappa = kappa;
  rep.w_sigma = w_sigma;
  rep.w_pi = w_pi;
  rep.m = m;
  rep.epsilon = epsilon;
  rep.exponent = 3 * m + (2 * ell + kappa + 3 * w_sigma + 3 * w_pi) / 2;

  // Exact non-zeta factors of the two-term archimedean-factor formula.
  RsCombinatorialValue t_plus = combinatorial_pairing_rs(ell, kappa, w_sigma, w_pi, m, +1);
  RsCombinatorialValue t_minus = combinatorial_pairing_rs(ell, kappa, w_sigma, w_pi, m, -1);

  // Closed-form zeta value Z(W_(l;kappa), W^-) = i^(2k-l) L(m + 1/2).
  GammaExpr lf = LFactorSpec::rankin_selberg(ell, kappa, w_sigma, w_pi).expand();
  const Rational s_crit(2 * m + 1, 2);
  if (lf.has_pole_at(s_crit))
    throw std::invalid_argument("rs_cohomology_pairing: L-factor pole at the requested m");
  PiPower l_exact = lf.rational_part(s_crit);
  PiPower zc(l_exact.coeff * GaussianRational::i_pow(2 * kappa - ell), l_exact.pi_exponent);

  const GaussianRational inv_fact =
      GaussianRational(1) / GaussianRational(Rational(factorial(ell - kappa)));
  // First term: i^(w_sigma/2) Z(W_(l;-kappa), W^+) T_+ with the reflection
  // sign Z(W_(l;-kappa), W^+) = (-1)^(w_sigma/2) eps(-1) Zc.
  GaussianRational coef_plus = GaussianRational::i_pow(w_sigma / 2) *
                               GaussianRational::i_pow(w_sigma) *  // (-1)^(w_sigma/2)
                               GaussianRational(epsilon) * inv_fact * t_plus.value;
  // Second term: (-1)^(kappa + w_sigma/2) i^(w_sigma/2 + w_pi) Zc T_-.
  GaussianRational coef_minus = GaussianRational::i_pow(2 * kappa + w_sigma) *
                                GaussianRational::i_pow(w_sigma / 2 + w_pi) * inv_fact *
                                t_minus.value;

  // (2 pi i)^E Zc = 2^E i^E (pi^E Zc-pi-part) coeff; the pi power must cancel.
  if (l_exact.pi_exponent + rep.exponent != 0)
    throw std::logic_error("rs_cohomology_pairing: pi exponent mismatch against (2 pi i)^E");
  GaussianRational scale = GaussianRational(pow(Rational(2), rep.exponent)) *
                           GaussianRational::i_pow(rep.exponent) * zc.coeff;

  GaussianRational value_plus = scale * (coef_plus + coef_minus);
  GaussianRational value_minus = scale * (coef_plus - coef_minus);
  rep.pairing_plus = value_plus.to_complex();
  rep.pairing_minus = value_minus.to_complex();
  // The scaled pairings land in i^(kappa mod 2) Q; divide the unit out and
  // require exact rationality of what remains.
  rep.i_power = static_cast<int>(((kappa % 2) + 2) % 2);
  GaussianRational unit = GaussianRational::i_pow(-rep.i_power);
  GaussianRational plus_red = value_plus * unit, minus_red = value_minus * unit;
  rep.plus_rational_exact = plus_red.is_rational();
  rep.minus_rational_exact = minus_red.is_rational();
  if (rep.plus_rational_exact) rep.plus_exact = plus_red.re;
  if (rep.minus_rational_exact) rep.minus_exact = minus_red.re;

  rep.expected_nonzero_sign = ((m % 2 + 2) % 2 == 0 ? 1 : -1) * epsilon;
  const GaussianRational& expected_zero =
      rep.expected_nonzero_sign > 0 ? value_minus : value_plus;
  const GaussianRational& expected_nonzero =
      rep.expected_nonzero_sign > 0 ? value_plus : value_minus;
  rep.vanishing_pattern_ok = expected_zero.is_zero() && !expected_nonzero.is_zero();

  if (config) {
    // Numeric cross-check with the quadrature zeta value.
    RsZetaReport zrep =
        rs_zeta(ell, kappa, w_sigma, w_pi, epsilon, Complex(to_double(s_crit), 0.0), *config);
    Complex z_num = zrep.z_numeric;
    Complex cp = GaussianRational(GaussianRational::i_pow(w_sigma / 2) *
                                  GaussianRational::i_pow(w_sigma) * GaussianRational(epsilon) *
                                  inv_fact * t_plus.value)
                     .to_complex() *
                 z_num;
    Complex cm = GaussianRational(GaussianRational::i_pow(2 * kappa + w_sigma) *
                                  GaussianRational::i_pow(w_sigma / 2 + w_pi) * inv_fact *
                                  t_minus.value)
                     .to_complex() *
                 z_num;
    Complex sc = cpow_2pii(rep.exponent);
    if (rep.i_power == 1) sc *= Complex(0.0, -1.0);  // divide the i^(kappa mod 2) unit out
    rep.numeric_plus = sc * (cp + cm);
    rep.numeric_minus = sc * (cp - cm);
    rep.plus_reconstructed = rational_reconstruct(rep.numeric_plus.real());
    rep.minus_reconstructed = rational_reconstruct(rep.numeric_minus.real());
    rep.confirmed = rep.plus_rational_exact && rep.minus_rational_exact &&
                    rep.vanishing_pattern_ok && rep.plus_reconstructed.ok &&
                    rep.minus_reconstructed.ok;
  } else {
    rep.plus_reconstructed = rational_reconstruct(to_double(rep.plus_exact));
    rep.minus_reconstructed = rational_reconstruct(to_double(rep.minus_exact));
    rep.confirmed =
        rep.plus_rational_exact && rep.minus_rational_exact && rep.vanishing_pattern_ok;
  }
  return rep;
}

AdjointMembershipReport adjoint_cohomology_pairing(long ell, const ZetaQuadConfig* config) {
  AdjointMembershipReport rep{};
  rep.ell = ell;
  AdjointCombinatorialValue comb = combinatorial_pairing_adjoint(ell, 0);
  PiPower target = adjoint_target_exact(ell);
  rep.b_exact = PiPower(comb.value * target.coeff, target.pi_exponent);
  if (rep.b_exact.pi_exponent != Rational(-(2 * ell + 1)))
    throw std::logic_error("adjoint_cohomology_pairing: pi exponent differs from -(2l+1)");
  if (!rep.b_exact.coeff.is_rational())
    throw std::logic_error("adjoint_cohomology_pairing: non-real exact value");
  rep.b_pi_power_exact = rep.b_exact.coeff.re;

  if (config) {
    AdjointReport arep = adjoint_pairing(ell, *config);
    rep.numeric_value = arep.b_pi_power_value;
  } else {
    rep.numeric_value = to_double(rep.b_pi_power_exact);
  }
  rep.reconstructed = rational_reconstruct(rep.numeric_value);
  rep.confirmed = rep.reconstructed.ok && rep.b_pi_power_exact != 0 &&
                  rep.reconstructed.value == rep.b_pi_power_exact;
  return rep;
}

}  // namespace zetaverify
