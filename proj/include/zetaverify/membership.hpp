#pragma once

#include "zetaverify/cohomology.hpp"
#include "zetaverify/zeta_verify.hpp"

namespace zetaverify {

struct RationalCandidate {
  bool ok = false;
  Rational value{0};
  double residual = 0.0;  // |x - p/q| / max(1, |x|)
};

/// Continued-fraction rational reconstruction under a denominator bound.
RationalCandidate rational_reconstruct(double x, long den_bound = 1000000,
                                       double tol = 1e-6);

/// Critical set {m : Hom_GL2(M_(lambda+m)^vee, M_mu) != 0} within |m| <= scan.
std::vector<long> critical_points(long ell, long kappa, long w_sigma, long w_pi,
                                  long scan = 12);

struct RsMembershipReport {
  long ell, kappa, w_sigma, w_pi, m;
  int epsilon;
  long exponent;  // E = 3m + (2 ell + kappa + 3 w_sigma + 3 w_pi)/2

  // The class pairing values <[Sigma]_b, [Pi]^+->_m for both sign classes,
  // computed exactly via the two-term archimedean-factor formula with the
  // closed-form zeta value, and scaled by (2 pi i)^E. The scaled values land
  // in i^(i_power) Q with i_power = kappa mod 2 (exactly determined here and
  // reported; 0 reproduces the plain-rationality normalization).
  Complex pairing_plus{}, pairing_minus{};
  int i_power = 0;
  bool plus_rational_exact = false, minus_rational_exact = false;
  Rational plus_exact{0}, minus_exact{0};  // the rational parts after i^-i_power

  // Numeric cross-check: same assembly with the quadrature zeta value.
  Complex numeric_plus{}, numeric_minus{};
  RationalCandidate plus_reconstructed, minus_reconstructed;

  // Sign-vanishing pattern (Kasten-Schmidt / Sun): the class with
  // sign != (-1)^m epsilon(-1) must vanish.
  int expected_nonzero_sign = 1;
  bool vanishing_pattern_ok = false;

  bool confirmed = false;
};

/// Theorem-level membership check for the Rankin-Selberg cohomology pairing:
/// <[Sigma]_b, [Pi]^pm>_m (2 pi i)^E must be (real) rational. The exact route
/// uses combinatorial_pairing_rs and the closed-form L-value; when `config`
/// is non-null the quadrature pipeline supplies an independent numeric value.
RsMembershipReport rs_cohomology_pairing(long ell, long kappa, long w_sigma, long w_pi,
                                         int epsilon, long m,
                                         const ZetaQuadConfig* config = nullptr);

struct AdjointMembershipReport {
  long ell;
  // B = combinatorial constant x <W,W>; claim: B pi^(2l+1) in Q^x.
  PiPower b_exact{};              // closed-form B
  Rational b_pi_power_exact{0};   // B pi^(2l+1), exact
  double numeric_value = 0;       // numeric B pi^(2l+1)
  RationalCandidate reconstructed;
  bool confirmed = false;
};

AdjointMembershipReport adjoint_cohomology_pairing(long ell,
                                                   const ZetaQuadConfig* config = nullptr);

}  // namespace zetaverify
