#pragma once

#include <string>

#include "zetaverify/gamma_expr.hpp"
#include "zetaverify/grid.hpp"
#include "zetaverify/quadrature.hpp"

namespace zetaverify {

/// Precision knobs of the numeric zeta-integral pipeline. Defaults reproduce
/// the acceptance-criteria numbers.
struct ZetaQuadConfig {
  ContourSpec contour1{}, contour2{};
  GridGeometry rs_geometry{};                                // [e-5, e4]^2, 120 x 120
  GridGeometry adjoint_geometry{280, 120, -16.0, 4.0, -5.0, 4.0};
  int interp_order = 7;
  int ts_level = 6;
  double panel_width = 1.5;
  int jobs = 2;
  std::string cache_dir;
  bool probe_grids = false;
};

struct RsZetaReport {
  long ell = 0, kappa = 0, w_sigma = 0, w_pi = 0;
  int epsilon = 1;
  Complex s{};
  Complex z_numeric{};        // torus-reduced double integral
  Complex l_value{};          // L(s, Sigma_v x Pi_v)
  Complex ratio{};            // z / l
  Complex claimed_ratio{};    // i^(2 kappa - ell)
  double abs_dev = 0, rel_dev = 0;
  Complex z_variant{};        // Z(W_(l;-kappa), W^+) via the reflection sign
  int variant_sign = 1;       // (-1)^(w_sigma/2) epsilon(-1)
  // Diagnostics
  double quad_refine = 0;     // tanh-sinh level-refinement delta (relative)
  int grids_cached = 0, grids_built = 0;
  double probe_max_dev = -1;  // worst probe deviation when probing was on
  bool passed(double tol = 1e-6) const { return rel_dev <= tol; }
};

/// Lemma-level verification of the Rankin-Selberg zeta integral: the numeric
/// torus-reduced integral against i^(2 kappa - ell) L(s). Central twists
/// w_sigma, w_pi enter through the exact shift s -> s + (w_sigma + w_pi)/2 of
/// the w = 0 integral; the grids are built at w = 0.
RsZetaReport rs_zeta(long ell, long kappa, long w_sigma, long w_pi, int epsilon, Complex s,
                     const ZetaQuadConfig& config);

struct AdjointReport {
  long ell = 0;
  Complex pairing_numeric{};   // <W_(l;0), W_(l;0)>
  Complex target{};            // -4 G_R(1) G_C(l) G_C(l+1) G_C((l+1)/2)^2 / G_R(2l+3)
  double abs_dev = 0, rel_dev = 0;
  double quad_refine = 0;
  int grids_cached = 0, grids_built = 0;
  double probe_max_dev = -1;
  // B pi^(2l+1) candidate, B = combinatorial constant x numeric pairing.
  double b_pi_power_value = 0;
  bool passed(double tol = 1e-4) const { return rel_dev <= tol; }
};

/// Lemma-level verification of the adjoint archimedean pairing at w = 0.
AdjointReport adjoint_pairing(long ell, const ZetaQuadConfig& config);

/// Closed-form adjoint target as an exact pi-power.
PiPower adjoint_target_exact(long ell);

}  // namespace zetaverify
