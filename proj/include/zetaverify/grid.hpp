#pragma once

#include <cstdint>
#include <string>

#include "zetaverify/whittaker.hpp"

namespace zetaverify {

struct GridGeometry {
  int n1 = 120, n2 = 120;
  double u1_min = -5.0, u1_max = 4.0;  // log a1 window
  double u2_min = -5.0, u2_max = 4.0;  // log a2 window
};

struct GridProbeReport {
  int probes = 0;
  double max_rel_dev = 0.0;
  bool passed = false;
};

/// Cached torus values of one GL3 Whittaker function on a log-uniform grid.
/// Values are reproducible bit-for-bit from (spec, contours, geometry);
/// the cache file round-trips exactly. Interpolation runs on the detrended
/// log magnitude (log|W| + 2 pi (a1+a2)) with tensor Lagrange stencils of
/// the configured order, falling back to plain-value stencils wherever the
/// sign pattern or an underflow makes the log unusable.
class WhittakerGrid {
 public:
  static WhittakerGrid build(long ell, long w, int epsilon, int j1, int j2, int j3,
                             const GridGeometry& geom, const ContourSpec& base1,
                             const ContourSpec& base2, int interp_order = 7, int jobs = 1);

  long ell() const { return ell_; }
  long w() const { return w_; }
  int j1() const { return j1_; }
  int j2() const { return j2_; }
  int j3() const { return j3_; }
  const GridGeometry& geometry() const { return geom_; }
  const ContourSpec& contour1() const { return base1_; }
  const ContourSpec& contour2() const { return base2_; }
  int interp_order() const { return interp_order_; }

  Complex value_at_node(int i, int j) const { return values_[static_cast<size_t>(i) * geom_.n2 + j]; }

  /// Interpolated W(diag(a1 a2, a2, 1)); (a1, a2) must lie in the window.
  Complex interpolate(double a1, double a2) const;

  /// Compare interpolation against direct (adaptive-contour) evaluation on
  /// deterministic pseudo-random probe points.
  GridProbeReport self_test(int probes = 50, double tol = 1e-8) const;

  void save(const std::string& path) const;
  static WhittakerGrid load(const std::string& path);

  /// Deterministic cache file name for the given parameters.
  static std::string cache_name(long ell, long w, int epsilon, int j1, int j2, int j3,
                                const GridGeometry& geom, const ContourSpec& base1,
                                const ContourSpec& base2, int interp_order);

  /// Load from cache when an exactly matching file exists, else build and
  /// save. Runs the probe self-test on freshly built grids when `probe` is
  /// true and throws if it fails (the grid is rejected, not cached).
  static WhittakerGrid load_or_build(const std::string& cache_dir, long ell, long w, int epsilon,
                                     int j1, int j2, int j3, const GridGeometry& geom,
                                     const ContourSpec& base1, const ContourSpec& base2,
                                     int interp_order = 7, int jobs = 1, bool probe = false,
                                     bool* was_cached = nullptr);

 private:
  WhittakerGrid() = default;
  void derive_log_tables();
  /// Smooth log-magnitude envelope used to detrend the stored values for
  /// interpolation: the integrand's real-axis log magnitude along a smooth
  /// approximate-saddle abscissa field (Stirling fixed point, then exact
  /// log-gammas). Identical at build time and query time.
  double trend(double a1, double a2) const;

  long ell_ = 0, w_ = 0;
  int epsilon_ = 1;
  int j1_ = 0, j2_ = 0, j3_ = 0;
  GridGeometry geom_;
  ContourSpec base1_, base2_;
  int interp_order_ = 7;
  std::vector<Complex> values_;  // row-major, a1 index major

  // Derived, not serialized.
  std::vector<double> logmag_;  // log |G|, G = W * i^-(j1-j3),  -inf when 0
  std::vector<int8_t> sign_;    // sign of Re G
};

}  // namespace zetaverify
