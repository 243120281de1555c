#pragma once

#include <functional>
#include <vector>

#include "zetaverify/gammafn.hpp"

namespace zetaverify {

/// Tanh-sinh (double exponential) quadrature rule on [-1, 1] at a dyadic
/// level: nodes t_k = tanh(pi/2 sinh(k h)), h = 2^-level * 3.2.
class TanhSinhRule {
 public:
  explicit TanhSinhRule(int level);
  int level() const { return level_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  /// Index stride selecting the nodes of the (level-1) rule.
  static constexpr int kCoarseStride = 2;

 private:
  int level_;
  std::vector<double> nodes_, weights_;
};

struct PanelQuadResult {
  Complex value;
  double refine_error;  // |I_level - I_(level-1)|
};

/// Composite tanh-sinh panels over [lo, hi], panels of width <= panel_width.
PanelQuadResult integrate_panels(const std::function<Complex(double)>& f, double lo, double hi,
                                 int level, double panel_width = 1.5);

/// Tensor-product version for smooth 2D integrands on a rectangle.
PanelQuadResult integrate_panels_2d(const std::function<Complex(double, double)>& f,
                                    double lo1, double hi1, double lo2, double hi2, int level,
                                    double panel_width = 1.5);

}  // namespace zetaverify
