#include "zetaverify/quadrature.hpp"

#include <cmath>

namespace zetaverify {

namespace {
constexpr double kHalfPi = 1.5707963267948966192313216916398;
}

TanhSinhRule::TanhSinhRule(int level) : level_(level) {
  if (level < 1 || level > 12) throw std::invalid_argument("TanhSinhRule: level in [1, 12]");
  const double h = 3.2 / static_cast<double>(1 << level);
  const int kmax = static_cast<int>(std::floor(3.2 / h));
  for (int k = -kmax; k <= kmax; ++k) {
    double kh = k * h;
    double s = std::sinh(kh);
    double x = std::tanh(kHalfPi * s);
    double c = std::cosh(kHalfPi * s);
    double w = h * kHalfPi * std::cosh(kh) / (c * c);
    if (w < 1e-300 || 1.0 - std::abs(x) < 1e-17) continue;
    nodes_.push_back(x);
    weights_.push_back(w);
  }
}

PanelQuadResult integrate_panels(const std::function<Complex(double)>& f, double lo, double hi,
                                 int level, double panel_width) {
  TanhSinhRule rule(level);
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel_width)));
  const double pw = (hi - lo) / panels;
  Complex fine(0, 0), coarse(0, 0);
  for (int p = 0; p < panels; ++p) {
    double mid = lo + (p + 0.5) * pw, half = 0.5 * pw;
    for (size_t k = 0; k < rule.nodes().size(); ++k) {
      Complex v = f(mid + half * rule.nodes()[k]) * (rule.weights()[k] * half);
      fine += v;
      // Level-(l-1) rule = every other node of level l with doubled weights.
      if (k % 2 == 0) coarse += 2.0 * v;
    }
  }
  return {fine, std::abs(fine - coarse)};
}

PanelQuadResult integrate_panels_2d(const std::function<Complex(double, double)>& f, double lo1,
                                    double hi1, double lo2, double hi2, int level,
                                    double panel_width) {
  TanhSinhRule rule(level);
  const int p1 = std::max(1, static_cast<int>(std::ceil((hi1 - lo1) / panel_width)));
  const int p2 = std::max(1, static_cast<int>(std::ceil((hi2 - lo2) / panel_width)));
  const double w1 = (hi1 - lo1) / p1, w2 = (hi2 - lo2) / p2;
  const auto& xs = rule.nodes();
  const auto& ws = rule.weights();
  Complex fine(0, 0), coarse(0, 0);
  for (int a = 0; a < p1; ++a) {
    double m1 = lo1 + (a + 0.5) * w1, h1 = 0.5 * w1;
    for (int b = 0; b < p2; ++b) {
      double m2 = lo2 + (b + 0.5) * w2, h2 = 0.5 * w2;
      for (size_t i = 0; i < xs.size(); ++i) {
        const double u1 = m1 + h1 * xs[i];
        const double wi = ws[i] * h1;
        Complex row_f(0, 0), row_c(0, 0);
        for (size_t j = 0; j < xs.size(); ++j) {
          Complex v = f(u1, m2 + h2 * xs[j]) * (ws[j] * h2);
          row_f += v;
          if (j % 2 == 0) row_c += 2.0 * v;
        }
        fine += wi * row_f;
        if (i % 2 == 0) coarse += 2.0 * wi * row_c;
      }
    }
  }
  return {fine, std::abs(fine - coarse)};
}

}  // namespace zetaverify
