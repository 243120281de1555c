#include "zetaverify/contour.hpp"

#include <cmath>
#include <vector>

namespace zetaverify {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
constexpr double kGlNode[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                               0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeight[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                 0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
}  // namespace

ContourResult contour_integral(const std::function<Complex(Complex)>& f,
                               const ContourSpec& spec, double tail_tolerance) {
  const double c = spec.abscissa, T = spec.height;
  ContourResult out{};

  if (spec.rule == ContourSpec::Trapezoid) {
    const int n = spec.nodes;
    const double h = 2.0 * T / n;
    std::vector<Complex> vals(n + 1);
    double peak = 0.0;
    for (int k = 0; k <= n; ++k) {
      vals[k] = f(Complex(c, -T + k * h));
      peak = std::max(peak, std::abs(vals[k]));
    }
    Complex full = 0.5 * (vals[0] + vals[n]);
    for (int k = 1; k < n; ++k) full += vals[k];
    full *= h / (2.0 * kPi);
    Complex half = 0.5 * (vals[0] + vals[n]);
    for (int k = 2; k < n; k += 2) half += vals[k];
    half *= 2.0 * h / (2.0 * kPi);

    out.value = full;
    out.tail_bound = peak > 0 ? std::max(std::abs(vals[0]), std::abs(vals[n])) / peak : 0.0;
    out.refine_error = std::abs(full - half);
    if (out.tail_bound > tail_tolerance)
      throw TruncationError("contour_integral: truncation insufficient (endpoint/peak = " +
                            std::to_string(out.tail_bound) + ")");
    return out;
  }

  // Gauss-Legendre panels of width ~2 on [-T, T].
  const int panels = std::max(2, static_cast<int>(std::ceil(T)));
  const double pw = 2.0 * T / panels;
  Complex total(0.0, 0.0);
  double peak = 0.0, endmag = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = -T + p * pw, mid = lo + 0.5 * pw, half = 0.5 * pw;
    Complex acc(0.0, 0.0);
    for (int k = 0; k < 8; ++k) {
      Complex fp = f(Complex(c, mid + half * kGlNode[k]));
      Complex fm = f(Complex(c, mid - half * kGlNode[k]));
      acc += kGlWeight[k] * (fp + fm);
      peak = std::max({peak, std::abs(fp), std::abs(fm)});
      if (p == 0 || p == panels - 1) endmag = std::max(endmag, std::abs(fm));
    }
    total += acc * half;
  }
  out.value = total / (2.0 * kPi);
  out.tail_bound = peak > 0 ? endmag / peak : 0.0;
  out.refine_error = 0.0;
  if (out.tail_bound > tail_tolerance)
    throw TruncationError("contour_integral: truncation insufficient");
  return out;
}

}  // namespace zetaverify
