#pragma once

#include <functional>
#include <stdexcept>

#include "zetaverify/gammafn.hpp"

namespace zetaverify {

struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& w) : std::runtime_error(w) {}
};

/// A vertical integration path Re s = abscissa, |Im s| <= height, with the
/// node count and rule. pole_margin is the minimum allowed distance between
/// the abscissa and any integrand pole.
struct ContourSpec {
  double abscissa = 1.0;
  double height = 60.0;
  int nodes = 2400;
  enum Rule { Trapezoid, GaussLegendrePanels } rule = Trapezoid;
  double pole_margin = 0.25;
};

struct ContourResult {
  Complex value;        // int f(c+it) dt / (2 pi)
  double tail_bound;    // endpoint |f| relative to the node maximum
  double refine_error;  // |I_N - I_{N/2}| (trapezoid) or panel-split delta
};

/// Integrate f along the vertical line of `spec` against dt/(2 pi). Throws
/// TruncationError when the endpoint magnitude check fails (integrand not
/// decayed at +-T).
ContourResult contour_integral(const std::function<Complex(Complex)>& f,
                               const ContourSpec& spec, double tail_tolerance = 1e-10);

}  // namespace zetaverify
