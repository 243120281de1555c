#pragma once

#include <optional>
#include <vector>

#include "zetaverify/contour.hpp"
#include "zetaverify/rational.hpp"

namespace zetaverify {

/// Parameters selecting an archimedean Whittaker function.
struct WhittakerSpec {
  enum Group { GL3, GL2 } group = GL3;
  // GL3: ell odd >= 3, w even, epsilon = +-1; index either a monomial triple
  // (j1,j2,j3) with j1+j2+j3 = ell, or a minimal-K-type index |i| <= ell.
  long ell = 5;
  long w = 0;
  int epsilon = 1;
  bool monomial_index = true;
  int j1 = 0, j2 = 0, j3 = 0;
  long k_index = 0;
  // GL2: kappa >= 2, w with kappa = w mod 2, sign = +-1.
  long kappa = 3;
  int sign = 1;

  void validate() const;
};

/// GL2 closed form at diag(a, 1): |a|^((kappa+w)/2) e^(-2 pi |a|) 1_{R+}(sign*a).
double whittaker_gl2(long kappa, long w, int sign, double a);

struct EvalDiagnostics {
  double c1 = 0, c2 = 0;   // abscissae used
  double t1 = 0, t2 = 0;   // truncation heights
  int n1 = 0, n2 = 0;      // node counts
  double tail = 0;         // worst endpoint/peak magnitude ratio
  double refine = 0;       // |I_h - I_{2h}| / |I_h|
};

/// One axis of the double Mellin-Barnes integrand: a fixed vertical contour
/// with nodes t_k = -T + k h, h = h_base * 2^stride.
struct AxisContour {
  double c;
  double h_base;
  int stride_pow;  // h = h_base << stride_pow
  int nodes;       // N, even; t covers [-T, T], T = N h / 2
  double h() const { return h_base * static_cast<double>(1 << stride_pow); }
  double T() const { return 0.5 * nodes * h(); }
};

/// Evaluates W_(ell, w; (j1,j2,j3)) on the positive diagonal torus
/// diag(a1 a2 a3, a2 a3, a3) via Theorem-style double Mellin-Barnes
/// integration. The integrand has pole chains only to the left of the
/// default abscissae, so the evaluator may shift each abscissa toward the
/// real-axis saddle (keeping results contour-independent) and log-scales the
/// trapezoid sums; this preserves relative accuracy deep into the decay
/// region where a fixed contour would drown in round-off.
class Gl3TorusEvaluator {
 public:
  Gl3TorusEvaluator(long ell, long w, int j1, int j2, int j3,
                    ContourSpec base1 = ContourSpec{}, ContourSpec base2 = ContourSpec{});

  long ell() const { return ell_; }
  int j1() const { return j1_; }
  int j3() const { return j3_; }

  /// Full value including the i^(j1-j3) and (a1 a2^2 a3^3)^(w/2) prefactors.
  Complex evaluate(double a1, double a2, double a3 = 1.0,
                   EvalDiagnostics* diag = nullptr) const;

  /// The base contour as an AxisContour (stride 0).
  AxisContour base_contour(int axis) const;

  /// Accuracy penalty (in e-folds of round-off amplification) of keeping the
  /// base abscissa on one axis, ignoring the coupling factor.
  double axis_penalty(int axis, double a) const;

  /// Penalty of pinning one axis at its base abscissa in the full joint
  /// integrand (coupling included) against the stated partner coordinate;
  /// this is what decides where contour shifting starts.
  double joint_base_penalty(int axis, double a, double a_other) const;

  /// Contour pair for a point: the base contours wherever they retain
  /// relative accuracy, otherwise abscissae near the joint saddle of the full
  /// integrand (coupling included) with truncation heights from the marginal
  /// widths of the joint Hessian.
  std::pair<AxisContour, AxisContour> joint_contours(double a1, double a2) const;

  /// Core banded computation: W values on the tensor grid a1s x a2s with the
  /// given per-axis contours (shared h_base lattice). Used by both the grid
  /// builder and single-point evaluation.
  void compute_block(const AxisContour& ax1, const AxisContour& ax2,
                     const std::vector<double>& u1s, const std::vector<double>& u2s,
                     Complex* out, size_t row_stride, EvalDiagnostics* diag = nullptr,
                     bool with_refine = false) const;

 private:
  double axis_logmag(int axis, double c, double log_a) const;

  long ell_, w_;
  int j1_, j2_, j3_;
  ContourSpec base1_, base2_;
};

/// Minimal-K-type index evaluation: expands v_(l;i) into monomials and sums
/// the corresponding integrals.
Complex whittaker_gl3_index(long ell, long w, long i, double a1, double a2, double a3 = 1.0,
                            const ContourSpec& base1 = ContourSpec{},
                            const ContourSpec& base2 = ContourSpec{});

}  // namespace zetaverify
