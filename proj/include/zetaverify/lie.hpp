#pragma once

#include "zetaverify/modules.hpp"

namespace zetaverify {

/// Named elements of gl(3)_C and gl(2)_C used throughout: so(3) generators
/// E_+, E_12, E_-; the basis X_2..X_-2 of g3/k3; Y_+/- of g2/k2; and the
/// explicit matrices entering the cohomology classes and pairings.
namespace lie {

GaussianRational gi(long re, long im = 0);

const ExactMatrix& E_plus();
const ExactMatrix& E_minus();
const ExactMatrix& E12();

/// X-basis in the order X_2, X_1, X_0, X_-1, X_-2 (index 0..4).
const ExactMatrix& X(int idx);
int x_index(int i);  // i in {2,1,0,-1,-2} -> 0..4

/// Y_+ (idx 0), Y_- (idx 1).
const ExactMatrix& Y(int idx);

const ExactMatrix& h_plus();    // [[1,0,1],[i,0,-i],[0,1,0]]
const ExactMatrix& h_minus();   // [[-1,0,-1],[i,0,-i],[0,1,0]]
const ExactMatrix& h_ad();      // [[1,1,0],[i,-i,0],[0,0,1]]
const ExactMatrix& j_flip();    // [[0,0,-1],[0,1,0],[-1,0,0]]
const ExactMatrix& h_gl2();     // [[1,1],[i,-i]]

ExactMatrix embed_gl2(const ExactMatrix& g);      // group embedding iota(g) = diag(g, 1)
ExactMatrix embed_gl2_lie(const ExactMatrix& x);  // Lie embedding d iota: corner 0
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace lie

/// Exact coordinates on g3_C = k3_C + span{X_2..X_-2} and the induced
/// 5-dimensional quotient operators.
class Gl3Quotient {
 public:
  Gl3Quotient();

  /// Coordinates of m on span{X_2..X_-2} along k3_C = span{I, A12, A13, A23}.
  ExactVector p_project(const ExactMatrix& m) const;

  /// ad(E) on the quotient: columns are p_project([E, X_i]).
  ExactMatrix ad_p(const ExactMatrix& e) const;

  /// Ad(k) on the quotient for k in SO(3) (entries in Q(i)).
  ExactMatrix group_ad_p(const ExactMatrix& k) const;

 private:
  std::unique_ptr<CoordinateSolver> solver_;
};

class Gl2Quotient {
 public:
  Gl2Quotient();

  /// Coordinates of m on span{Y_+, Y_-} along k2_C = span{I, A12}.
  ExactVector p_project(const ExactMatrix& m) const;
  ExactMatrix ad_p(const ExactMatrix& e) const;
  ExactMatrix group_ad_p(const ExactMatrix& k) const;

  /// Coordinates of m on span{I2, e11, e12} along so(2)_C (4-dim gl2 split).
  ExactVector mod_so2_coords(const ExactMatrix& m) const;

 private:
  std::unique_ptr<CoordinateSolver> solver_;      // basis [I, A12, Y+, Y-]
  std::unique_ptr<CoordinateSolver> so2_solver_;  // basis [A12, I, e11, e12]
};

const Gl3Quotient& gl3_quotient();
const Gl2Quotient& gl2_quotient();

/// Normalization of the quotient volume covectors, fixed so that the torus
/// anchors come out as s(X0*^X-2*, Y+*) = 8, s(X0*^X2*, Y-*) = -8,
/// s5(X0*^X-1*^X-2*, X1*^X2*) = -4i and Y+*^Y-* = 8i * e11*^e12*.
inline const GaussianRational& dual_scale() {
  static const GaussianRational k(-64);
  return k;
}

}  // namespace zetaverify
