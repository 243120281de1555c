#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zetaverify/linalg.hpp"
#include "zetaverify/polynomial.hpp"

namespace zetaverify {

/// Dominant integral weight of T_2.
struct Weight2 {
  long mu1, mu2;
  Weight2(long a, long b) : mu1(a), mu2(b) {
    if (mu1 < mu2) throw std::invalid_argument("Weight2: not dominant");
  }
  Weight2 dual() const { return {-mu2, -mu1}; }
  Weight2 shifted(long m) const { return {mu1 + m, mu2 + m}; }
  long degree() const { return mu1 - mu2; }
  bool operator==(const Weight2& o) const { return mu1 == o.mu1 && mu2 == o.mu2; }
};

/// Dominant integral weight of T_3.
struct Weight3 {
  long mu1, mu2, mu3;
  Weight3(long a, long b, long c) : mu1(a), mu2(b), mu3(c) {
    if (mu1 < mu2 || mu2 < mu3) throw std::invalid_argument("Weight3: not dominant");
  }
  Weight3 dual() const { return {-mu3, -mu2, -mu1}; }
  bool is_pure() const { return mu1 + mu3 == 2 * mu2; }
  long weyl_dim() const {
    return (mu1 - mu2 + 1) * (mu2 - mu3 + 1) * (mu1 - mu3 + 2) / 2;
  }
  bool operator==(const Weight3& o) const {
    return mu1 == o.mu1 && mu2 == o.mu2 && mu3 == o.mu3;
  }
};

/// Cuspidal-parameter weights: mu(l, w) for GL3, lambda(kappa, w) for GL2.
Weight3 gl3_weight(long ell, long w);
Weight2 gl2_weight(long kappa, long w);

/// M_lambda: homogeneous polynomials of degree lambda1-lambda2 in x, y with
/// rho(g) P = det(g)^{lambda2} P((x,y)g). Basis: x^(n-k) y^k, k = 0..n.
class GL2Module {
 public:
  explicit GL2Module(Weight2 lambda);

  const Weight2& weight() const { return lambda_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const MultiPoly& basis_poly(int k) const { return basis_[k]; }
  /// Torus weight (w1, w2) of basis vector k.
  std::array<long, 2> basis_weight(int k) const;

  ExactVector coordinates(const MultiPoly& p) const;
  MultiPoly from_coordinates(const ExactVector& v) const;

  /// rho(g) as a dim x dim matrix; g an invertible 2x2 matrix over Q(i).
  ExactMatrix group_action(const ExactMatrix& g) const;
  /// d rho(X) for any 2x2 matrix X over Q(i).
  ExactMatrix lie_action(const ExactMatrix& x) const;

 private:
  Weight2 lambda_;
  std::vector<MultiPoly> basis_;
};

/// M_mu: the span of x21^n1 x22^n2 x23^n3 * (2x2 minors)^(n_jj') inside
/// Q[x_ij], reduced to a basis by exact row reduction with graded-lex
/// tie-breaking; rho(g) P(x) = det(g)^{mu3} P(xg). basis_poly(0) is the
/// highest weight vector P_mu^+.
class GL3Module {
 public:
  explicit GL3Module(Weight3 mu);

  const Weight3& weight() const { return mu_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const MultiPoly& basis_poly(int k) const { return basis_[k]; }
  const MultiPoly& highest_weight_vector() const { return basis_[0]; }
  std::array<long, 3> basis_weight(int k) const { return weights_[k]; }
  /// Index of the (unique) lowest-weight basis vector.
  int lowest_weight_index() const;

  ExactVector coordinates(const MultiPoly& p) const;

  ExactMatrix group_action(const ExactMatrix& g) const;
  ExactMatrix lie_action(const ExactMatrix& x) const;

 private:
  Weight3 mu_;
  std::vector<MultiPoly> basis_;
  std::vector<std::array<long, 3>> weights_;
  std::vector<MultiPoly::Exponents> support_;
  std::unique_ptr<CoordinateSolver> solver_;
  ExactVector support_vector(const MultiPoly& p) const;
};

/// V_l: degree-l polynomials in x1, x2, x3 modulo x1^2+x2^2+x3^2, in the
/// canonical normal form with x3-degree <= 1. Basis v_(l;i), -l <= i <= l.
class SO3Module {
 public:
  explicit SO3Module(long ell);

  long ell() const { return ell_; }
  int dim() const { return static_cast<int>(2 * ell_ + 1); }
  /// Basis vector v_(l;i) as canonical-form polynomial, index i in [-l, l].
  const MultiPoly& basis_poly(long i) const { return basis_[idx(i)]; }

  /// Canonical form: eliminate x3^k, k >= 2, via x3^2 -> -x1^2-x2^2.
  static MultiPoly reduce(const MultiPoly& p);

  ExactVector coordinates(const MultiPoly& p) const;

  /// tau(g) for g in SO(3) with entries in Q(i); coordinates in the v-basis.
  ExactMatrix group_action(const ExactMatrix& g) const;
  /// d tau(X) for X in so(3)_C.
  ExactMatrix lie_action(const ExactMatrix& x) const;

  /// Expansion of v_(l;i) in the monomial classes v_(l;(j1,j2,j3)):
  /// list of ((j1,j2,j3), coefficient).
  std::vector<std::pair<std::array<int, 3>, GaussianRational>> monomial_expansion(long i) const;

 private:
  size_t idx(long i) const { return static_cast<size_t>(i + ell_); }
  long ell_;
  std::vector<MultiPoly> basis_;
  std::unique_ptr<CoordinateSolver> solver_;
  std::vector<MultiPoly::Exponents> support_;
  ExactVector support_vector(const MultiPoly& p) const;
};

// Small exact-matrix helpers for 2x2 / 3x3 group elements.
ExactMatrix mat2(std::initializer_list<GaussianRational> entries);
ExactMatrix mat3(std::initializer_list<GaussianRational> entries);
GaussianRational determinant(const ExactMatrix& m);
GaussianRational trace(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace zetaverify
