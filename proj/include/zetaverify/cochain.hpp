#pragma once

#include <map>
#include <vector>

#include "zetaverify/lie.hpp"

namespace zetaverify {

/// A q-cochain on a d-dimensional dual space (d = 5 for (g3/k3)*, d = 2 for
/// (g2/k2)*) with coefficients that are exact vectors (module elements).
/// Scalar cochains use coefficient vectors of length 1. Keys are strictly
/// increasing index tuples over the fixed dual basis order
/// (X_2*, X_1*, X_0*, X_-1*, X_-2*) resp. (Y_+*, Y_-*).
class WedgeCochain {
 public:
  using Combo = std::vector<int>;

  WedgeCochain(int space_dim, int degree, size_t coeff_dim)
      : space_dim_(space_dim), degree_(degree), coeff_dim_(coeff_dim) {}

  int degree() const { return degree_; }
  int space_dim() const { return space_dim_; }
  size_t coeff_dim() const { return coeff_dim_; }
  const std::map<Combo, ExactVector>& terms() const { return terms_; }
  bool is_zero() const;

  /// Add c * (basis combo), sorting the combo and tracking the sign;
  /// repeated indices contribute nothing.
  void add(Combo combo, const ExactVector& coeff);

  WedgeCochain scaled(const GaussianRational& c) const;
  friend WedgeCochain operator+(const WedgeCochain& a, const WedgeCochain& b);
  friend WedgeCochain operator-(const WedgeCochain& a, const WedgeCochain& b);
  friend bool operator==(const WedgeCochain& a, const WedgeCochain& b);

  /// Leibniz (Lie algebra) action: dual_action acts on the wedge factors
  /// (matrix of the dual-space action, size d x d), module_action on the
  /// coefficients; the result sums over the slots. Either may be null to act
  /// on one tensor factor only.
  WedgeCochain acted(const ExactMatrix* dual_action, const ExactMatrix* module_action) const;

  /// Group action: the wedge functor of dual_action (product over slots),
  /// with the module factor transformed by module_action when given.
  WedgeCochain group_acted(const ExactMatrix& dual_action,
                           const ExactMatrix* module_action = nullptr) const;

 private:
  int space_dim_, degree_;
  size_t coeff_dim_;
  std::map<Combo, ExactVector> terms_;
};

/// Dual-space action matrices. For a Lie element E acting on f in W*:
/// (E.f)(v) = -f(ad(E) v), so the matrix is -ad_p(E)^T. For a group element
/// k: (k.f)(v) = f(Ad(k^-1) v), matrix Ad_p(k^-1)^T.
ExactMatrix dual_lie_action_gl3(const ExactMatrix& e);
ExactMatrix dual_group_action_gl3(const ExactMatrix& k);
ExactMatrix dual_lie_action_gl2(const ExactMatrix& e);
ExactMatrix dual_group_action_gl2(const ExactMatrix& k);

/// s : Lambda^2 (g3/k3)* x (g2/k2)* -> C of the Rankin-Selberg pairing,
/// via iota* X* ^ iota* Y* ^ pr(Z*) against the reference volume covector
/// (see dual_scale() for the normalization).
GaussianRational pairing_s(const WedgeCochain& gl3_deg2, const WedgeCochain& gl2_deg1);

/// s : Lambda^3 (g3/k3)* x Lambda^2 (g3/k3)* -> C of the adjoint pairing.
GaussianRational pairing_s5(const WedgeCochain& deg3, const WedgeCochain& deg2);

/// Coefficient c with Y_+* ^ Y_-* = c * e11* ^ e12* in Lambda^2 (g2/k2)*.
GaussianRational y_wedge_coefficient();

}  // namespace zetaverify
