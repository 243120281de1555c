#pragma once

#include <map>

#include "zetaverify/cochain.hpp"

namespace zetaverify {

bool operator<(const Weight2& a, const Weight2& b);
bool operator<(const Weight3& a, const Weight3& b);

/// Memoized module construction (read-only after first build).
const GL2Module& cached_gl2_module(const Weight2& lambda);
const GL3Module& cached_gl3_module(const Weight3& mu);
const SO3Module& cached_so3_module(long ell);

/// The GL3(C)-equivariant bilinear pairing M_{mu^vee} x M_mu -> C, defined
/// over Q, normalized so that <P^+_{mu^vee}, lowest weight basis vector> = 1.
/// Uniqueness (kernel dimension one) is asserted during construction.
class Gl3Pairing {
 public:
  explicit Gl3Pairing(const Weight3& mu);
  const Weight3& weight() const { return mu_; }
  const ExactMatrix& form() const { return form_; }
  GaussianRational value(const ExactVector& p_dual, const ExactVector& q_mod) const;

 private:
  Weight3 mu_;
  ExactMatrix form_;  // rows: M_{mu^vee} basis, cols: M_mu basis
};

class Gl2Pairing {
 public:
  explicit Gl2Pairing(const Weight2& lambda);
  const ExactMatrix& form() const { return form_; }
  GaussianRational value(const ExactVector& p_dual, const ExactVector& q_mod) const;

 private:
  Weight2 lambda_;
  ExactMatrix form_;
};

const Gl3Pairing& cached_gl3_pairing(const Weight3& mu);

/// SO(3)-invariant bilinear pairing on V_l x V_l (unique up to scalar,
/// normalized <v_(l;l), v_(l;-l)> = 1).
ExactMatrix so3_invariant_pairing(long ell);

/// The invariant vector sum_i (-1)^i / ((l-i)!(l+i)!) v_(l;i) (x) v_(l;-i),
/// returned as the (2l+1) x (2l+1) coefficient matrix on v_i (x) v_j.
/// Annihilation by E_+, E_-, E_12 is verified exactly.
ExactMatrix so3_invariant_vector(long ell);

/// One archimedean cohomology class of the GL3 side: the sum over the
/// minimal-K-type index i of (i-th Whittaker tag) (x) cochain term.
struct Gl3CohClass {
  long ell, w;
  int degree;                           // 2 = bottom, 3 = top
  std::map<long, WedgeCochain> terms;   // index i -> term in Lambda^q (x) M_{mu^vee}
};

enum class ClassKind { Bottom, Top };

/// Coefficient module is M_{mu^vee} with mu = gl3_weight(ell, w); for the
/// dual representation pass -w.
Gl3CohClass gl3_cohomology_class(ClassKind kind, long ell, long w);

/// GL2 classes [Pi]^+- : two summands (W^+ tag, Y_+* (x) (ix+y)^(k-2)) and
/// +-(i)^w (W^- tag, Y_-* (x) (x+iy)^(k-2)).
struct Gl2CohClass {
  long kappa, w;
  int sign;  // +1 or -1
  WedgeCochain plus_term;   // coefficient of the W^+ tag
  WedgeCochain minus_term;  // coefficient of the W^- tag
};

Gl2CohClass gl2_cohomology_class(long kappa, long w, int sign);

/// Exact check of the bottom/top-degree rewriting identity behind the class
/// well-definedness, for every index i in [-l, l]. Returns the offending i or
/// nullopt when the identity holds.
std::optional<long> relation_violation(long ell, long w, int degree);

/// Hom_{GL2}(M_{lambda+m}^vee, M_mu) solved exactly; nullopt when zero.
/// dim >= 2 throws (contradicts multiplicity one). The returned matrix maps
/// coordinates of M_{(lambda+m)^vee} to coordinates of M_mu and has its
/// first nonzero entry in row-major order normalized to 1.
std::optional<ExactMatrix> branching_hom(const Weight2& lambda, long m, const Weight3& mu);

/// Interlacing oracle for the same Hom space (classical GL3 | GL2 branching):
/// nonzero iff mu1 >= -lambda2-m >= mu2 >= -lambda1-m >= mu3.
bool branching_nonzero_oracle(const Weight2& lambda, long m, const Weight3& mu);

struct RsCombinatorialValue {
  GaussianRational value;
  long i_exponent;         // asserted: value in i^(i_exponent) * Q
  Rational rational_part;  // value * i^(-i_exponent)
};

/// The exact non-zeta factor of the Rankin-Selberg class pairing:
/// sign=+1:  < E_-^(l-k) (X_-1*^X_-2* (x) rho(h+) P+), Y_+* (x) (ix+y)^(k-2) >
/// sign=-1:  < E_+^(l-k) (X_1*^X_2*   (x) rho(h-) P+), Y_-* (x) (x+iy)^(k-2) >
/// evaluated with the normalized iota_m and <.,.>_mu.
RsCombinatorialValue combinatorial_pairing_rs(long ell, long kappa, long w_sigma, long w_pi,
                                              long m, int sign);

struct AdjointCombinatorialValue {
  GaussianRational value;          // full constant
  Rational factorial_factor;       // (2l+1)!/(l!)^2
  GaussianRational module_factor;  // <P+_{mu^vee}, rho_mu(J) P+_mu>, in Q^x
};

/// (-1)^(w/2) * 4 * (2l+1)!/(l!)^2 * <P+_{mu^vee}, rho_mu(antidiag(-1,1,-1)) P+_mu>.
AdjointCombinatorialValue combinatorial_pairing_adjoint(long ell, long w);

struct AdRationalityResult {
  bool is_rational;
  ExactMatrix matrix;  // action of Ad(h)^-1 E_+- on M_{mu^vee}
};

AdRationalityResult rationality_check_ad(const Weight3& mu, int sign);

struct PoincareGl2Constants {
  GaussianRational twisted_sum;   // <(x+iy)^n,(ix+y)^n> + (-1)^w <(ix+y)^n,(x+iy)^n>
  GaussianRational x_y_pairing;   // <x^n, y^n>
  GaussianRational wedge_coeff;   // Y_+*^Y_-* against e11*^e12*
  bool identity_holds;            // twisted_sum == 2^(k-1) x_y_pairing
};

PoincareGl2Constants poincare_constants_gl2(long kappa, long w_pi);

}  // namespace zetaverify
