#pragma once

#include <string>
#include <vector>

#include "zetaverify/gammafn.hpp"
#include "zetaverify/rational.hpp"

namespace zetaverify {

/// Exact value of the form coeff * pi^(pi_exponent) with pi_exponent in (1/2)Z
/// (half powers carry the sqrt(pi) of Gamma at half-integers).
struct PiPower {
  GaussianRational coeff;
  Rational pi_exponent;  // denominator 1 or 2

  PiPower() : coeff(0), pi_exponent(0) {}
  PiPower(GaussianRational c, Rational e) : coeff(std::move(c)), pi_exponent(std::move(e)) {
    pi_exponent.canonicalize();
  }

  friend PiPower operator*(const PiPower& a, const PiPower& b) {
    return {a.coeff * b.coeff, Rational(a.pi_exponent + b.pi_exponent)};
  }
  friend PiPower operator/(const PiPower& a, const PiPower& b) {
    return {a.coeff / b.coeff, Rational(a.pi_exponent - b.pi_exponent)};
  }
  Complex to_complex() const;
  std::string str() const;
};

/// Formal product prefactor * prod Gamma_R(s + shift)^e * Gamma_C(s + shift)^e
/// with exact rational shifts; pole bookkeeping is exact.
struct GammaFactor {
  enum Kind { R, C };
  Kind kind;
  Rational shift;
  int exponent = 1;
};

class GammaExpr {
 public:
  GammaExpr() : prefactor_(1) {}

  GammaExpr& mul_R(const Rational& shift, int exponent = 1);
  GammaExpr& mul_C(const Rational& shift, int exponent = 1);
  GammaExpr& scale(const GaussianRational& c);

  const std::vector<GammaFactor>& factors() const { return factors_; }
  const GaussianRational& prefactor() const { return prefactor_; }

  /// Exact pole test at rational s: some factor with positive exponent has
  /// argument in the pole set (nonpositive even integers for Gamma_R applied
  /// to s+shift, i.e. (s+shift)/2 nonpositive integer; nonpositive integers
  /// for Gamma_C).
  bool has_pole_at(const Rational& s) const;

  /// Numeric evaluation; throws GammaPoleError on an exact pole when s is
  /// given exactly.
  Complex eval(Complex s) const;
  Complex eval_at(const Rational& s) const;

  /// Exact closed-form value at rational s: every Gamma argument must land on
  /// positive integers or half-integers. Gamma_C at half-integer arguments is
  /// rejected (it introduces sqrt 2, outside the Q * pi^Z/2 lattice).
  PiPower rational_part(const Rational& s) const;

  /// Degree count with Gamma_R = 1, Gamma_C = 2 (counts exponents).
  int degree() const;

  std::string str() const;

 private:
  std::vector<GammaFactor> factors_;
  GaussianRational prefactor_;
};

/// Closed forms of Barnes' first and second lemmas in Gamma_R form. The
/// parameters must admit a separating vertical path (left pole chains
/// strictly left of right ones); otherwise a "pinched contour" error.
struct PinchedContourError : std::domain_error {
  explicit PinchedContourError(const std::string& w) : std::domain_error(w) {}
};

Complex barnes_first(Complex a, Complex b, Complex c, Complex d);
Complex barnes_second(Complex a, Complex b, Complex c, Complex d, Complex e);

/// A legal abscissa for the corresponding contour integral (midpoint of the
/// separating window); throws PinchedContourError when none exists.
double barnes_first_abscissa(Complex a, Complex b, Complex c, Complex d);
double barnes_second_abscissa(Complex a, Complex b, Complex c, Complex d, Complex e);

/// Archimedean L-factor shapes.
struct LFactorSpec {
  enum Kind { RS_GL3xGL2, AdjointGL3, StdGL2 };
  Kind kind;
  long ell = 0, kappa = 0, w_sigma = 0, w_pi = 0;

  static LFactorSpec rankin_selberg(long ell, long kappa, long w_sigma = 0, long w_pi = 0);
  static LFactorSpec adjoint(long ell);
  static LFactorSpec std_gl2(long kappa, long w_pi = 0);

  GammaExpr expand() const;
};

Complex l_factor(const LFactorSpec& spec, Complex s);

}  // namespace zetaverify
