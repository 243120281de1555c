#include "zetaverify/gamma_expr.hpp"

#include <cmath>
#include <sstream>

namespace zetaverify {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Gamma at an exact positive integer or half-integer argument.
PiPower gamma_exact(const Rational& q) {
  if (q <= 0) throw std::domain_error("gamma_exact: argument must be positive");
  if (is_integer(q)) {
    unsigned long n = mpz_get_ui(q.get_num().get_mpz_t());
    return {GaussianRational(Rational(factorial(n - 1))), Rational(0)};
  }
  Rational twice = q * 2;
  if (!is_integer(twice))
    throw std::domain_error("gamma_exact: argument not integer or half-integer");
  // q = n + 1/2: Gamma(q) = (2n)! / (4^n n!) * sqrt(pi)
  unsigned long n = mpz_get_ui(Rational((twice - 1) / 2).get_num().get_mpz_t());
  Rational c = Rational(factorial(2 * n)) / (pow(Rational(4), n) * Rational(factorial(n)));
  return {GaussianRational(c), Rational(1, 2)};
}
}  // namespace

Complex PiPower::to_complex() const {
  return coeff.to_complex() * std::pow(kPi, to_double(pi_exponent));
}

std::string PiPower::str() const {
  return coeff.str() + " * pi^(" + to_string(pi_exponent) + ")";
}

GammaExpr& GammaExpr::mul_R(const Rational& shift, int exponent) {
  Rational s = shift;
  s.canonicalize();
  if (exponent != 0) factors_.push_back({GammaFactor::R, s, exponent});
  return *this;
}

GammaExpr& GammaExpr::mul_C(const Rational& shift, int exponent) {
  Rational s = shift;
  s.canonicalize();
  if (exponent != 0) factors_.push_back({GammaFactor::C, s, exponent});
  return *this;
}

GammaExpr& GammaExpr::scale(const GaussianRational& c) {
  prefactor_ *= c;
  return *this;
}

bool GammaExpr::has_pole_at(const Rational& s) const {
  for (const auto& f : factors_) {
    if (f.exponent <= 0) continue;
    Rational arg = s + f.shift;
    if (arg > 0) continue;
    if (f.kind == GammaFactor::C) {
      if (is_integer(arg)) return true;
    } else {
      if (is_integer(arg) && is_integer(Rational(arg / 2))) return true;
    }
  }
  return false;
}

Complex GammaExpr::eval(Complex s) const {
  Complex lg(0.0, 0.0);
  for (const auto& f : factors_) {
    Complex arg = s + Complex(to_double(f.shift), 0.0);
    lg += static_cast<double>(f.exponent) *
          (f.kind == GammaFactor::R ? log_gamma_R(arg) : log_gamma_C(arg));
  }
  return prefactor_.to_complex() * std::exp(lg);
}

Complex GammaExpr::eval_at(const Rational& s) const {
  if (has_pole_at(s)) throw GammaPoleError("GammaExpr: pole at s = " + to_string(s));
  return eval(Complex(to_double(s), 0.0));
}

PiPower GammaExpr::rational_part(const Rational& s) const {
  PiPower out(prefactor_, Rational(0));
  for (const auto& f : factors_) {
    Rational arg = s + f.shift;
    PiPower g;
    if (f.kind == GammaFactor::R) {
      // Gamma_R(q) = pi^(-q/2) Gamma(q/2); q must be a positive integer.
      if (!is_integer(arg))
        throw std::domain_error("rational_part: Gamma_R at non-integer argument");
      PiPower core = gamma_exact(Rational(arg / 2));
      g = PiPower(core.coeff, Rational(core.pi_exponent - arg / 2));
    } else {
      // Gamma_C(q) = 2 (2 pi)^(-q) Gamma(q); q must be a positive integer
      // (half-integers would introduce sqrt 2).
      if (!is_integer(arg))
        throw std::domain_error("rational_part: Gamma_C at non-integer argument");
      if (arg <= 0) throw std::domain_error("rational_part: Gamma_C at a pole");
      unsigned long n = mpz_get_ui(arg.get_num().get_mpz_t());
      Rational c = Rational(2) * Rational(factorial(n - 1)) / pow(Rational(2), n);
      g = PiPower(GaussianRational(c), Rational(-arg));
    }
    for (int k = 0; k < std::abs(f.exponent); ++k)
      out = f.exponent > 0 ? out * g : out / g;
  }
  return out;
}

int GammaExpr::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exponent * (f.kind == GammaFactor::R ? 1 : 2);
  return d;
}

std::string GammaExpr::str() const {
  std::ostringstream os;
  os << "(" << prefactor_.str() << ")";
  for (const auto& f : factors_) {
    os << " * Gamma_" << (f.kind == GammaFactor::R ? "R" : "C") << "(s";
    if (f.shift != 0) os << (f.shift > 0 ? "+" : "") << to_string(f.shift);
    os << ")";
    if (f.exponent != 1) os << "^" << f.exponent;
  }
  return os.str();
}

namespace {
double separation_window(double lo, double hi) {
  if (!(lo < hi)) throw PinchedContourError("pinched contour");
  return 0.5 * (lo + hi);
}
}  // namespace

double barnes_first_abscissa(Complex a, Complex b, Complex c, Complex d) {
  return separation_window(std::max(-a.real(), -b.real()), std::min(c.real(), d.real()));
}

double barnes_second_abscissa(Complex a, Complex b, Complex c, Complex d, Complex e) {
  return separation_window(std::max({-a.real(), -b.real(), -c.real()}),
                           std::min(d.real(), e.real()));
}

Complex barnes_first(Complex a, Complex b, Complex c, Complex d) {
  barnes_first_abscissa(a, b, c, d);
  return 2.0 * eval_gamma_R(a + c) * eval_gamma_R(a + d) * eval_gamma_R(b + c) *
         eval_gamma_R(b + d) / eval_gamma_R(a + b + c + d);
}

Complex barnes_second(Complex a, Complex b, Complex c, Complex d, Complex e) {
  barnes_second_abscissa(a, b, c, d, e);
  return 2.0 * eval_gamma_R(a + d) * eval_gamma_R(a + e) * eval_gamma_R(b + d) *
         eval_gamma_R(b + e) * eval_gamma_R(c + d) * eval_gamma_R(c + e) /
         (eval_gamma_R(b + c + d + e) * eval_gamma_R(a + c + d + e) *
          eval_gamma_R(a + b + d + e));
}

LFactorSpec LFactorSpec::rankin_selberg(long ell, long kappa, long w_sigma, long w_pi) {
  return {RS_GL3xGL2, ell, kappa, w_sigma, w_pi};
}

LFactorSpec LFactorSpec::adjoint(long ell) { return {AdjointGL3, ell, 0, 0, 0}; }

LFactorSpec LFactorSpec::std_gl2(long kappa, long w_pi) {
  return {StdGL2, 0, kappa, 0, w_pi};
}

GammaExpr LFactorSpec::expand() const {
  GammaExpr e;
  switch (kind) {
    case RS_GL3xGL2: {
      Rational tw(w_sigma + w_pi, 2);
      e.mul_C(Rational(tw + Rational(ell + kappa, 2) - 1));
      e.mul_C(Rational(tw + Rational(ell - kappa, 2)));
      e.mul_C(Rational(tw + Rational(kappa - 1, 2)));
      break;
    }
    case AdjointGL3:
      // The central twists of Sigma and its dual cancel.
      e.mul_R(Rational(0));
      e.mul_C(Rational(0));
      e.mul_C(Rational(ell - 1));
      e.mul_C(Rational(ell - 1, 2), 2);
      break;
    case StdGL2:
      e.mul_C(Rational(Rational(w_pi, 2) + Rational(kappa - 1, 2)));
      break;
  }
  return e;
}

Complex l_factor(const LFactorSpec& spec, Complex s) { return spec.expand().eval(s); }

}  // namespace zetaverify
