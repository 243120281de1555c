#include "zetaverify/rational.hpp"

namespace zetaverify {

Rational pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base == 0) throw std::domain_error("pow: zero to negative power");
    return pow(Rational(1 / base), -e);
  }
  Rational acc(1), b(base);
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

GaussianRational GaussianRational::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  Rational n(b.re * b.re + b.im * b.im);
  return {Rational((a.re * b.re + a.im * b.im) / n), Rational((a.im * b.re - a.re * b.im) / n)};
}

GaussianRational GaussianRational::pow(long e) const {
  if (e < 0) return (GaussianRational(1) / *this).pow(-e);
  GaussianRational acc(1), b(*this);
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

std::string GaussianRational::str() const {
  if (im == 0) return re.get_str();
  if (re == 0) return im.get_str() + "*i";
  return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "*i";
}

}  // namespace zetaverify
