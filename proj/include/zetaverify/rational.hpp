#pragma once

#include <gmpxx.h>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetaverify {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, long e);
BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// Element of Q(i). All arithmetic is exact; mpq_class keeps fractions reduced.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v, 1), im(0) {}
  GaussianRational(const Rational& r) : re(r), im(0) { re.canonicalize(); }
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
  /// (sqrt(-1))^k for any integer k.
  static GaussianRational i_pow(long k);

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }

  GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
  GaussianRational conj() const { return {re, Rational(-im)}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re - b.re), Rational(a.im - b.im)};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational pow(long e) const;

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

}  // namespace zetaverify
