#include "zetaverify/gammafn.hpp"

#include <cmath>

namespace zetaverify {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos g = 7, n = 9 coefficients (double precision workhorse set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,
                                676.5203681218851,
                                -1259.1392167224028,
                                771.32342877765313,
                                -176.61502916214059,
                                12.507343278686905,
                                -0.13857109526572012,
                                9.9843695780195716e-6,
                                1.5056327351493116e-7};

bool at_pole(const Complex& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex lanczos_core(Complex z) {
  // Requires Re z >= 0.5 (z shifted by -1 internally).
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Complex lanczos_log_core(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log sin(pi z), stable for large |Im z| (branch only matters mod 2 pi i).
Complex log_sin_pi(Complex z) {
  double y = z.imag();
  if (std::abs(y) < 20.0) return std::log(std::sin(kPi * z));
  const Complex i(0.0, 1.0);
  // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i); keep the dominant term.
  if (y > 0) return -i * kPi * z - std::log(Complex(0.0, 2.0)) +
                    std::log(1.0 - std::exp(2.0 * i * kPi * z));
  return i * kPi * z - std::log(Complex(0.0, -2.0)) +
         std::log(1.0 - std::exp(-2.0 * i * kPi * z));
}

}  // namespace

Complex gamma_complex(Complex z) {
  if (at_pole(z)) throw GammaPoleError("gamma_complex: pole at nonpositive integer");
  Complex r;
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
    r = kPi / (std::sin(kPi * z) * lanczos_core(1.0 - z));
  } else {
    r = lanczos_core(z);
  }
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
    throw GammaOverflowError("gamma_complex: result overflow");
  return r;
}

Complex log_gamma(Complex z) {
  if (at_pole(z)) throw GammaPoleError("log_gamma: pole at nonpositive integer");
  if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - lanczos_log_core(1.0 - z);
  return lanczos_log_core(z);
}

Complex eval_gamma_R(Complex s) {
  return std::pow(kPi, -s / 2.0) * gamma_complex(s / 2.0);
}

Complex eval_gamma_C(Complex s) {
  return 2.0 * std::pow(2.0 * kPi, -s) * gamma_complex(s);
}

Complex log_gamma_R(Complex s) { return -s / 2.0 * std::log(kPi) + log_gamma(s / 2.0); }

Complex log_gamma_C(Complex s) {
  return std::log(2.0) - s * std::log(2.0 * kPi) + log_gamma(s);
}

}  // namespace zetaverify
