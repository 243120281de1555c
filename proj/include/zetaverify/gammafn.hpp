#pragma once

#include <complex>
#include <stdexcept>

namespace zetaverify {

using Complex = std::complex<double>;

struct GammaPoleError : std::domain_error {
  explicit GammaPoleError(const std::string& what) : std::domain_error(what) {}
};
struct GammaOverflowError : std::range_error {
  explicit GammaOverflowError(const std::string& what) : std::range_error(what) {}
};

/// Gamma(z) by Lanczos approximation with reflection for Re z < 0.5.
/// Relative error <= 1e-13 on |z| <= 60, |Im z| <= 50. Poles at nonpositive
/// integers raise GammaPoleError; results too large for double raise
/// GammaOverflowError (distinct conditions).
Complex gamma_complex(Complex z);

/// log Gamma(z), continuous up to multiples of 2 pi i (callers exponentiate,
/// so the branch is immaterial). Safe far beyond the gamma_complex range.
Complex log_gamma(Complex z);

/// Gamma_R(s) = pi^(-s/2) Gamma(s/2),  Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s).
Complex eval_gamma_R(Complex s);
Complex eval_gamma_C(Complex s);
Complex log_gamma_R(Complex s);
Complex log_gamma_C(Complex s);

}  // namespace zetaverify
