#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "gframes/spectral.hpp"

namespace gframes {

/// Generalized convolution: (f * g)^(lambda_l) = fhat(lambda_l) ghat(lambda_l),
/// realized as the inverse GFT of the pointwise coefficient product.
Signal convolve(const SpectralBasis& basis, const Signal& f, const Signal& g);

/// Generalized translation T_i f = sqrt(N) (f * delta_i); in the spectral
/// domain coefficient l picks up sqrt(N) * conj(chi_l(i)).
Signal translate(const SpectralBasis& basis, const Signal& f, int vertex);

/// Generalized modulation M_i f(n) = chi_i(n) f(n).
Signal modulate(const SpectralBasis& basis, const Signal& f, int index);

/// Polynomial spectral kernel ghat(z) = sum_k c_k z^k on the complex plane.
/// Polynomials are closed under the dilation substitution z -> s z, which is
/// all the wavelet machinery needs.
class SpectralKernel {
public:
  /// Coefficients c0..cd, lowest order first. Must be non-empty; trailing
  /// zeros are kept (the degree is nominal).
  explicit SpectralKernel(Eigen::VectorXcd coefficients);

  /// Interpolating polynomial through the given (x, y) points via divided
  /// differences. X-values must be pairwise distinct.
  static SpectralKernel
  from_lagrange(const std::vector<std::pair<double, std::complex<double>>>& points);

  /// Parses the kernel file format:
  ///   "poly: c0 c1 c2 ..."        coefficients as real or "a+bi" tokens
  ///   "lagrange: x1 y1; x2 y2; ..."
  /// '#' comments and blank lines are ignored.
  static SpectralKernel parse(const std::string& text);

  /// Horner evaluation.
  std::complex<double> eval(std::complex<double> z) const;

  const Eigen::VectorXcd& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

private:
  Eigen::VectorXcd coeffs_;
};

/// Coefficients of the dilated kernel on the spectrum: ghat(s * lambda_l).
SpectralCoefficients dilated_coefficients(const SpectralBasis& basis,
                                          const SpectralKernel& kernel,
                                          double scale);

/// The signal D_s g whose GFT coefficient l equals ghat(s * lambda_l).
Signal dilate_to_signal(const SpectralBasis& basis, const SpectralKernel& kernel,
                        double scale);

/// Parses a complex token: "1", "-2.5", "1+2i", "0.5-0.25i", "2i", "-i".
std::complex<double> parse_complex(std::string_view token);

} // namespace gframes
