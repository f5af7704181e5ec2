#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "gframes/graph.hpp"

namespace gframes {

/// A graph signal: one complex value per vertex.
using Signal = Eigen::VectorXcd;

/// GFT coefficients, indexed by eigenpair index l (not by distinct
/// eigenvalue), so repeated eigenvalues carry independent coefficients.
using SpectralCoefficients = Eigen::VectorXcd;

/// Inner product with the convention <f, g> = sum_n f(n) * conj(g(n)).
inline std::complex<double> inner(const Eigen::VectorXcd& f,
                                  const Eigen::VectorXcd& g) {
  return g.dot(f);
}

/// Orthonormal eigendecomposition of a symmetric graph operator.
///
/// Eigenvalues are sorted ascending (ties allowed); the l-th column of
/// eigenvectors() is the eigenvector for the l-th eigenvalue. Within a
/// repeated eigenvalue any orthonormal basis of the eigenspace is valid, and
/// every downstream verdict is invariant under that choice.
class SpectralBasis {
public:
  /// Full symmetric eigendecomposition. Throws ConvergenceFailure if the
  /// solver fails or the result violates the orthonormality/residual
  /// invariants at tolerance `tol`.
  static SpectralBasis decompose(const GraphOperator& op, double tol = 1e-10);

  /// Wraps an externally supplied eigensystem after validating it against
  /// `op`: ascending eigenvalues, orthonormal columns within `tol`, and
  /// per-entry residual |A x_l - lambda_l x_l| <= tol * (1 + |lambda_l|).
  static SpectralBasis from_eigenpairs(const GraphOperator& op,
                                       Eigen::VectorXd eigenvalues,
                                       Eigen::MatrixXd eigenvectors,
                                       double tol = 1e-10);

  int size() const { return static_cast<int>(eigenvalues_.size()); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  OperatorKind source_kind() const { return source_kind_; }
  double ortho_tol() const { return ortho_tol_; }

  /// Eigenvector matrix as complex, for products with complex signals.
  const Eigen::MatrixXcd& eigenvectors_complex() const { return chi_c_; }

private:
  SpectralBasis(OperatorKind kind, Eigen::VectorXd evals, Eigen::MatrixXd evecs,
                double tol);

  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::MatrixXcd chi_c_;
  OperatorKind source_kind_;
  double ortho_tol_;
};

/// Graph Fourier transform: coefficient l is <f, chi_l>.
SpectralCoefficients gft(const SpectralBasis& basis, const Signal& f);

/// Inverse graph Fourier transform: f(n) = sum_l c_l * chi_l(n).
Signal igft(const SpectralBasis& basis, const SpectralCoefficients& c);

/// Text dump: "lambda: ..." line followed by the eigenvector matrix rows,
/// 17 significant digits.
std::string dump_spectrum(const SpectralBasis& basis);

} // namespace gframes
