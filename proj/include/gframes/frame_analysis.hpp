#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gframes/operators.hpp"
#include "gframes/spectral.hpp"

namespace gframes {

/// Default absolute tolerance for spectral-domain identities.
inline constexpr double kDefaultTol = 1e-9;

/// Relative tolerance at which criterion and oracle bounds must agree.
inline constexpr double kAgreementRelTol = 1e-8;

/// Optimal frame bounds: A = lower, B = upper, 0 <= A <= B.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

enum class Verdict {
  frame,
  not_frame,
  onb,
  not_onb,
  biorthogonal,
  independent,
  dependent,
  orthonormal,
  not_orthonormal,
  dual_pair,
  not_dual,
};

const char* to_string(Verdict v);
Verdict verdict_from_string(std::string_view name);
bool verdict_is_positive(Verdict v);

/// Outcome of one frame-theoretic check. Every checker fills in two
/// independently computed bound pairs: `criterion_bounds` from the spectral
/// characterization and `oracle_bounds` from dense linear algebra on the
/// assembled system. `agreement` records whether they match to
/// kAgreementRelTol relative.
struct FrameReport {
  std::string system;
  FrameBounds criterion_bounds;
  FrameBounds oracle_bounds;
  Verdict verdict = Verdict::not_frame;
  std::vector<int> witnesses;                 // 1-based spectral indices
  std::vector<double> per_eigenvalue_energy;  // one value per eigenpair
  double max_deviation = 0.0;
  bool agreement = false;

  nlohmann::json to_json() const;
  static FrameReport from_json(const nlohmann::json& j);
};

/// Set of generator signals g_1..g_M, all of length N.
using GeneratorSet = std::vector<Signal>;

/// N x m matrix whose i-th column is T_i g.
Eigen::MatrixXcd translates_matrix(const SpectralBasis& basis, const Signal& g,
                                   int m);

/// Orthonormal-basis test for {T_i g : 1 <= i <= N}: verdict onb iff
/// max_l | |ghat(lambda_l)| - 1/sqrt(N) | <= tol. The oracle assembles the
/// Gram matrix of all N translates and the frame-operator eigenvalues.
FrameReport onb_translates_check(const SpectralBasis& basis, const Signal& g,
                                 double tol = kDefaultTol);

/// Biorthogonality test for {T_i g} vs {T_i h}: verdict biorthogonal iff
/// max_l | N conj(ghat) hhat - 1 | <= tol; oracle is the cross-Gram against
/// the identity.
FrameReport biorthogonality_check(const SpectralBasis& basis, const Signal& g,
                                  const Signal& h, double tol = kDefaultTol);

/// Linear independence of {T_i g : 1 <= i <= m}: verdict from the numerical
/// rank of translates_matrix (singular values > tol * sigma_max). On an
/// independent verdict the report carries a witness index set {l_1..l_m}
/// with ghat(lambda_{l_k}) != 0, found by a deterministic pivoted column
/// search.
FrameReport linear_independence_check(const SpectralBasis& basis,
                                      const Signal& g, int m,
                                      double tol = kDefaultTol);

/// Orthonormal-system test for {T_i g : 1 <= i <= m} via the Gram oracle.
/// When exactly m spectral indices carry |ghat| > tol, additionally checks
/// the magnitude identity |ghat(lambda_{l_k})| =
/// 1 / (sqrt(N) sqrt(sum_{q<=m} |deltahat_q(lambda_{l_k})|^2)) there.
FrameReport orthonormal_subsystem_check(const SpectralBasis& basis,
                                        const Signal& g, int m,
                                        double tol = kDefaultTol);

/// Frame test for {T_i g_s : 1 <= i <= N, 1 <= s <= M}. Criterion bounds are
/// (N min_l E_l, N max_l E_l) with E_l = sum_s |ghat_s(lambda_l)|^2; oracle
/// bounds are the extreme eigenvalues of the assembled frame operator.
FrameReport multi_generator_frame_bounds(const SpectralBasis& basis,
                                         const GeneratorSet& generators);

/// Optimal bounds of an arbitrary finite system: extreme eigenvalues of
/// S = sum_k v_k v_k^*.
FrameBounds frame_bounds_oracle(const GeneratorSet& vectors);

/// Frame test for the spectral graph wavelet system {T_i D_s g} over the
/// scale set J. Scales must be positive and J non-empty.
FrameReport wavelet_frame_check(const SpectralBasis& basis,
                                const SpectralKernel& kernel,
                                const std::vector<double>& scales);

/// Frame test for the translate-modulate system {T_i M_s g : 1 <= i, s <= N}:
/// criterion energy E_l = sum_n |chi_l(n)|^2 |g(n)|^2; oracle assembles all
/// N^2 vectors.
FrameReport modulation_frame_check(const SpectralBasis& basis, const Signal& g);

/// Dual-frame test: verdict dual_pair iff
/// max_l | sum_s conj(ghat_s) hhat_s - 1/N | <= tol. The oracle reconstructs
/// every standard basis vector through f -> sum_{i,s} <f, T_i g_s> T_i h_s.
FrameReport dual_frames_check(const SpectralBasis& basis,
                              const GeneratorSet& generators,
                              const GeneratorSet& duals,
                              double tol = kDefaultTol);

/// Frame operator S = sum_{i,s} (T_i g_s)(T_i g_s)^* as a dense Hermitian
/// matrix.
Eigen::MatrixXcd frame_operator_matrix(const SpectralBasis& basis,
                                       const GeneratorSet& generators);

/// Canonical dual generator h = S^{-1} g, computed in the spectral domain as
/// hhat_l = ghat_l / (N |ghat_l|^2). Throws SingularFrameOperator when some
/// |ghat_l| <= tol.
Signal canonical_dual_generator(const SpectralBasis& basis, const Signal& g,
                                double tol = kDefaultTol);

/// Closure residual of the shift-invariant space V(g): builds
/// f = sum_i coeffs_i T_i g, translates it by T_k, and returns the norm of
/// the component of T_k f outside span{T_1 g .. T_N g}.
double shift_invariance_residual(const SpectralBasis& basis, const Signal& g,
                                 const Eigen::VectorXcd& coeffs, int k);

} // namespace gframes
