#pragma once

// Wootters concurrence of two-qubit states.
//
// The decreasing lambdas are the eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho)).
// They are obtained as the singular values of tau = W^T (sy (x) sy) W, where
// rho = W W^dagger and W = V sqrt(D) from the eigendecomposition of rho; tau^dagger tau
// is unitarily similar to sqrt(rho) rho~ sqrt(rho). The singular values are read off
// the Hermitian dilation [[0, tau], [tau^dagger, 0]], whose spectrum is {+-sigma_i}.
// Taking sigma directly (rather than sqrt of eigenvalues of R^2) keeps absolute
// errors at rounding level for rank-deficient states.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "singlet/linalg.hpp"
#include "singlet/qstate.hpp"
#include "singlet/spun_state.hpp"

namespace singlet {

namespace tolerance {
/// lambdas below this are set to exactly zero before the subtraction.
inline constexpr double lambda_zero = 1e-12;
}  // namespace tolerance

struct ConcurrenceResult {
  double concurrence = 0.0;
  std::array<double, 4> lambdas{};  // descending
};

/// sigma_y (x) sigma_y in the computational basis.
inline const ComplexMatrix4& sigma_yy() {
  static const ComplexMatrix4 yy{0.0, 0.0, 0.0, -1.0,  //
                                 0.0, 0.0, 1.0, 0.0,   //
                                 0.0, 1.0, 0.0, 0.0,   //
                                 -1.0, 0.0, 0.0, 0.0};
  return yy;
}

/// (sy (x) sy) rho* (sy (x) sy)
inline DensityOperator spin_flip(const DensityOperator& rho) {
  const auto& yy = sigma_yy();
  return detail::make_unchecked(yy * rho.matrix().conjugate() * yy);
}

inline ConcurrenceResult concurrence_from_lambdas(std::array<double, 4> lambdas) {
  for (double& l : lambdas) {
    if (!(l >= tolerance::lambda_zero)) l = 0.0;
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>{});
  const double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
  return {std::clamp(c, 0.0, 1.0), lambdas};
}

/// Singular values of a 4x4 complex matrix, descending, via the 8x8 Hermitian dilation.
inline std::array<double, 4> singular_values(const ComplexMatrix4& t) {
  CMatrix<8> dilation;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = t(i, j);
      dilation(4 + j, i) = std::conj(t(i, j));
    }
  const auto eig = hermitian_eigen(dilation);
  std::array<double, 4> sigma{};
  for (std::size_t k = 0; k < 4; ++k) sigma[k] = std::max(eig.eigenvalues[7 - k], 0.0);
  return sigma;
}

inline ConcurrenceResult wootters_concurrence(const DensityOperator& rho) {
  auto eig = hermitian_eigen(rho.matrix());
  for (double& ev : eig.eigenvalues) {
    if (ev < -tolerance::state_psd) throw Error(ErrorKind::NotPSD, "state has a negative eigenvalue");
  }

  // W = V sqrt(D). Concurrence depends on square roots of populations, so every
  // positive eigenvalue is kept, however small.
  ComplexMatrix4 w;
  for (std::size_t k = 0; k < 4; ++k) {
    const double mu = eig.eigenvalues[k];
    if (mu <= 0.0) continue;
    const double root = std::sqrt(mu);
    for (std::size_t i = 0; i < 4; ++i) w(i, k) = root * eig.eigenvectors[k][i];
  }
  const ComplexMatrix4 tau = w.transpose() * sigma_yy() * w;
  return concurrence_from_lambdas(singular_values(tau));
}

/// Textbook route: lambdas as square roots of the eigenvalues of
/// sqrt(rho) rho~ sqrt(rho). Less accurate for rank-deficient states, where
/// eigenvalue noise of order 1e-16 becomes lambda noise of order 1e-8; kept
/// as a second route for cross-checking.
inline ConcurrenceResult wootters_concurrence_r_matrix(const DensityOperator& rho) {
  auto eig = hermitian_eigen(rho.matrix());
  for (double& ev : eig.eigenvalues) {
    if (ev < -tolerance::state_psd) throw Error(ErrorKind::NotPSD, "state has a negative eigenvalue");
    ev = std::max(ev, 0.0);
  }
  const ComplexMatrix4 root = apply_spectral(eig, [](double ev) { return std::sqrt(ev); });
  const ComplexMatrix4 m = (root * spin_flip(rho).matrix() * root).hermitian_part();
  const auto spectrum = clip_psd_spectrum(hermitian_eigen(m).eigenvalues);
  std::array<double, 4> lambdas{};
  for (std::size_t k = 0; k < 4; ++k) lambdas[k] = std::sqrt(spectrum[k]);
  return concurrence_from_lambdas(lambdas);
}

/// Closed-form lambdas of a spun state:
///   lambda_{1,2} = (1/sqrt2) [X +- sqrt(X^2 - 4 Y^2)]^{1/2},  X = a^2 + p_s^2 - 2c^2 cos 2phi,
///                                                            Y = c^2 - a p_s
///   lambda_3 = lambda_4 = sqrt(b^2 - m^2)/2
/// The + branch is lambda_1. lambda_2 is evaluated as |Y|/lambda_1 (lambda_1 lambda_2 = |Y|)
/// to avoid cancellation.
inline ConcurrenceResult spun_concurrence_closed_form(const SpunState& s) {
  check_spun_state(s);
  const double c2 = s.eta * s.eta * std::max(s.a, 0.0) * std::max(s.p_s, 0.0);
  const double x = s.a * s.a + s.p_s * s.p_s - 2.0 * c2 * std::cos(2.0 * s.phi);
  const double y = c2 - s.a * s.p_s;
  const double disc = std::sqrt(std::max(x * x - 4.0 * y * y, 0.0));
  const double lambda1 = std::sqrt(std::max(x + disc, 0.0) / 2.0);
  const double lambda2 = lambda1 > 0.0 ? std::abs(y) / lambda1 : 0.0;
  const double lambda34 = 0.5 * std::sqrt(std::max((s.b + s.m) * (s.b - s.m), 0.0));
  if (lambda1 + 1e-12 < lambda2) throw Error(ErrorKind::InvalidSpunState, "lambda_1 < lambda_2");
  return concurrence_from_lambdas({lambda1, lambda2, lambda34, lambda34});
}

/// C = max[0, sqrt((p_s - a)^2 + 4 c^2 sin^2 phi) - sqrt(b^2 - m^2)]
inline double spun_concurrence_expression(const SpunState& s) {
  check_spun_state(s);
  const double c2 = s.eta * s.eta * std::max(s.a, 0.0) * std::max(s.p_s, 0.0);
  const double sin_phi = std::sin(s.phi);
  const double v = std::sqrt((s.p_s - s.a) * (s.p_s - s.a) + 4.0 * c2 * sin_phi * sin_phi) -
                   std::sqrt(std::max((s.b + s.m) * (s.b - s.m), 0.0));
  return std::max(v, 0.0);
}

}  // namespace singlet
