#pragma once

#include <cmath>
#include <numbers>

#include "singlet/singlet.hpp"

namespace singlet::testing {

inline CounterRng test_rng(std::uint64_t stream) { return CounterRng(0x5eed, stream); }

/// Haar-ish random single-qubit unitary (random axis, angle and global phase).
inline ComplexMatrix2 random_su2(CounterRng& rng) {
  Vec3 axis{rng.normal(), rng.normal(), rng.normal()};
  axis = (1.0 / axis.norm()) * axis;
  const ComplexMatrix2 v = su2_rotation(axis, 2.0 * std::numbers::pi * rng.uniform());
  return std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform()) * v;
}

inline DensityOperator apply_local(const DensityOperator& rho, const ComplexMatrix2& ua, const ComplexMatrix2& ub) {
  const ComplexMatrix4 u = kron(ua, ub);
  return validate((u * rho.matrix() * u.adjoint()).hermitian_part());
}

/// Random Hermitian matrix with standard normal entries.
template <std::size_t N>
CMatrix<N> random_hermitian(CounterRng& rng) {
  CMatrix<N> m;
  for (std::size_t i = 0; i < N; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < N; ++j) {
      m(i, j) = complex{rng.normal(), rng.normal()};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Fixed full-rank mixed state used as an oracle target:
/// 0.5 |psi><psi| + 0.3 |uu><uu| + 0.05 I, psi ~ (0.3, 0.5i, -0.6, 0.2 + 0.1i).
inline DensityOperator reference_mixed_state() {
  ComplexVector<4> psi{0.3, complex{0.0, 0.5}, -0.6, complex{0.2, 0.1}};
  ComplexMatrix4 uu;
  uu(0, 0) = 1.0;
  return validate(0.5 * pure_state(psi).matrix() + 0.3 * uu + 0.05 * ComplexMatrix4::identity());
}

}  // namespace singlet::testing
