#pragma once

// Uniform average of a two-qubit state over joint rotations about z,
//   (1/2pi) int dtheta U_z(theta)^dagger rho U_z(theta),  U_z(theta) = exp(i theta S_z).
// It removes every coherence between different total-S_z sectors. Only the
// populations and the s0 <-> t0 coherence survive.

#include <cmath>
#include <numbers>

#include "singlet/error.hpp"
#include "singlet/linalg.hpp"
#include "singlet/qstate.hpp"

namespace singlet {

inline constexpr int default_twirl_points = 16;

/// S_z eigenvalue of each computational basis state |uu>, |ud>, |du>, |dd>.
inline constexpr std::array<int, 4> total_sz{1, 0, 0, -1};

/// Projection onto the S_z-block-diagonal part. The {|ud>, |du>} block is the
/// same subspace as {|s0>, |t0>}, so this is the coupled-basis element zeroing
/// carried out without leaving the computational basis.
inline DensityOperator twirl_analytic(const DensityOperator& rho) {
  ComplexMatrix4 out;
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (total_sz[i] == total_sz[j]) out(i, j) = m(i, j);
  return detail::make_unchecked(out);
}

inline ComplexMatrix4 rotation_z(double theta) {
  ComplexMatrix4 u;
  for (std::size_t i = 0; i < 4; ++i) u(i, i) = std::polar(1.0, theta * total_sz[i]);
  return u;
}

/// Uniform-grid quadrature of the rotation average. The integrand only
/// contains harmonics e^{ik theta} with |k| <= 2, so any grid of at least five
/// points is exact up to rounding.
inline DensityOperator twirl_numeric(const DensityOperator& rho, int n_points = default_twirl_points) {
  if (n_points < 8) throw Error(ErrorKind::OutOfDomain, "twirl_numeric needs at least 8 grid points");
  ComplexMatrix4 acc;
  for (int k = 0; k < n_points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_points;
    acc += conjugate_by(rho.matrix(), rotation_z(theta));
  }
  return detail::make_unchecked((1.0 / n_points) * acc);
}

/// exp(-i angle/2 axis . sigma); rotates Bloch vectors by `angle` about the unit `axis`.
inline ComplexMatrix2 su2_rotation(const Vec3& axis, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  return ComplexMatrix2{complex{c, -s * axis.z}, complex{-s * axis.y, -s * axis.x},
                        complex{s * axis.y, -s * axis.x}, complex{c, s * axis.z}};
}

/// Single-qubit rotation taking direction `n` onto +z (identity for n = 0).
inline ComplexMatrix2 rotation_to_z(const Vec3& n) {
  const double norm = n.norm();
  if (norm == 0.0) return ComplexMatrix2::identity();
  const Vec3 u = (1.0 / norm) * n;
  const Vec3 cross{u.y, -u.x, 0.0};  // u x z
  const double sin_angle = cross.norm();
  const double angle = std::atan2(sin_angle, u.z);
  if (sin_angle == 0.0) {
    return u.z > 0.0 ? ComplexMatrix2::identity() : su2_rotation({1.0, 0.0, 0.0}, std::numbers::pi);
  }
  return su2_rotation((1.0 / sin_angle) * cross, angle);
}

/// U rho U^dagger for the joint local unitary U = V (x) V.
inline DensityOperator apply_joint_rotation(const DensityOperator& rho, const ComplexMatrix2& v) {
  const ComplexMatrix4 u = kron(v, v);
  return detail::make_unchecked(u * rho.matrix() * u.adjoint());
}

/// Rotates the state so its magnetisation points along +z, then twirls about z.
/// The output has magnetisation (0, 0, |m|) and the same singlet fraction.
inline DensityOperator twirl_about_magnetisation(const DensityOperator& rho) {
  return twirl_analytic(apply_joint_rotation(rho, rotation_to_z(magnetisation(rho))));
}

}  // namespace singlet
