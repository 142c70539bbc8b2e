#pragma once

// Two-qubit density operators and the two ensemble observables.
//
// Computational basis order: |uu>, |ud>, |du>, |dd>  (u = spin up, d = down,
// site A is the more significant index).
// Coupled basis order:       |s0>, |t1>, |t0>, |t-1> with
//   |s0>  = (|ud> - |du>)/sqrt2
//   |t1>  = |uu>
//   |t0>  = (|ud> + |du>)/sqrt2
//   |t-1> = |dd>
// States are always stored in the computational basis; the coupled basis is
// a view obtained by conjugating with coupled_basis().

#include <array>
#include <cmath>
#include <sstream>

#include "singlet/error.hpp"
#include "singlet/linalg.hpp"

namespace singlet {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  [[nodiscard]] double norm() const { return std::sqrt(x * x + y * y + z * z); }
  [[nodiscard]] double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

using BlochVector = Vec3;

enum class Site { A, B };

namespace tolerance {
inline constexpr double state_hermitian = 1e-9;
inline constexpr double state_trace = 1e-9;
inline constexpr double state_psd = 1e-9;
inline constexpr double bloch_norm = 1e-9;
inline constexpr double physical_bound = 1e-9;
}  // namespace tolerance

/// Pair of single-qubit Bloch vectors describing rho_A (x) rho_B.
struct ProductState {
  BlochVector bloch_a;
  BlochVector bloch_b;

  /// Angle between the two Bloch vectors; 0 if either vanishes.
  [[nodiscard]] double beta() const {
    const double na = bloch_a.norm();
    const double nb = bloch_b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::acos(std::clamp(bloch_a.dot(bloch_b) / (na * nb), -1.0, 1.0));
  }
};

struct Observables {
  double singlet_fraction = 0.0;
  Vec3 magnetisation;
};

class DensityOperator;
DensityOperator validate(const ComplexMatrix4& matrix);

namespace detail {
DensityOperator make_unchecked(const ComplexMatrix4& matrix);
}

/// Hermitian, unit-trace, positive semidefinite 4x4 operator. Only
/// obtainable through validate() or through operations that preserve the
/// invariants (unitary conjugation, channels, convex mixtures).
class DensityOperator {
 public:
  [[nodiscard]] const ComplexMatrix4& matrix() const { return matrix_; }

 private:
  explicit DensityOperator(const ComplexMatrix4& m) : matrix_(m.hermitian_part()) {}
  friend DensityOperator validate(const ComplexMatrix4& matrix);
  friend DensityOperator detail::make_unchecked(const ComplexMatrix4& matrix);

  ComplexMatrix4 matrix_;
};

namespace detail {
inline DensityOperator make_unchecked(const ComplexMatrix4& matrix) { return DensityOperator(matrix); }
}  // namespace detail

/// Checks the density-operator invariants and names the first one violated.
inline DensityOperator validate(const ComplexMatrix4& matrix) {
  if (!matrix.is_finite()) throw Error(ErrorKind::NonFinite, "state matrix has NaN or Inf entries");
  if (const double defect = hermiticity_defect(matrix); defect > tolerance::state_hermitian) {
    std::ostringstream msg;
    msg << "||rho - rho^dagger||_max = " << defect;
    throw Error(ErrorKind::NotHermitian, msg.str());
  }
  if (const double dev = std::abs(matrix.trace() - complex{1.0, 0.0}); dev > tolerance::state_trace) {
    std::ostringstream msg;
    msg << "|Tr(rho) - 1| = " << dev;
    throw Error(ErrorKind::NotUnitTrace, msg.str());
  }
  const auto eig = hermitian_eigen(matrix);
  if (eig.eigenvalues[0] < -tolerance::state_psd) {
    std::ostringstream msg;
    msg << "minimum eigenvalue " << eig.eigenvalues[0];
    throw Error(ErrorKind::NotPSD, msg.str());
  }
  return DensityOperator(matrix);
}

/// Columns are |s0>, |t1>, |t0>, |t-1> in the computational basis.
inline const ComplexMatrix4& coupled_basis() {
  static const ComplexMatrix4 basis = [] {
    const double h = 1.0 / std::sqrt(2.0);
    return ComplexMatrix4{0.0, 1.0, 0.0, 0.0,  //
                          h,   0.0, h,   0.0,  //
                          -h,  0.0, h,   0.0,  //
                          0.0, 0.0, 0.0, 1.0};
  }();
  return basis;
}

/// Coupled-basis indices.
namespace coupled {
inline constexpr std::size_t s0 = 0;
inline constexpr std::size_t t1 = 1;
inline constexpr std::size_t t0 = 2;
inline constexpr std::size_t tm1 = 3;
}  // namespace coupled

inline ComplexMatrix4 to_coupled_basis(const ComplexMatrix4& computational) {
  return conjugate_by(computational, coupled_basis());
}

inline ComplexMatrix4 to_coupled_basis(const DensityOperator& rho) { return to_coupled_basis(rho.matrix()); }

inline ComplexMatrix4 from_coupled_basis(const ComplexMatrix4& coupled_matrix) {
  return conjugate_by(coupled_matrix, coupled_basis().adjoint());
}

/// <s0|rho|s0>, evaluated directly in the computational basis.
inline double singlet_fraction(const DensityOperator& rho) {
  const auto& m = rho.matrix();
  // |s0> has amplitudes +1/sqrt2 on |ud> and -1/sqrt2 on |du>.
  const double ps = 0.5 * (m(1, 1).real() + m(2, 2).real()) - m(1, 2).real();
  return std::clamp(ps, 0.0, 1.0);
}

/// Single-qubit reduced state rho_A = Tr_B rho or rho_B = Tr_A rho.
inline ComplexMatrix2 partial_trace(const DensityOperator& rho, Site keep) {
  const auto& m = rho.matrix();
  ComplexMatrix2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        if (keep == Site::A)
          out(i, j) += m(2 * i + k, 2 * j + k);
        else
          out(i, j) += m(2 * k + i, 2 * k + j);
      }
  return out;
}

/// Bloch vector v of a qubit state rho = (I + v . sigma)/2.
inline BlochVector bloch_of(const ComplexMatrix2& rho) {
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

inline BlochVector reduced_bloch(const DensityOperator& rho, Site which) {
  return bloch_of(partial_trace(rho, which));
}

/// Tr[S rho] with S = (sigma^A + sigma^B)/2.
inline Vec3 magnetisation(const DensityOperator& rho) {
  return 0.5 * (reduced_bloch(rho, Site::A) + reduced_bloch(rho, Site::B));
}

inline Observables observables(const DensityOperator& rho) { return {singlet_fraction(rho), magnetisation(rho)}; }

/// (I + v . sigma)/2
inline ComplexMatrix2 qubit_state(const BlochVector& v) {
  return ComplexMatrix2{complex{0.5 * (1.0 + v.z), 0.0}, complex{0.5 * v.x, -0.5 * v.y},
                        complex{0.5 * v.x, 0.5 * v.y}, complex{0.5 * (1.0 - v.z), 0.0}};
}

inline void check_bloch(const BlochVector& v, const char* label) {
  if (v.norm() > 1.0 + tolerance::bloch_norm) {
    std::ostringstream msg;
    msg << label << " Bloch norm " << v.norm() << " exceeds 1";
    throw Error(ErrorKind::BlochNormExceeded, msg.str());
  }
}

/// rho_A (x) rho_B
inline DensityOperator product_state_density(const ProductState& p) {
  check_bloch(p.bloch_a, "site A");
  check_bloch(p.bloch_b, "site B");
  return detail::make_unchecked(kron(qubit_state(p.bloch_a), qubit_state(p.bloch_b)));
}

/// (1 - v_A v_B cos beta)/4
inline double separable_singlet_fraction(const ProductState& p) {
  check_bloch(p.bloch_a, "site A");
  check_bloch(p.bloch_b, "site B");
  return 0.25 * (1.0 - p.bloch_a.dot(p.bloch_b));
}

/// Convex combination sum_k w_k rho_k; weights are assumed normalised.
template <typename Range>
DensityOperator mix(const Range& weighted_states) {
  ComplexMatrix4 acc;
  for (const auto& [weight, rho] : weighted_states) acc += weight * rho.matrix();
  return detail::make_unchecked(acc);
}

// A few named states used throughout tests and tools.

inline DensityOperator pure_state(const ComplexVector<4>& psi) {
  double norm2 = 0.0;
  for (const auto& z : psi) norm2 += std::norm(z);
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = psi[i] * std::conj(psi[j]) / norm2;
  return detail::make_unchecked(m);
}

inline DensityOperator singlet_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return pure_state({0.0, h, -h, 0.0});
}

inline DensityOperator maximally_mixed() { return detail::make_unchecked(0.25 * ComplexMatrix4::identity()); }

/// F |s0><s0| + (1 - F)(I - |s0><s0|)/3
inline DensityOperator werner_state(double singlet_weight) {
  if (!(singlet_weight >= 0.0 && singlet_weight <= 1.0))
    throw Error(ErrorKind::OutOfDomain, "Werner singlet weight must lie in [0, 1]");
  const ComplexMatrix4 ps = singlet_state().matrix();
  const ComplexMatrix4 rest = ComplexMatrix4::identity() - ps;
  return detail::make_unchecked(singlet_weight * ps + ((1.0 - singlet_weight) / 3.0) * rest);
}

}  // namespace singlet
