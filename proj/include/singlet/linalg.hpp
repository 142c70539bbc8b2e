#pragma once

// Fixed-size dense complex matrices for the 2x2 and 4x4 Hermitian problems of
// two-qubit states. Storage is row-major std::complex<double>.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>

#include "singlet/error.hpp"

namespace singlet {

using complex = std::complex<double>;

template <std::size_t N>
class CMatrix {
 public:
  static constexpr std::size_t dim = N;

  CMatrix() { entries_.fill(complex{0.0, 0.0}); }

  /// Row-major initialisation; missing entries are zero.
  CMatrix(std::initializer_list<complex> row_major) {
    entries_.fill(complex{0.0, 0.0});
    std::copy_n(row_major.begin(), std::min(row_major.size(), N * N), entries_.begin());
  }

  static CMatrix identity() {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMatrix diagonal(const std::array<double, N>& d) {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  complex& operator()(std::size_t row, std::size_t col) { return entries_[row * N + col]; }
  const complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * N + col]; }

  [[nodiscard]] const std::array<complex, N * N>& entries() const { return entries_; }

  [[nodiscard]] CMatrix adjoint() const {
    CMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
  }

  [[nodiscard]] CMatrix conjugate() const {
    CMatrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.entries_[k] = std::conj(entries_[k]);
    return out;
  }

  [[nodiscard]] CMatrix transpose() const {
    CMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(i, j) = (*this)(j, i);
    return out;
  }

  [[nodiscard]] complex trace() const {
    complex t{0.0, 0.0};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// (M + M^dagger) / 2
  [[nodiscard]] CMatrix hermitian_part() const {
    CMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
      out(i, i) = (*this)(i, i).real();
      for (std::size_t j = i + 1; j < N; ++j) {
        const complex v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
        out(i, j) = v;
        out(j, i) = std::conj(v);
      }
    }
    return out;
  }

  [[nodiscard]] bool is_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  CMatrix& operator+=(const CMatrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) entries_[k] += rhs.entries_[k];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) entries_[k] -= rhs.entries_[k];
    return *this;
  }
  CMatrix& operator*=(complex s) {
    for (auto& z : entries_) z *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
  friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
  friend CMatrix operator*(CMatrix lhs, complex s) { return lhs *= s; }
  friend CMatrix operator*(complex s, CMatrix rhs) { return rhs *= s; }
  friend CMatrix operator*(double s, CMatrix rhs) { return rhs *= complex{s, 0.0}; }

  friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
    CMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const complex l = lhs(i, k);
        if (l == complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < N; ++j) out(i, j) += l * rhs(k, j);
      }
    return out;
  }

  friend bool operator==(const CMatrix& lhs, const CMatrix& rhs) { return lhs.entries_ == rhs.entries_; }

 private:
  std::array<complex, N * N> entries_;
};

using ComplexMatrix2 = CMatrix<2>;
using ComplexMatrix4 = CMatrix<4>;

template <std::size_t N>
using ComplexVector = std::array<complex, N>;

/// Largest elementwise modulus of (a - b).
template <std::size_t N>
double max_abs_diff(const CMatrix<N>& a, const CMatrix<N>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < N * N; ++k) worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

template <std::size_t N>
double max_abs(const CMatrix<N>& a) {
  return max_abs_diff(a, CMatrix<N>{});
}

template <std::size_t N>
double frobenius_norm(const CMatrix<N>& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

/// ||M - M^dagger||_max
template <std::size_t N>
double hermiticity_defect(const CMatrix<N>& m) {
  return max_abs_diff(m, m.adjoint());
}

/// Kronecker product A (x) B with A acting on the more significant index.
inline ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

/// Returns u^dagger * a * u.
template <std::size_t N>
CMatrix<N> conjugate_by(const CMatrix<N>& a, const CMatrix<N>& u) {
  return u.adjoint() * a * u;
}

template <std::size_t N>
struct HermitianEigenResult {
  std::array<double, N> eigenvalues{};             // ascending
  std::array<ComplexVector<N>, N> eigenvectors{};  // eigenvectors[k] pairs with eigenvalues[k]

  /// V diag(lambda) V^dagger
  [[nodiscard]] CMatrix<N> reconstruct() const {
    CMatrix<N> out;
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          out(i, j) += eigenvalues[k] * eigenvectors[k][i] * std::conj(eigenvectors[k][j]);
    return out;
  }
};

namespace tolerance {
inline constexpr double hermitian_input = 1e-9;
inline constexpr double jacobi_off_diagonal = 1e-13;
inline constexpr int jacobi_max_sweeps = 100;
inline constexpr double psd_clip = 1e-10;
}  // namespace tolerance

/// Cyclic complex Jacobi eigensolver for small Hermitian matrices.
///
/// Each rotation first removes the phase of the pivot a_pq with
/// diag(1, e^{-i arg a_pq}) and then applies the real symmetric Jacobi
/// rotation. Pivots that are exactly zero are skipped, so exact block
/// structure (e.g. S_z sectors) survives untouched and small eigenvalues in
/// decoupled blocks keep full relative accuracy.
template <std::size_t N>
HermitianEigenResult<N> hermitian_eigen(const CMatrix<N>& m) {
  if (!m.is_finite()) throw Error(ErrorKind::NonFinite, "matrix has NaN or Inf entries");
  if (const double defect = hermiticity_defect(m); defect > tolerance::hermitian_input) {
    std::ostringstream msg;
    msg << "||M - M^dagger||_max = " << defect << " exceeds " << tolerance::hermitian_input;
    throw Error(ErrorKind::NotHermitian, msg.str());
  }

  CMatrix<N> a = m.hermitian_part();
  CMatrix<N> v = CMatrix<N>::identity();
  const double scale = std::max(1.0, frobenius_norm(a));

  auto off_norm = [&a] {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < tolerance::jacobi_max_sweeps; ++sweep) {
    if (off_norm() < tolerance::jacobi_off_diagonal * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const complex phase = std::conj(apq) / r;  // e^{-i alpha}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J = [[c, s], [-s e^{-i alpha}, c e^{-i alpha}]] on (p, q); A <- J^dagger A J, V <- V J.
        const complex s_phase = s * phase;
        const complex c_phase = c * phase;
        for (std::size_t i = 0; i < N; ++i) {
          const complex aip = a(i, p);
          const complex aiq = a(i, q);
          a(i, p) = c * aip - s_phase * aiq;
          a(i, q) = s * aip + c_phase * aiq;
          const complex vip = v(i, p);
          const complex viq = v(i, q);
          v(i, p) = c * vip - s_phase * viq;
          v(i, q) = s * vip + c_phase * viq;
        }
        for (std::size_t j = 0; j < N; ++j) {
          const complex apj = a(p, j);
          const complex aqj = a(q, j);
          a(p, j) = c * apj - std::conj(s_phase) * aqj;
          a(q, j) = s * apj + std::conj(c_phase) * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged && off_norm() >= tolerance::jacobi_off_diagonal * scale) {
    throw Error(ErrorKind::NoConvergence, "Jacobi iteration exceeded the sweep cap");
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigenResult<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) out.eigenvectors[k][i] = v(i, order[k]);
  }
  return out;
}

/// Rebuilds V f(diag) V^dagger from an eigendecomposition.
template <std::size_t N, typename F>
CMatrix<N> apply_spectral(const HermitianEigenResult<N>& eig, F&& f) {
  CMatrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const double fk = f(eig.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(i, j) += fk * eig.eigenvectors[k][i] * std::conj(eig.eigenvectors[k][j]);
  }
  return out.hermitian_part();
}

/// Clips eigenvalues in [-psd_clip, 0) to zero; anything lower is NotPSD.
template <std::size_t N>
std::array<double, N> clip_psd_spectrum(std::array<double, N> eigenvalues) {
  for (double& ev : eigenvalues) {
    if (ev < -tolerance::psd_clip) {
      std::ostringstream msg;
      msg << "eigenvalue " << ev << " below " << -tolerance::psd_clip;
      throw Error(ErrorKind::NotPSD, msg.str());
    }
    ev = std::max(ev, 0.0);
  }
  return eigenvalues;
}

/// Principal square root of a Hermitian positive semidefinite matrix.
template <std::size_t N>
CMatrix<N> matrix_sqrt_psd(const CMatrix<N>& m) {
  auto eig = hermitian_eigen(m);
  eig.eigenvalues = clip_psd_spectrum(eig.eigenvalues);
  return apply_spectral(eig, [](double ev) { return std::sqrt(ev); });
}

}  // namespace singlet
