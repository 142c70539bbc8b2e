#pragma once

#include <cmath>
#include <numbers>
#include <sstream>

#include "singlet/error.hpp"
#include "singlet/qstate.hpp"

namespace singlet {

namespace tolerance {
inline constexpr double spun_normalisation = 1e-12;
inline constexpr double spun_populations = 1e-12;
}  // namespace tolerance

/// Six-parameter form of a z-twirled state with magnetisation along z:
///
///   p_s |s0><s0| + a |t0><t0| + c e^{i phi} |s0><t0| + c e^{-i phi} |t0><s0|
///     + (b + m)/2 |t1><t1| + (b - m)/2 |t-1><t-1|,     c = eta sqrt(a p_s).
///
/// m is the signed z-magnetisation; bounds consume |m|.
struct SpunState {
  double p_s = 0.0;
  double a = 0.0;
  double b = 0.0;
  double m = 0.0;
  double eta = 0.0;
  double phi = 0.0;

  /// |<s0|rho|t0>|
  [[nodiscard]] double coherence() const { return eta * std::sqrt(std::max(a, 0.0) * std::max(p_s, 0.0)); }
};

inline void check_spun_state(const SpunState& s) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidSpunState, what); };
  for (double v : {s.p_s, s.a, s.b, s.m, s.eta, s.phi})
    if (!std::isfinite(v)) fail("non-finite parameter");
  const double tol = tolerance::spun_populations;
  if (s.p_s < -tol || s.a < -tol || s.b < -tol) fail("negative population");
  if (const double dev = std::abs(s.p_s + s.a + s.b - 1.0); dev > tolerance::spun_normalisation) {
    std::ostringstream msg;
    msg << "p_s + a + b deviates from 1 by " << dev;
    fail(msg.str());
  }
  if (std::abs(s.m) > s.b + tol) {
    std::ostringstream msg;
    msg << "|m| = " << std::abs(s.m) << " exceeds b = " << s.b;
    fail(msg.str());
  }
  if (s.eta < -tol || s.eta > 1.0 + tol) fail("eta outside [0, 1]");
}

/// Coupled-basis matrix of a spun state (order s0, t1, t0, t-1).
inline ComplexMatrix4 spun_coupled_matrix(const SpunState& s) {
  check_spun_state(s);
  const double up = std::max(0.5 * (s.b + s.m), 0.0);
  const double down = std::max(0.5 * (s.b - s.m), 0.0);
  const complex coh = std::polar(s.coherence(), s.phi);
  ComplexMatrix4 c;
  c(coupled::s0, coupled::s0) = std::max(s.p_s, 0.0);
  c(coupled::t1, coupled::t1) = up;
  c(coupled::t0, coupled::t0) = std::max(s.a, 0.0);
  c(coupled::tm1, coupled::tm1) = down;
  c(coupled::s0, coupled::t0) = coh;
  c(coupled::t0, coupled::s0) = std::conj(coh);
  return c;
}

inline DensityOperator to_density(const SpunState& s) { return validate(from_coupled_basis(spun_coupled_matrix(s))); }

}  // namespace singlet
