#pragma once

// Closed-form entanglement bounds in terms of the singlet fraction p_s and the
// polarisation m = |m|.
//
//   physical limit        p_s <= 1 - m
//   singlet bound         p_s >  (1 - m^2)/2            (sufficient and tight)
//   minimum concurrence   C   >= max[p_s - sqrt((1 - p_s)^2 - m^2), 0]
//   iso-concurrence line  p_s >= (1 - C^2 - m^2) / (2 (1 - C)),  m <= 1 - C

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string_view>

#include "singlet/error.hpp"
#include "singlet/qstate.hpp"
#include "singlet/spun_state.hpp"

namespace singlet {

namespace tolerance {
/// Certification requires p_s to exceed the singlet bound by more than this.
inline constexpr double certification_margin = 1e-12;
inline constexpr double spun_boundary = 1e-10;
}  // namespace tolerance

enum class WitnessMode { FullVector, ZOnly };

inline std::string_view to_string(WitnessMode mode) { return mode == WitnessMode::FullVector ? "full-vector" : "z-only"; }

struct WitnessVerdict {
  double min_concurrence = 0.0;
  bool entangled_certified = false;
  double singlet_bound_value = 0.0;
  bool physical = true;
  WitnessMode mode = WitnessMode::FullVector;
  /// Tight only when the full magnetisation vector is known.
  bool tight = true;
  double polarisation = 0.0;
  double singlet_fraction = 0.0;
};

namespace detail {
inline void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << name << " = " << v << " outside [0, 1]";
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
}

inline void check_physical(double p_s, double m) {
  if (p_s > 1.0 - m + tolerance::physical_bound) {
    std::ostringstream msg;
    msg << "p_s = " << p_s << " exceeds the physical limit 1 - m = " << 1.0 - m
        << " (normalisation requires p_s <= 1 - |m|)";
    throw Error(ErrorKind::Unphysical, msg.str());
  }
}
}  // namespace detail

/// (1 - m^2)/2
inline double singlet_bound(double m) {
  detail::check_unit_interval(m, "m");
  return 0.5 * (1.0 - m * m);
}

inline bool is_physical(double p_s, double m) { return p_s <= 1.0 - m + tolerance::physical_bound; }

/// max[p_s - sqrt((1 - p_s)^2 - m^2), 0]; exactly zero on and below the singlet bound.
inline double min_concurrence_bound(double p_s, double m) {
  detail::check_unit_interval(p_s, "p_s");
  detail::check_unit_interval(m, "m");
  detail::check_physical(p_s, m);
  if (p_s <= singlet_bound(m)) return 0.0;
  const double q = 1.0 - p_s;
  const double gap = std::max((q - m) * (q + m), 0.0);
  return std::clamp(p_s - std::sqrt(gap), 0.0, 1.0);
}

/// Smallest p_s compatible with concurrence >= C at polarisation m.
inline double contour_min_ps(double concurrence, double m) {
  if (!(concurrence >= 0.0 && concurrence < 1.0)) {
    throw Error(ErrorKind::OutOfDomain, "target concurrence must lie in [0, 1)");
  }
  detail::check_unit_interval(m, "m");
  if (m > 1.0 - concurrence + 1e-12) {
    std::ostringstream msg;
    msg << "m = " << m << " exceeds 1 - C = " << 1.0 - concurrence;
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
  return (1.0 - concurrence * concurrence - m * m) / (2.0 * (1.0 - concurrence));
}

/// Curve p_s = (1 + sqrt(1 + 3 C^2))/3 from the generalised (Mintert-type)
/// witness restricted to a = 0 states. Reference only; never used to certify.
inline double mintert_reference_ps(double concurrence) {
  return (1.0 + std::sqrt(1.0 + 3.0 * concurrence * concurrence)) / 3.0;
}

/// How the coherence enters the denominator of the spun-state threshold.
enum class CoherenceReading {
  EtaSquared,  // 1 - 2a + 2a eta^2 sin^2 phi
  EtaLinear,   // 1 - 2a + 2a eta sin^2 phi
};

struct SpunThreshold {
  double numerator = 0.0;    // (1 - 2a - m^2)/2
  double denominator = 0.0;  // 1 - 2a + 2a eta^2 sin^2 phi
  /// numerator / denominator; meaningful as a lower bound on p_s only when denominator > 0.
  [[nodiscard]] double value() const { return numerator / denominator; }
};

inline SpunThreshold spun_threshold(double a, double eta, double phi, double m,
                                    CoherenceReading reading = CoherenceReading::EtaSquared) {
  const double sin_phi = std::sin(phi);
  const double coherence = reading == CoherenceReading::EtaSquared ? eta * eta : eta;
  return {0.5 * (1.0 - 2.0 * a - m * m), 1.0 - 2.0 * a + 2.0 * a * coherence * sin_phi * sin_phi};
}

/// Entanglement condition of a spun state, p_s > (1 - 2a - m^2) / (2 (1 - 2a + 2a eta^2 sin^2 phi)).
///
/// Evaluated in the cross-multiplied form p_s * D > N, which is equivalent to
/// a positive closed-form concurrence for every valid state, including a > 1/2
/// where D can be negative and the divided form would flip direction.
inline bool spun_entanglement_condition(const SpunState& s) {
  check_spun_state(s);
  const auto th = spun_threshold(s.a, s.eta, s.phi, s.m);
  return s.p_s * th.denominator > th.numerator;
}

/// Signed distance of a spun state from the entanglement threshold (p_s D - N).
inline double spun_condition_margin(const SpunState& s) {
  check_spun_state(s);
  const auto th = spun_threshold(s.a, s.eta, s.phi, s.m);
  return s.p_s * th.denominator - th.numerator;
}

/// Brute-force maximum of the spun-state threshold over a ∈ [0, 1 - m],
/// eta ∈ [0, 1], phi ∈ [0, 2pi) on a uniform grid with `resolution` points per
/// axis. Grid points where the denominator is not positive are skipped: there
/// the condition bounds p_s from above and does not enter the supremum.
inline double supremum_check(double m, int resolution, CoherenceReading reading = CoherenceReading::EtaSquared) {
  detail::check_unit_interval(m, "m");
  if (resolution < 2) throw Error(ErrorKind::OutOfDomain, "grid resolution must be at least 2");
  const double a_max = 1.0 - m;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < resolution; ++i) {
    const double a = a_max * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      const double eta = static_cast<double>(j) / (resolution - 1);
      for (int k = 0; k < resolution; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / resolution;
        const auto th = spun_threshold(a, eta, phi, m, reading);
        if (th.denominator <= 0.0) continue;
        best = std::max(best, th.value());
      }
    }
  }
  return best;
}

/// Certifies entanglement from measured observables. Never throws on
/// unphysical input; the verdict is marked non-physical and uncertified.
inline WitnessVerdict assess(const Observables& obs, WitnessMode mode) {
  detail::check_unit_interval(obs.singlet_fraction, "p_s");
  double pol = mode == WitnessMode::FullVector ? obs.magnetisation.norm() : std::abs(obs.magnetisation.z);
  if (pol > 1.0 && pol <= 1.0 + tolerance::bloch_norm) pol = 1.0;
  detail::check_unit_interval(pol, "|m|");

  WitnessVerdict v;
  v.mode = mode;
  v.tight = mode == WitnessMode::FullVector;
  v.polarisation = pol;
  v.singlet_fraction = obs.singlet_fraction;
  v.singlet_bound_value = singlet_bound(pol);
  v.physical = is_physical(obs.singlet_fraction, pol);
  if (!v.physical) return v;
  v.entangled_certified = obs.singlet_fraction - v.singlet_bound_value > tolerance::certification_margin;
  v.min_concurrence = v.entangled_certified ? min_concurrence_bound(obs.singlet_fraction, pol) : 0.0;
  if (v.min_concurrence <= 0.0) v.entangled_certified = false;
  return v;
}

/// As assess(), but unphysical observables are an error.
inline WitnessVerdict witness(const Observables& obs, WitnessMode mode) {
  const auto v = assess(obs, mode);
  if (!v.physical) detail::check_physical(v.singlet_fraction, v.polarisation);
  return v;
}

}  // namespace singlet
