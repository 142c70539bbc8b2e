#pragma once

// Random state families. Sample i of a batch is drawn from its own counter
// stream keyed by (seed, family, i), so batches are reproducible and can be
// generated in parallel without changing a single bit.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singlet/error.hpp"
#include "singlet/parallel.hpp"
#include "singlet/qstate.hpp"
#include "singlet/rng.hpp"
#include "singlet/spun_state.hpp"

namespace singlet {

enum class Family { Spun, Ginibre, Separable, Saturating };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::Spun: return "spun";
    case Family::Ginibre: return "ginibre";
    case Family::Separable: return "separable";
    case Family::Saturating: return "saturating";
  }
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::Spun, Family::Ginibre, Family::Separable, Family::Saturating})
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::Parse, "unknown family '" + std::string(name) + "'");
}

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t count = 1;
  Family family = Family::Spun;
  int threads = 1;
};

struct SeparableMixture {
  std::vector<std::pair<double, ProductState>> components;
};

inline constexpr std::size_t default_max_components = 4;

inline CounterRng sample_stream(std::uint64_t seed, Family family, std::size_t index) {
  return CounterRng(seed, (static_cast<std::uint64_t>(family) << 56) ^ static_cast<std::uint64_t>(index));
}

namespace detail {
inline void check_config(const SamplerConfig& cfg, Family expected) {
  if (cfg.family != expected) {
    throw Error(ErrorKind::OutOfDomain, "sampler called with family " + std::string(to_string(cfg.family)) +
                                            ", expected " + std::string(to_string(expected)));
  }
  if (cfg.count < 1) throw Error(ErrorKind::OutOfDomain, "sample count must be at least 1");
}
}  // namespace detail

/// Flat Dirichlet over (p_s, a, b); m ~ U[-b, b]; eta ~ U[0, 1]; phi ~ U[0, 2pi).
inline SpunState draw_spun(CounterRng& rng) {
  const auto pops = flat_dirichlet<3>(rng);
  SpunState s;
  s.p_s = pops[0];
  s.a = pops[1];
  s.b = pops[2];
  s.m = rng.uniform(-s.b, s.b);
  s.eta = rng.uniform();
  s.phi = 2.0 * std::numbers::pi * rng.uniform();
  return s;
}

/// rho = G G^dagger / Tr(G G^dagger), G with i.i.d. standard complex normal entries.
inline DensityOperator draw_ginibre(CounterRng& rng) {
  ComplexMatrix4 g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = complex{re, im};
    }
  ComplexMatrix4 rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return validate(rho.hermitian_part());
}

/// Uniform in the closed unit ball.
inline BlochVector draw_ball(CounterRng& rng) {
  Vec3 dir;
  double norm = 0.0;
  while (norm == 0.0) {
    dir = {rng.normal(), rng.normal(), rng.normal()};
    norm = dir.norm();
  }
  const double radius = std::cbrt(rng.uniform());
  return (radius / norm) * dir;
}

inline SeparableMixture draw_separable(CounterRng& rng, std::size_t max_components) {
  const std::size_t k = static_cast<std::size_t>(rng.uniform_int(1, max_components));
  std::vector<double> weights(k);
  double total = 0.0;
  for (auto& w : weights) {
    w = rng.exponential();
    total += w;
  }
  SeparableMixture mix;
  mix.components.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    ProductState p{draw_ball(rng), draw_ball(rng)};
    mix.components.emplace_back(weights[i] / total, p);
  }
  return mix;
}

inline DensityOperator to_density(const SeparableMixture& mixture) {
  ComplexMatrix4 acc;
  for (const auto& [weight, product] : mixture.components) acc += weight * product_state_density(product).matrix();
  return detail::make_unchecked(acc);
}

/// Saturating family: p_s |s0><s0| + (1 - p_s + m)/2 |t1><t1| + (1 - p_s - m)/2 |t-1><t-1|.
/// Its concurrence equals max[p_s - sqrt((1 - p_s)^2 - m^2), 0].
inline SpunState saturating_spun(double p_s, double m) {
  if (!(p_s >= 0.0 && p_s <= 1.0)) throw Error(ErrorKind::OutOfDomain, "p_s outside [0, 1]");
  if (p_s + std::abs(m) > 1.0 + tolerance::physical_bound) {
    std::ostringstream msg;
    msg << "p_s + |m| = " << p_s + std::abs(m) << " exceeds 1";
    throw Error(ErrorKind::Unphysical, msg.str());
  }
  const double b = 1.0 - p_s;
  return SpunState{p_s, 0.0, b, std::clamp(m, -b, b), 0.0, 0.0};
}

inline DensityOperator saturating_state(double p_s, double m) { return to_density(saturating_spun(p_s, m)); }

/// (p_s, |m|) uniform over the physical triangle p_s + |m| <= 1.
inline std::pair<double, double> draw_feasible_point(CounterRng& rng) {
  const auto w = flat_dirichlet<3>(rng);
  return {w[0], w[1]};
}

inline std::vector<SpunState> sample_spun(const SamplerConfig& cfg) {
  detail::check_config(cfg, Family::Spun);
  return parallel_map(cfg.count, cfg.threads, [&](std::size_t i) {
    auto rng = sample_stream(cfg.seed, Family::Spun, i);
    return draw_spun(rng);
  });
}

inline std::vector<DensityOperator> sample_ginibre(const SamplerConfig& cfg) {
  detail::check_config(cfg, Family::Ginibre);
  // DensityOperator has no default constructor; go through the matrix.
  auto matrices = parallel_map(cfg.count, cfg.threads, [&](std::size_t i) {
    auto rng = sample_stream(cfg.seed, Family::Ginibre, i);
    return draw_ginibre(rng).matrix();
  });
  std::vector<DensityOperator> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(detail::make_unchecked(m));
  return out;
}

inline std::vector<SeparableMixture> sample_separable(const SamplerConfig& cfg,
                                                      std::size_t max_components = default_max_components) {
  detail::check_config(cfg, Family::Separable);
  if (max_components < 1) throw Error(ErrorKind::OutOfDomain, "max_components must be at least 1");
  return parallel_map(cfg.count, cfg.threads, [&](std::size_t i) {
    auto rng = sample_stream(cfg.seed, Family::Separable, i);
    return draw_separable(rng, max_components);
  });
}

inline std::vector<SpunState> sample_saturating(const SamplerConfig& cfg) {
  detail::check_config(cfg, Family::Saturating);
  return parallel_map(cfg.count, cfg.threads, [&](std::size_t i) {
    auto rng = sample_stream(cfg.seed, Family::Saturating, i);
    const auto [p_s, m] = draw_feasible_point(rng);
    return saturating_spun(p_s, m);
  });
}

}  // namespace singlet
