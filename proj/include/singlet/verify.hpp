#pragma once

// Self-verification suite: every bound and invariant re-checked on fresh
// random samples, reported per check with the worst violation observed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "singlet/bounds.hpp"
#include "singlet/concurrence.hpp"
#include "singlet/harness.hpp"
#include "singlet/sampling.hpp"
#include "singlet/twirl.hpp"

namespace singlet {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // largest violation (or deviation) seen
  double tolerance = 0.0;
  std::size_t cases = 0;
  double seconds = 0.0;
};

/// Test hook: deliberately corrupt one ingredient to prove the suite can fail.
enum class InjectedFault { None, InflatedBound };

struct VerifyOptions {
  std::size_t samples = 20000;
  std::uint64_t seed = 1;
  int threads = 1;
  int supremum_resolution = 200;
  InjectedFault fault = InjectedFault::None;
};

namespace detail {

template <typename Fn>
CheckResult timed_check(std::string name, double tol, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = body();
  r.name = std::move(name);
  r.tolerance = tol;
  r.passed = r.worst <= tol;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Largest value of fn(i) over i in [0, count), evaluated in parallel.
template <typename Fn>
double parallel_max(std::size_t count, int threads, Fn&& fn) {
  const auto values = parallel_map(count, threads, std::forward<Fn>(fn));
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, v);
  return worst;
}

}  // namespace detail

inline CheckResult check_wootters_oracle() {
  return detail::timed_check("wootters_oracle", 1e-8, [] {
    CheckResult r;
    auto dev = [&r](double got, double want) {
      r.worst = std::max(r.worst, std::abs(got - want));
      ++r.cases;
    };
    dev(wootters_concurrence(singlet_state()).concurrence, 1.0);
    dev(wootters_concurrence(maximally_mixed()).concurrence, 0.0);
    for (double f : {0.3, 0.5, 0.75, 1.0}) dev(wootters_concurrence(werner_state(f)).concurrence, std::max(0.0, 2 * f - 1));
    for (std::size_t i = 0; i < 100; ++i) {
      auto rng = sample_stream(7, Family::Separable, i);
      const ProductState p{draw_ball(rng), draw_ball(rng)};
      dev(wootters_concurrence(product_state_density(p)).concurrence, 0.0);
    }
    return r;
  });
}

inline CheckResult check_closed_form(const VerifyOptions& opt) {
  return detail::timed_check("closed_form_agreement", 1e-8, [&] {
    CheckResult r;
    r.cases = opt.samples;
    r.worst = detail::parallel_max(opt.samples, opt.threads, [&](std::size_t i) {
      auto rng = sample_stream(opt.seed, Family::Spun, i);
      const SpunState s = draw_spun(rng);
      const auto closed = spun_concurrence_closed_form(s);
      const auto generic = wootters_concurrence(to_density(s));
      double d = std::abs(closed.concurrence - generic.concurrence);
      for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(closed.lambdas[k] - generic.lambdas[k]));
      return d;
    });
    return r;
  });
}

inline CheckResult check_twirl_oracle(const VerifyOptions& opt) {
  return detail::timed_check("twirl_oracle", 1e-10, [&] {
    CheckResult r;
    const std::size_t n = std::max<std::size_t>(opt.samples / 10, 1);
    r.cases = n;
    r.worst = detail::parallel_max(n, opt.threads, [&](std::size_t i) {
      const DensityOperator rho = draw_state(opt.seed + 1, Family::Ginibre, i);
      const DensityOperator analytic = twirl_analytic(rho);
      const double to_numeric = max_abs_diff(analytic.matrix(), twirl_numeric(rho, default_twirl_points).matrix());
      const double idempotence = max_abs_diff(twirl_analytic(analytic).matrix(), analytic.matrix());
      return std::max(to_numeric, idempotence);
    });
    return r;
  });
}

inline CheckResult check_twirl_monotonicity(const VerifyOptions& opt) {
  return detail::timed_check("twirl_monotonicity", 1e-9, [&] {
    CheckResult r;
    r.cases = opt.samples;
    r.worst = detail::parallel_max(opt.samples, opt.threads, [&](std::size_t i) {
      const DensityOperator rho = draw_state(opt.seed + 2, Family::Ginibre, i);
      const double before = wootters_concurrence(rho).concurrence;
      const double after = wootters_concurrence(twirl_analytic(rho)).concurrence;
      return std::max(0.0, after - before);
    });
    return r;
  });
}

inline CheckResult check_separable_bound(const VerifyOptions& opt) {
  return detail::timed_check("separable_bound", 1e-9, [&] {
    CheckResult r;
    r.cases = opt.samples;
    r.worst = detail::parallel_max(opt.samples, opt.threads, [&](std::size_t i) {
      const SampleRecord rec = make_record(i, Family::Separable, draw_state(opt.seed + 3, Family::Separable, i));
      const double excess = std::max(0.0, rec.p_s - 0.5 * (1.0 - rec.m_abs * rec.m_abs));
      // A certification of a separable state is an outright failure.
      return rec.certified ? 1.0 : excess;
    });
    return r;
  });
}

inline CheckResult check_bound_validity(const VerifyOptions& opt) {
  const double inflation = opt.fault == InjectedFault::InflatedBound ? 0.05 : 0.0;
  return detail::timed_check("bound_validity", 1e-9, [&] {
    CheckResult r;
    auto violation = [&](const SampleRecord& rec) {
      const double bound = min_concurrence_bound(rec.p_s, rec.m_abs) + (rec.certified ? inflation : 0.0);
      return std::max(0.0, bound - rec.concurrence);
    };
    const std::size_t ginibre = std::max<std::size_t>(opt.samples / 10, 1);
    r.cases = opt.samples + ginibre;
    const double spun = detail::parallel_max(opt.samples, opt.threads, [&](std::size_t i) {
      return violation(make_record(i, Family::Spun, draw_state(opt.seed + 4, Family::Spun, i)));
    });
    const double gin = detail::parallel_max(ginibre, opt.threads, [&](std::size_t i) {
      return violation(make_record(i, Family::Ginibre, draw_state(opt.seed + 5, Family::Ginibre, i)));
    });
    r.worst = std::max(spun, gin);
    return r;
  });
}

inline CheckResult check_saturation(std::size_t grid = 50) {
  return detail::timed_check("saturation_equality", 1e-8, [&] {
    CheckResult r;
    for (std::size_t i = 0; i < grid; ++i) {
      const double p_s = static_cast<double>(i) / (grid - 1);
      for (std::size_t j = 0; j < grid; ++j) {
        const double m = (1.0 - p_s) * static_cast<double>(j) / (grid - 1);
        const double c = wootters_concurrence(saturating_state(p_s, m)).concurrence;
        r.worst = std::max(r.worst, std::abs(c - min_concurrence_bound(p_s, m)));
        ++r.cases;
      }
    }
    r.worst = std::max(r.worst, std::abs(wootters_concurrence(saturating_state(0.85, 0.0)).concurrence - 0.7));
    ++r.cases;
    return r;
  });
}

inline CheckResult check_supremum(const VerifyOptions& opt) {
  return detail::timed_check("supremum", 1e-4, [&] {
    CheckResult r;
    for (double m : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
      for (auto reading : {CoherenceReading::EtaSquared, CoherenceReading::EtaLinear}) {
        const double sup = supremum_check(m, opt.supremum_resolution, reading);
        r.worst = std::max(r.worst, std::abs(sup - 0.5 * (1.0 - m * m)));
        ++r.cases;
      }
    }
    return r;
  });
}

/// Entanglement condition of a spun state vs the sign of its closed-form concurrence.
/// Disagreements inside the 1e-10 boundary band are not counted.
inline CheckResult check_condition_agreement(const VerifyOptions& opt) {
  return detail::timed_check("condition_agreement", 0.0, [&] {
    CheckResult r;
    r.cases = opt.samples;
    r.worst = detail::parallel_max(opt.samples, opt.threads, [&](std::size_t i) {
      auto rng = sample_stream(opt.seed + 6, Family::Spun, i);
      const SpunState s = draw_spun(rng);
      if (std::abs(spun_condition_margin(s)) <= tolerance::spun_boundary) return 0.0;
      const bool by_condition = spun_entanglement_condition(s);
      const bool by_concurrence = spun_concurrence_expression(s) > 0.0;
      return by_condition == by_concurrence ? 0.0 : 1.0;
    });
    return r;
  });
}

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  return {check_wootters_oracle(),     check_closed_form(opt),       check_twirl_oracle(opt),
          check_twirl_monotonicity(opt), check_separable_bound(opt), check_bound_validity(opt),
          check_saturation(),          check_supremum(opt),          check_condition_agreement(opt)};
}

}  // namespace singlet
