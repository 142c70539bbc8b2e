#pragma once

// Monte-Carlo experiment: per-sample records over the (|m|, p_s) plane and
// empirical iso-concurrence contours, with CSV writers for both.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "singlet/bounds.hpp"
#include "singlet/concurrence.hpp"
#include "singlet/qstate.hpp"
#include "singlet/sampling.hpp"

namespace singlet {

struct SampleRecord {
  std::size_t index = 0;
  Family family = Family::Spun;
  double m_abs = 0.0;
  double p_s = 0.0;
  double concurrence = 0.0;
  bool certified = false;
  double bound_value = 0.0;
};

struct ContourRecord {
  double target_concurrence = 0.0;
  double m = 0.0;  // bin centre
  /// Largest p_s among sampled states in the bin whose concurrence misses the
  /// target: above it every sampled state reaches the target. NaN if none.
  double min_ps_empirical = std::numeric_limits<double>::quiet_NaN();
  double min_ps_analytic = 0.0;
  std::size_t qualifying = 0;  // states in the bin that miss the target
};

inline constexpr std::string_view sample_csv_header = "index,family,m_abs,p_s,concurrence,certified,bound_value";
inline constexpr std::string_view contour_csv_header = "target_c,m_bin_center,min_ps_empirical,min_ps_analytic";
inline constexpr double default_bin_width = 0.02;
inline constexpr std::size_t insufficient_samples_threshold = 50;
/// Concurrence at or below this counts as zero (a separable sample).
inline constexpr double separable_concurrence = 1e-9;

inline SampleRecord make_record(std::size_t index, Family family, const DensityOperator& rho) {
  SampleRecord r;
  r.index = index;
  r.family = family;
  const Observables obs = observables(rho);
  r.p_s = obs.singlet_fraction;
  r.m_abs = std::min(obs.magnetisation.norm(), 1.0);
  r.concurrence = wootters_concurrence(rho).concurrence;
  const auto verdict = assess({r.p_s, obs.magnetisation}, WitnessMode::FullVector);
  r.bound_value = verdict.singlet_bound_value;
  r.certified = verdict.entangled_certified;
  return r;
}

inline DensityOperator draw_state(std::uint64_t seed, Family family, std::size_t index) {
  auto rng = sample_stream(seed, family, index);
  switch (family) {
    case Family::Spun: return to_density(draw_spun(rng));
    case Family::Ginibre: return draw_ginibre(rng);
    case Family::Separable: return to_density(draw_separable(rng, default_max_components));
    case Family::Saturating: {
      const auto [p_s, m] = draw_feasible_point(rng);
      return saturating_state(p_s, m);
    }
  }
  throw Error(ErrorKind::OutOfDomain, "unknown family");
}

/// Draws and evaluates `cfg.count` states. Sample i depends only on (seed, family, i).
inline std::vector<SampleRecord> run_samples(const SamplerConfig& cfg) {
  if (cfg.count < 1) throw Error(ErrorKind::OutOfDomain, "sample count must be at least 1");
  return parallel_map(cfg.count, cfg.threads,
                      [&](std::size_t i) { return make_record(i, cfg.family, draw_state(cfg.seed, cfg.family, i)); });
}

/// Shortest round-trip decimal representation; identical bytes for identical doubles.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline void write_samples_csv(std::ostream& out, const std::vector<SampleRecord>& records) {
  out << sample_csv_header << '\n';
  for (const auto& r : records) {
    out << r.index << ',' << to_string(r.family) << ',' << format_double(r.m_abs) << ',' << format_double(r.p_s) << ','
        << format_double(r.concurrence) << ',' << (r.certified ? "true" : "false") << ','
        << format_double(r.bound_value) << '\n';
  }
}

struct ContourOptions {
  std::vector<double> targets{0.2, 0.5, 0.8};
  double bin_width = default_bin_width;
};

/// For each target C and each m-bin whose centre satisfies m <= 1 - C, the
/// empirical threshold is the largest p_s of a sample in the bin with
/// concurrence below C (for C = 0: with zero concurrence). The analytic value is
/// the iso-concurrence line evaluated at the bin centre.
inline std::vector<ContourRecord> extract_contours(const std::vector<SampleRecord>& records, const ContourOptions& opt) {
  if (!(opt.bin_width > 0.0 && opt.bin_width <= 1.0)) throw Error(ErrorKind::OutOfDomain, "bin width must lie in (0, 1]");
  const auto bins = static_cast<std::size_t>(std::ceil(1.0 / opt.bin_width - 1e-9));
  std::vector<ContourRecord> out;
  for (double target : opt.targets) {
    if (!(target >= 0.0 && target < 1.0)) throw Error(ErrorKind::OutOfDomain, "contour targets must lie in [0, 1)");
    const double miss_below = std::max(target, separable_concurrence);
    std::vector<ContourRecord> rows(bins);
    for (std::size_t k = 0; k < bins; ++k) {
      rows[k].target_concurrence = target;
      rows[k].m = (static_cast<double>(k) + 0.5) * opt.bin_width;
    }
    for (const auto& r : records) {
      const bool misses = target == 0.0 ? r.concurrence <= separable_concurrence : r.concurrence < miss_below;
      if (!misses) continue;
      const auto k = std::min(bins - 1, static_cast<std::size_t>(r.m_abs / opt.bin_width));
      auto& row = rows[k];
      ++row.qualifying;
      if (std::isnan(row.min_ps_empirical) || r.p_s > row.min_ps_empirical) row.min_ps_empirical = r.p_s;
    }
    for (auto& row : rows) {
      if (row.m > 1.0 - target) continue;
      row.min_ps_analytic = contour_min_ps(target, row.m);
      out.push_back(row);
    }
  }
  return out;
}

inline void write_contour_csv(std::ostream& out, const std::vector<ContourRecord>& rows, bool with_reference = false) {
  out << contour_csv_header;
  if (with_reference) out << ",mintert_ps";
  out << '\n';
  for (const auto& r : rows) {
    out << format_double(r.target_concurrence) << ',' << format_double(r.m) << ',' << format_double(r.min_ps_empirical)
        << ',' << format_double(r.min_ps_analytic);
    if (with_reference) out << ',' << format_double(mintert_reference_ps(r.target_concurrence));
    out << '\n';
  }
}

}  // namespace singlet
