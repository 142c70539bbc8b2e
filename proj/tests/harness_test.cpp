#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace singlet;

TEST(Harness, SampleCsvHeaderAndRows) {
  const auto records = run_samples({7, 20, Family::Spun, 1});
  std::ostringstream out;
  write_samples_csv(out, records);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "index,family,m_abs,p_s,concurrence,certified,bound_value");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
    EXPECT_EQ(line.rfind(std::to_string(rows) + ",spun,", 0), 0u) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 20u);
}

TEST(Harness, ContourCsvHeader) {
  std::ostringstream plain, with_ref;
  write_contour_csv(plain, {});
  write_contour_csv(with_ref, {}, true);
  EXPECT_EQ(plain.str(), "target_c,m_bin_center,min_ps_empirical,min_ps_analytic\n");
  EXPECT_EQ(with_ref.str(), "target_c,m_bin_center,min_ps_empirical,min_ps_analytic,mintert_ps\n");
}

TEST(Harness, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 0.7, 1e-17, 0.0}) EXPECT_EQ(std::stod(format_double(v)), v);
  EXPECT_EQ(format_double(std::nan("")), "nan");
}

TEST(Harness, RecordsAreConsistent) {
  for (const auto& r : run_samples({13, 2000, Family::Spun, 1})) {
    EXPECT_NEAR(r.bound_value, 0.5 * (1.0 - r.m_abs * r.m_abs), 1e-15);
    EXPECT_EQ(r.certified, r.p_s - r.bound_value > tolerance::certification_margin);
    EXPECT_LE(r.p_s, 1.0 - r.m_abs + 1e-9);
    if (r.certified) {
      EXPECT_GE(r.concurrence, min_concurrence_bound(r.p_s, r.m_abs) - 1e-9);
    }
  }
}

TEST(Harness, DeterministicAcrossThreads) {
  std::ostringstream a, b;
  write_samples_csv(a, run_samples({5, 3000, Family::Ginibre, 1}));
  write_samples_csv(b, run_samples({5, 3000, Family::Ginibre, 3}));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Harness, ContourRowsRespectDomain) {
  const auto rows = extract_contours(run_samples({3, 20000, Family::Spun, 1}), {{0.0, 0.5}, 0.02});
  std::size_t zero_rows = 0, half_rows = 0;
  for (const auto& r : rows) {
    EXPECT_LE(r.m, 1.0 - r.target_concurrence + 1e-12);
    EXPECT_DOUBLE_EQ(r.min_ps_analytic, contour_min_ps(r.target_concurrence, r.m));
    // Every sampled state above the analytic line reaches the target, so the
    // empirical threshold cannot sit above the line by more than the bin slope.
    if (!std::isnan(r.min_ps_empirical)) {
      EXPECT_LE(r.min_ps_empirical, contour_min_ps(r.target_concurrence, std::max(0.0, r.m - 0.01)) + 1e-9);
    }
    (r.target_concurrence == 0.0 ? zero_rows : half_rows)++;
  }
  EXPECT_EQ(zero_rows, 50u);
  EXPECT_EQ(half_rows, 25u);
}

TEST(Harness, ContourFromSaturatingFamilyTracksLine) {
  // Every saturating state sits on its own contour, so the empirical line is dense.
  const auto rows = extract_contours(run_samples({4, 50000, Family::Saturating, 1}), {{0.2, 0.5}, 0.02});
  for (const auto& r : rows) {
    if (r.qualifying < insufficient_samples_threshold) continue;
    EXPECT_NEAR(r.min_ps_empirical, r.min_ps_analytic, 0.02) << "C = " << r.target_concurrence << ", m = " << r.m;
  }
}

TEST(Harness, RejectsBadContourOptions) {
  EXPECT_THROW(extract_contours({}, {{1.0}, 0.02}), Error);
  EXPECT_THROW(extract_contours({}, {{0.5}, 0.0}), Error);
}

TEST(Verify, DefaultSuitePasses) {
  VerifyOptions opt;
  opt.samples = 2000;
  opt.supremum_resolution = 60;
  for (const auto& r : run_verification(opt)) EXPECT_TRUE(r.passed) << r.name << " worst " << r.worst;
}

TEST(Verify, InjectedFaultIsCaught) {
  VerifyOptions opt;
  opt.samples = 2000;
  opt.fault = InjectedFault::InflatedBound;
  const auto r = check_bound_validity(opt);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.name, "bound_validity");
}

TEST(Verify, StableAcrossSeeds) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.samples = 500;
    opt.supremum_resolution = 30;
    for (const auto& r : run_verification(opt)) EXPECT_TRUE(r.passed) << "seed " << seed << ": " << r.name;
  }
}
