#include <gtest/gtest.h>

#include "support.hpp"

using namespace singlet;
using namespace singlet::testing;

TEST(SpinFlip, Examples) {
  EXPECT_LT(max_abs_diff(spin_flip(singlet_state()).matrix(), singlet_state().matrix()), 1e-15);
  const auto up_up = pure_state({1, 0, 0, 0});
  const auto down_down = pure_state({0, 0, 0, 1});
  EXPECT_LT(max_abs_diff(spin_flip(up_up).matrix(), down_down.matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(spin_flip(werner_state(0.4)).matrix(), werner_state(0.4).matrix()), 1e-15);
}

TEST(SpinFlip, IsAnInvolution) {
  const auto rho = reference_mixed_state();
  EXPECT_LT(max_abs_diff(spin_flip(spin_flip(rho)).matrix(), rho.matrix()), 1e-15);
}

TEST(Wootters, NamedStates) {
  EXPECT_NEAR(wootters_concurrence(singlet_state()).concurrence, 1.0, 1e-12);
  EXPECT_NEAR(wootters_concurrence(maximally_mixed()).concurrence, 0.0, 1e-12);
  for (double f : {0.3, 0.5, 0.75, 1.0})
    EXPECT_NEAR(wootters_concurrence(werner_state(f)).concurrence, std::max(0.0, 2 * f - 1), 1e-12) << "F = " << f;
}

TEST(Wootters, ReferenceMixedState) {
  // Independent oracle: textbook non-Hermitian route in double precision.
  const auto r = wootters_concurrence(reference_mixed_state());
  EXPECT_NEAR(r.concurrence, 0.2157350115509693, 1e-9);
  const std::array<double, 4> lambdas{0.52362248, 0.13748796, 0.11983037, 0.05056914};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(r.lambdas[k], lambdas[k], 1e-8);
}

TEST(Wootters, ProductStatesAreUnentangled) {
  auto rng = test_rng(10);
  for (int n = 0; n < 1000; ++n) {
    const ProductState p{draw_ball(rng), draw_ball(rng)};
    EXPECT_LT(wootters_concurrence(product_state_density(p)).concurrence, 1e-9);
  }
}

TEST(Wootters, PureStatesMatchAmplitudeFormula) {
  auto rng = test_rng(11);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    ComplexVector<4> psi;
    double norm2 = 0.0;
    for (auto& z : psi) {
      z = complex{rng.normal(), rng.normal()};
      norm2 += std::norm(z);
    }
    for (auto& z : psi) z /= std::sqrt(norm2);
    const double want = 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    worst = std::max(worst, std::abs(wootters_concurrence(pure_state(psi)).concurrence - want));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Wootters, LocalUnitaryInvariance) {
  auto rng = test_rng(12);
  double worst = 0.0;
  for (std::size_t n = 0; n < 10000; ++n) {
    const auto rho = draw_state(99, Family::Ginibre, n);
    const auto moved = apply_local(rho, random_su2(rng), random_su2(rng));
    worst = std::max(worst, std::abs(wootters_concurrence(rho).concurrence - wootters_concurrence(moved).concurrence));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Wootters, LambdasDescendingAndInRange) {
  for (std::size_t n = 0; n < 1000; ++n) {
    const auto r = wootters_concurrence(draw_state(5, Family::Ginibre, n));
    EXPECT_TRUE(std::is_sorted(r.lambdas.rbegin(), r.lambdas.rend()));
    EXPECT_GE(r.concurrence, 0.0);
    EXPECT_LE(r.concurrence, 1.0);
  }
}

TEST(Wootters, SquaredRouteAgreesOnMixedStates) {
  double worst = 0.0;
  for (std::size_t n = 0; n < 2000; ++n) {
    const auto rho = draw_state(6, Family::Ginibre, n);
    worst = std::max(worst, std::abs(wootters_concurrence(rho).concurrence -
                                     wootters_concurrence_r_matrix(rho).concurrence));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(SpunClosedForm, Examples) {
  EXPECT_NEAR(spun_concurrence_closed_form({0.85, 0, 0.15, 0, 0, 0}).concurrence, 0.7, 1e-12);
  const auto empty = spun_concurrence_closed_form({0, 0, 1, 0, 0, 0});
  EXPECT_EQ(empty.concurrence, 0.0);
  EXPECT_NEAR(empty.lambdas[0], 0.5, 1e-15);
  EXPECT_NEAR(empty.lambdas[1], 0.5, 1e-15);
  EXPECT_EQ(empty.lambdas[2], 0.0);
  const double want = 0.6 - std::sqrt(0.07);
  EXPECT_NEAR(spun_concurrence_closed_form({0.6, 0, 0.4, 0.3, 0, 0}).concurrence, want, 1e-12);
  EXPECT_NEAR(wootters_concurrence(to_density(SpunState{0.6, 0, 0.4, 0.3, 0, 0})).concurrence, want, 1e-12);
}

TEST(SpunClosedForm, AgreesWithGenericPipeline) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 10000; ++i) {
    auto rng = sample_stream(21, Family::Spun, i);
    const SpunState s = draw_spun(rng);
    const auto closed = spun_concurrence_closed_form(s);
    const auto generic = wootters_concurrence(to_density(s));
    worst = std::max(worst, std::abs(closed.concurrence - generic.concurrence));
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(closed.lambdas[k] - generic.lambdas[k]));
    worst = std::max(worst, std::abs(closed.concurrence - spun_concurrence_expression(s)));
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(SpunClosedForm, CoherencePhaseMatters) {
  // Real coherence (phi = 0) gives no help; imaginary coherence does.
  const SpunState real_c{0.35, 0.2, 0.45, 0.2, 1.0, 0.0};
  const SpunState imag_c{0.35, 0.2, 0.45, 0.2, 1.0, std::numbers::pi / 2};
  EXPECT_LT(spun_concurrence_expression(real_c), spun_concurrence_expression(imag_c));
  EXPECT_NEAR(spun_concurrence_expression(imag_c), wootters_concurrence(to_density(imag_c)).concurrence, 1e-12);
}
