#include <gtest/gtest.h>

#include "support.hpp"

using namespace singlet;
using singlet::testing::reference_mixed_state;

namespace {

DensityOperator basis_projector(std::size_t k) {
  ComplexVector<4> psi{};
  psi[k] = 1.0;
  return pure_state(psi);
}

const DensityOperator up_up = basis_projector(0);
const DensityOperator up_down = basis_projector(1);

ErrorKind kind_of(const ComplexMatrix4& m) {
  try {
    validate(m);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "matrix was accepted";
  return ErrorKind::Io;
}

void expect_vec(const Vec3& got, const Vec3& want, double tol) {
  EXPECT_NEAR(got.x, want.x, tol);
  EXPECT_NEAR(got.y, want.y, tol);
  EXPECT_NEAR(got.z, want.z, tol);
}

}  // namespace

TEST(CoupledBasis, SingletIsFirstCoupledState) {
  EXPECT_LT(max_abs_diff(to_coupled_basis(singlet_state()), ComplexMatrix4::diagonal({1, 0, 0, 0})), 1e-15);
  EXPECT_LT(max_abs_diff(to_coupled_basis(up_up), ComplexMatrix4::diagonal({0, 1, 0, 0})), 1e-15);
}

TEST(CoupledBasis, UpDownSplitsIntoSingletAndTriplet) {
  const auto c = to_coupled_basis(up_down);
  EXPECT_NEAR(c(coupled::s0, coupled::s0).real(), 0.5, 1e-15);
  EXPECT_NEAR(c(coupled::t0, coupled::t0).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(c(coupled::s0, coupled::t0)), 0.5, 1e-15);
}

TEST(CoupledBasis, RoundTrip) {
  const auto rho = reference_mixed_state();
  EXPECT_LT(max_abs_diff(from_coupled_basis(to_coupled_basis(rho)), rho.matrix()), 1e-15);
}

TEST(SingletFraction, Examples) {
  EXPECT_NEAR(singlet_fraction(singlet_state()), 1.0, 1e-15);
  EXPECT_NEAR(singlet_fraction(up_down), 0.5, 1e-15);
  EXPECT_NEAR(singlet_fraction(up_up), 0.0, 1e-15);
  EXPECT_NEAR(singlet_fraction(maximally_mixed()), 0.25, 1e-15);
  // Identical half-polarised spins: (1 - 0.25)/4.
  const ProductState gisin{{0, 0, 0.5}, {0, 0, 0.5}};
  EXPECT_NEAR(singlet_fraction(product_state_density(gisin)), 0.1875, 1e-15);
}

TEST(SingletFraction, MatchesCoupledBasisEntry) {
  const auto rho = reference_mixed_state();
  EXPECT_NEAR(singlet_fraction(rho), to_coupled_basis(rho)(coupled::s0, coupled::s0).real(), 1e-15);
  EXPECT_NEAR(singlet_fraction(rho), 0.25333333333333335, 1e-14);
}

TEST(Magnetisation, Examples) {
  expect_vec(magnetisation(singlet_state()), {0, 0, 0}, 1e-15);
  expect_vec(magnetisation(up_up), {0, 0, 1}, 1e-15);
  expect_vec(magnetisation(product_state_density({{0, 0, 1}, {0, 0, -1}})), {0, 0, 0}, 1e-15);
  expect_vec(magnetisation(reference_mixed_state()), {-1.0 / 6.0, -1.0 / 150.0, 0.32666666666666666}, 1e-14);
}

TEST(Magnetisation, IsMeanOfReducedBlochVectors) {
  const ProductState p{{0.3, -0.2, 0.5}, {-0.1, 0.7, 0.2}};
  const auto rho = product_state_density(p);
  expect_vec(reduced_bloch(rho, Site::A), p.bloch_a, 1e-15);
  expect_vec(reduced_bloch(rho, Site::B), p.bloch_b, 1e-15);
  expect_vec(magnetisation(rho), 0.5 * (p.bloch_a + p.bloch_b), 1e-15);
}

TEST(ReducedBloch, Examples) {
  expect_vec(reduced_bloch(up_down, Site::A), {0, 0, 1}, 1e-15);
  expect_vec(reduced_bloch(up_down, Site::B), {0, 0, -1}, 1e-15);
  expect_vec(reduced_bloch(singlet_state(), Site::A), {0, 0, 0}, 1e-15);
  expect_vec(reduced_bloch(singlet_state(), Site::B), {0, 0, 0}, 1e-15);
  EXPECT_NEAR(partial_trace(reference_mixed_state(), Site::A).trace().real(), 1.0, 1e-15);
}

TEST(ProductStates, Examples) {
  EXPECT_LT(max_abs_diff(product_state_density({{0, 0, 1}, {0, 0, 1}}).matrix(), up_up.matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(product_state_density({{0, 0, 1}, {0, 0, -1}}).matrix(), up_down.matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(product_state_density({}).matrix(), maximally_mixed().matrix()), 1e-15);
}

TEST(ProductStates, SingletFractionFromAngle) {
  EXPECT_NEAR(separable_singlet_fraction({{0, 0, 1}, {0, 0, -1}}), 0.5, 1e-15);
  EXPECT_NEAR(separable_singlet_fraction({{0, 0, 1}, {0, 0, 1}}), 0.0, 1e-15);
  EXPECT_NEAR(separable_singlet_fraction({{0, 0, 0.5}, {0, 0, 0.5}}), 0.1875, 1e-15);
  const ProductState tilted{{0.6, 0, 0.8}, {-0.8, 0, 0.6}};
  EXPECT_NEAR(tilted.beta(), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(singlet_fraction(product_state_density(tilted)), separable_singlet_fraction(tilted), 1e-15);
}

TEST(ProductStates, RejectsLongBlochVector) {
  try {
    product_state_density({{0, 0, 1.1}, {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BlochNormExceeded);
  }
}

TEST(Validate, Errors) {
  EXPECT_NO_THROW(validate(0.25 * ComplexMatrix4::identity()));
  EXPECT_EQ(kind_of(ComplexMatrix4::diagonal({0.5, 0.5, 0.5, -0.5})), ErrorKind::NotPSD);
  EXPECT_EQ(kind_of(ComplexMatrix4::diagonal({0.6, 0.6, 0.0, 0.0})), ErrorKind::NotUnitTrace);
  ComplexMatrix4 skew = 0.25 * ComplexMatrix4::identity();
  skew(0, 1) = 0.1;
  EXPECT_EQ(kind_of(skew), ErrorKind::NotHermitian);
  ComplexMatrix4 nan = 0.25 * ComplexMatrix4::identity();
  nan(2, 2) = std::nan("");
  EXPECT_EQ(kind_of(nan), ErrorKind::NonFinite);
}

TEST(Validate, MessageCarriesMagnitude) {
  try {
    validate(ComplexMatrix4::diagonal({0.6, 0.6, 0.0, 0.0}));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("0.2"), std::string::npos) << e.what();
  }
}

TEST(NamedStates, WernerDecomposition) {
  const auto w = werner_state(0.75);
  EXPECT_NEAR(singlet_fraction(w), 0.75, 1e-15);
  EXPECT_NEAR(magnetisation(w).norm(), 0.0, 1e-15);
  EXPECT_NO_THROW(validate(w.matrix()));
  EXPECT_THROW(werner_state(1.5), Error);
}

TEST(NamedStates, MixIsConvex) {
  const std::vector<std::pair<double, DensityOperator>> parts{{0.25, up_up}, {0.75, singlet_state()}};
  const auto rho = mix(parts);
  EXPECT_NEAR(singlet_fraction(rho), 0.75, 1e-15);
  EXPECT_NEAR(magnetisation(rho).z, 0.25, 1e-15);
}

TEST(SpunState, NamedLimits) {
  EXPECT_LT(max_abs_diff(to_density(SpunState{1, 0, 0, 0, 0, 0}).matrix(), singlet_state().matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(to_density(SpunState{0, 0, 1, 1, 0, 0}).matrix(), up_up.matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(to_density(SpunState{0.5, 0.5, 0, 0, 1, 0}).matrix(), up_down.matrix()), 1e-15);
}

TEST(SpunState, ObservablesAreParameters) {
  const SpunState s{0.3, 0.25, 0.45, -0.2, 0.7, 1.1};
  const auto rho = to_density(s);
  EXPECT_NEAR(singlet_fraction(rho), 0.3, 1e-15);
  expect_vec(magnetisation(rho), {0, 0, -0.2}, 1e-15);
}

TEST(SpunState, RejectsInvalidParameters) {
  EXPECT_THROW(to_density(SpunState{0.5, 0.2, 0.2, 0, 0, 0}), Error);   // not normalised
  EXPECT_THROW(to_density(SpunState{0.5, 0.2, 0.3, 0.4, 0, 0}), Error); // |m| > b
  EXPECT_THROW(to_density(SpunState{0.5, 0.2, 0.3, 0, 1.5, 0}), Error); // eta > 1
}
