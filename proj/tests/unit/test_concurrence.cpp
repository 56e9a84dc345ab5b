#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "spinpair/concurrence.hpp"
#include "spinpair/error.hpp"
#include "spinpair/model.hpp"
#include "spinpair/thermal.hpp"

using namespace spinpair;

namespace {

const double kSqrt2 = std::sqrt(2.0);

struct Frozen {
  ModelParams p;
  double temp;
  double c;
  std::array<double, 4> lambdas;
};

// 50-digit reference values from exp(-H/T) evaluated in extended precision.
const Frozen kFrozen[] = {
    {{1.0, 1.0, 1.0},
     1.0,
     0.88026156764675457621,
     {0.94013078382337728811, 0.055567131843757805136, 0.0032843368119319568701,
      0.001017747520932949889}},
    {{-2.0, 0.5, 1.5},
     0.7,
     0.96734247306178162097,
     {0.98367123653089081048, 0.01614229144395662546, 0.00018634847447750985774,
      1.2355067505419808628e-7}},
};

}  // namespace

TEST(Concurrence, FrozenReferenceValues) {
  for (const Frozen& f : kFrozen) {
    for (const ConcurrenceResult& r :
         {concurrence_analytic(f.p, Temperature(f.temp)),
          concurrence_oracle(f.p, Temperature(f.temp))}) {
      EXPECT_NEAR(r.value, f.c, 1e-14) << to_string(r.path);
      for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(r.lambdas[k], f.lambdas[k], 1e-14);
    }
  }
  EXPECT_NEAR(concurrence_oracle({1.0, 0.0, 0.0}, Temperature(0.1)).value,
              0.99999999999999997451, 1e-15);
  EXPECT_NEAR(concurrence_analytic({0.6, 1.0, 1.0}, Temperature(1.0)).value,
              0.62681139455149995252, 1e-14);
}

TEST(Concurrence, PathTags) {
  EXPECT_EQ(concurrence_analytic({1, 1, 1}, Temperature(1)).path, ConcurrencePath::AnalyticEq20);
  EXPECT_EQ(concurrence_oracle({1, 1, 1}, Temperature(1)).path, ConcurrencePath::OracleSpectral);
}

TEST(Concurrence, MaximallyMixedIsSeparable) {
  EXPECT_EQ(concurrence_analytic({0, 0, 0}, Temperature(1.0)).value, 0.0);
  EXPECT_EQ(concurrence_oracle({0, 0, 0}, Temperature(1.0)).value, 0.0);
}

TEST(Concurrence, LowTemperatureSaturates) {
  EXPECT_NEAR(concurrence_analytic({1, 1, 1}, Temperature(0.01)).value, 1.0, 1e-6);
}

TEST(Concurrence, HighTemperatureVanishes) {
  EXPECT_EQ(concurrence_analytic({1, 1, 1}, Temperature(100.0)).value, 0.0);
  EXPECT_EQ(concurrence_oracle({1, 1, 1}, Temperature(100.0)).value, 0.0);
}

TEST(Concurrence, InjectedStates) {
  const Vector4 bell{1 / kSqrt2, 0.0, 0.0, 1 / kSqrt2};
  EXPECT_NEAR(concurrence_of_state(Matrix4::outer(bell)).value, 1.0, 1e-14);
  EXPECT_EQ(concurrence_of_state(Matrix4::diagonal({1, 0, 0, 0})).value, 0.0);
  const Vector4 partial{std::cos(0.3), 0.0, 0.0, std::sin(0.3)};
  EXPECT_NEAR(concurrence_of_state(Matrix4::outer(partial)).value, std::sin(0.6), 1e-14);
}

TEST(Concurrence, FromRoots) {
  EXPECT_EQ(concurrence_from_roots({1, 0, 0, 0}), 1.0);
  EXPECT_EQ(concurrence_from_roots({0.25, 0.25, 0.25, 0.25}), 0.0);
  EXPECT_DOUBLE_EQ(concurrence_from_roots({0.1, 0.6, 0.05, 0.05}), 0.4);
}

TEST(RMatrix, ClosedFormMatchesProduct) {
  const ModelParams p{1.0, 1.0, 1.0};
  const ThermalState s = thermal_state_analytic(p, Temperature(1.0));
  EXPECT_LT(max_abs_diff(r_matrix(s.rho), r_matrix_from_elements(s.elements, s.z)), 1e-12);
  const Matrix4 quarter = Matrix4::identity() * Complex(0.25);
  EXPECT_LT(max_abs_diff(r_matrix(quarter), Matrix4::identity() * Complex(1.0 / 16)), 1e-17);
}

TEST(RMatrix, RootsMatchClosedForms) {
  const ThermalState s = thermal_state_analytic({1, 1, 1}, Temperature(1.0));
  const auto closed = analytic_roots(s.elements, s.z);
  const auto numeric = wootters_roots(s.rho);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(closed[k], numeric[k], 1e-9);
}

TEST(ConcurrenceProperty, PathsAgreeAndStayInRange) {
  oracle::Draws draws(9);
  for (int k = 0; k < 10000; ++k) {
    const ModelParams p = draws.params();
    const Temperature t(draws.log_uniform(0.05, 50.0));
    const ConcurrenceResult a = concurrence_analytic(p, t);
    const ConcurrenceResult o = concurrence_oracle(p, t);
    ASSERT_NEAR(a.value, o.value, 1e-9) << "draw " << k;
    ASSERT_GE(a.value, 0.0);
    ASSERT_LE(a.value, 1.0 + 1e-9);
    for (std::size_t i = 0; i < 4; ++i) {
      ASSERT_NEAR(a.lambdas[i], o.lambdas[i], 1e-9) << "draw " << k;
      ASSERT_GE(a.lambdas[i], 0.0);
      if (i) ASSERT_GE(a.lambdas[i - 1], a.lambdas[i]);
    }
    ASSERT_NEAR(a.value, concurrence_from_roots(a.lambdas), 1e-12);
  }
}

TEST(ConcurrenceProperty, RMatrixAssembly) {
  oracle::Draws draws(10);
  for (int k = 0; k < 10000; ++k) {
    const ModelParams p = draws.params();
    const ThermalState s = thermal_state_analytic(p, Temperature(draws.log_uniform(0.05, 50.0)));
    ASSERT_LT(max_abs_diff(r_matrix(s.rho), r_matrix_from_elements(s.elements, s.z)), 1e-12)
        << "draw " << k;
  }
}

TEST(ConcurrenceProperty, MatchesMatrixExponentialOracle) {
  oracle::Draws draws(12);
  for (int k = 0; k < 500; ++k) {
    const ModelParams p = draws.params();
    const double t = draws.log_uniform(0.2, 50.0);
    const double want = concurrence_of_state(oracle::gibbs(p, t)).value;
    ASSERT_NEAR(concurrence_analytic(p, Temperature(t)).value, want, 1e-9) << "draw " << k;
  }
}

TEST(ConcurrenceProperty, SignFlipSymmetry) {
  oracle::Draws draws(13);
  for (int k = 0; k < 10000; ++k) {
    const ModelParams p = draws.params();
    const Temperature t(draws.log_uniform(0.05, 50.0));
    const double c = concurrence_oracle(p, t).value;
    ASSERT_NEAR(c, concurrence_oracle({p.j, -p.dx, p.gx}, t).value, 1e-10);
    ASSERT_NEAR(c, concurrence_oracle({p.j, p.dx, -p.gx}, t).value, 1e-10);
  }
}

TEST(ConcurrenceProperty, VanishesAtLargeTemperature) {
  oracle::Draws draws(14);
  for (int k = 0; k < 1000; ++k) {
    const ModelParams p = draws.params();
    for (double t : {1e3, 3e3, 1e4}) ASSERT_EQ(concurrence_analytic(p, Temperature(t)).value, 0.0);
  }
}

TEST(GroundStateConcurrence, UniqueGroundStatesAreMaximallyEntangled) {
  oracle::Draws draws(15);
  for (int k = 0; k < 1000; ++k) {
    const ModelParams p = draws.params();
    if (classify_ground_state(p).phase == GroundPhase::DegenerateBoundary) continue;
    ASSERT_NEAR(ground_state_concurrence(p), 1.0, 1e-12) << "draw " << k;
  }
}

TEST(GroundStateConcurrence, BoundaryMixtureIsSeparable) {
  EXPECT_NEAR(ground_state_concurrence({1.0, 1.0, 1.0 + kSqrt2}), 0.0, 1e-12);
}
