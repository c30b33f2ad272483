// Copyright 2026 The diraccat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "diraccat/cat.hpp"
#include "diraccat/diagnostics.hpp"
#include "oracles.hpp"

using namespace diraccat;

namespace {

/// Asymptotic fidelity threshold at nbar = 49 up to the cat time. The
/// asymptotic error is expected to shrink like 1/sqrt(nbar).
constexpr double kAsymptoticFidelityFloor = 0.9;

DiracState exact_branch(const ModelParams& p, Complex z, Sign sign, double t) {
  const auto sc = semiclassical_eigenspinors(p, z);
  const DiracState start =
      DiracState::product(embed_jc(sign == Sign::plus ? sc.plus : sc.minus), coherent_vector(z, p.cutoff));
  return evolve(start, EvolutionPlan(p), t);
}

}  // namespace

TEST(SemiclassicalEigenspinors, Orthonormal) {
  for (double n_bar : {0.5, 25.0, 400.0}) {
    const auto sc = semiclassical_eigenspinors({0.3, 0.0, 1}, n_bar);
    EXPECT_NEAR(sc.plus.norm(), 1.0, 1e-15);
    EXPECT_NEAR(sc.minus.norm(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(sc.plus.dot(sc.minus)), 0.0, 1e-15);
  }
}

TEST(SemiclassicalEigenspinors, UltraRelativisticMixing) {
  const auto sc = semiclassical_eigenspinors({1e6, 0.0, 1}, 1e4);
  EXPECT_NEAR(sc.alpha_plus, 1.0 / std::sqrt(2.0), 1e-5);
  EXPECT_NEAR(sc.alpha_minus, 1.0 / std::sqrt(2.0), 1e-5);
}

TEST(SemiclassicalEigenspinors, EigenRelationAtStandardAmplitude) {
  const ModelParams p{1.0, 0.0, 1};
  const double n_bar = 25.0;
  const auto sc = semiclassical_eigenspinors(p, n_bar);
  // z = i|z| gives H_sc = sigma_z + |g||z| sigma_x
  Eigen::Matrix2cd h;
  h << 1.0, p.coupling() * 5.0, p.coupling() * 5.0, -1.0;
  EXPECT_LT((semiclassical_hamiltonian(p, start_amplitude(5.0)) - h).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((h * sc.plus - sc.energy * sc.plus).norm(), 1e-12);
  EXPECT_LT((h * sc.minus + sc.energy * sc.minus).norm(), 1e-12);
  EXPECT_NEAR(sc.energy, std::sqrt(101.0), 1e-14);
}

TEST(SemiclassicalEigenspinors, GeneralPhaseEigenRelation) {
  const ModelParams p{0.4, 0.0, 1};
  for (Complex z : {Complex(2.0, 0.0), Complex(-1.0, 3.0), Complex(0.0, -4.0)}) {
    const auto sc = semiclassical_eigenspinors(p, z);
    const Eigen::Matrix2cd h = semiclassical_hamiltonian(p, z);
    EXPECT_LT((h * sc.plus - sc.energy * sc.plus).norm(), 1e-12);
    EXPECT_LT((h * sc.minus + sc.energy * sc.minus).norm(), 1e-12);
  }
}

TEST(SemiclassicalEigenspinors, RealAmplitudeTextbookForm) {
  const auto sc = semiclassical_eigenspinors({0.5, 0.0, 1}, Complex(3.0, 0.0));
  EXPECT_LT(std::abs(sc.plus[1] - kI * sc.alpha_minus), 1e-15);
  EXPECT_LT(std::abs(sc.minus[1] + kI * sc.alpha_plus), 1e-15);
}

TEST(AsymptoticState, InitialValue) {
  const ModelParams p{1.0, 0.0, 90};
  const Complex z = start_amplitude(5.0);
  const auto sc = semiclassical_eigenspinors(p, z);
  for (auto form : {OrbitalForm::rotated_coherent, OrbitalForm::number_phase}) {
    const auto plus = asymptotic_state(p, z, Sign::plus, 0.0, form);
    const auto minus = asymptotic_state(p, z, Sign::minus, 0.0, form);
    EXPECT_LT((plus.spinor - sc.plus).norm(), 1e-15);
    EXPECT_LT((minus.spinor - sc.minus).norm(), 1e-15);
    EXPECT_LT((plus.orbital.amplitudes() - coherent_vector(z, p.cutoff).amplitudes()).norm(), 1e-15);
    EXPECT_EQ(plus.global_phase, Complex(1.0));
  }
}

TEST(AsymptoticState, QuarterTurnAtCatTime) {
  const ModelParams p{1.0, 0.0, 90};
  const Complex z = start_amplitude(5.0);
  const auto sched = cat_schedule(p, z);
  for (Sign s : {Sign::plus, Sign::minus}) {
    const auto st = asymptotic_state(p, z, s, sched.t_d);
    const Complex rotated = z * std::polar(1.0, -sign_value(s) * std::numbers::pi / 2.0);
    EXPECT_LT((st.orbital.amplitudes() - coherent_vector(rotated, p.cutoff).amplitudes()).norm(), 1e-12);
  }
}

TEST(AsymptoticState, FactorizedUnitNormParts) {
  const ModelParams p{1.0, 0.0, 90};
  const auto st = asymptotic_state(p, start_amplitude(5.0), Sign::minus, 3.0);
  EXPECT_NEAR(st.spinor.norm(), 1.0, 1e-14);
  EXPECT_NEAR(norm(st.orbital), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(st.global_phase), 1.0, 1e-15);
  EXPECT_NEAR(purity(reduced_density(st.to_dirac_state(), Subsystem::spinor)), 1.0, 1e-12);
}

TEST(AsymptoticState, RejectsNegativeTime) {
  EXPECT_THROW(asymptotic_state({1.0, 0.0, 90}, start_amplitude(5.0), Sign::plus, -1.0), std::invalid_argument);
}

TEST(AsymptoticState, GuardApplies) {
  EXPECT_THROW(asymptotic_state({1.0, 0.0, 20}, start_amplitude(5.0), Sign::plus, 1.0), TruncationError);
}

TEST(AsymptoticState, TracksExactEvolutionUpToCatTime) {
  const ModelParams p{1.0, 0.0, 256};
  const Complex z = start_amplitude(7.0);
  const auto sched = cat_schedule(p, z);
  for (Sign s : {Sign::plus, Sign::minus}) {
    for (int k = 0; k <= 8; ++k) {
      const double t = sched.t_d * k / 8.0;
      const double f = fidelity(exact_branch(p, z, s, t),
                                asymptotic_state(p, z, s, t, OrbitalForm::number_phase).to_dirac_state());
      EXPECT_GE(f, kAsymptoticFidelityFloor) << "t=" << t;
    }
  }
}

TEST(AsymptoticState, ShortTimeFormValidWellBeforeCatTime) {
  const ModelParams p{1.0, 0.0, 256};
  const Complex z = start_amplitude(7.0);
  const auto sched = cat_schedule(p, z);
  for (int k = 0; k <= 4; ++k) {
    const double t = 0.5 * sched.t_d * k / 4.0;
    EXPECT_GE(fidelity(exact_branch(p, z, Sign::plus, t), asymptotic_state(p, z, Sign::plus, t).to_dirac_state()),
              kAsymptoticFidelityFloor)
        << "t=" << t;
  }
}

TEST(AsymptoticState, ErrorShrinksWithOccupation) {
  const ModelParams p{1.0, 0.0, 256};
  double previous = 1.0;
  for (double z_abs : {5.0, 7.0, 10.0}) {
    const Complex z = start_amplitude(z_abs);
    const double t_d = cat_schedule(p, z).t_d;
    const double err = 1.0 - fidelity(exact_branch(p, z, Sign::plus, t_d),
                                       asymptotic_state(p, z, Sign::plus, t_d, OrbitalForm::number_phase)
                                           .to_dirac_state());
    EXPECT_LT(err, previous);
    previous = err;
  }
}

TEST(CatSchedule, UltraRelativisticExample) {
  const auto s = cat_schedule({1.0, 0.0, 1}, 25.0);
  EXPECT_NEAR(s.t_R, 15.786307710402275, 1e-12);
  EXPECT_NEAR(s.t_d, 7.893153855201137, 1e-12);
  EXPECT_DOUBLE_EQ(s.t_d, 0.5 * s.t_R);
  EXPECT_NEAR(s.omega_rot * s.t_d, std::numbers::pi / 2.0, 1e-12);
}

TEST(CatSchedule, WeakFieldExample) {
  const auto s = cat_schedule({0.01, 0.0, 1}, 100.0);
  EXPECT_NEAR(s.t_R, 50.0 * std::numbers::pi * std::sqrt(5.0), 1e-10);
  EXPECT_NEAR(s.t_R, 351.2407365520363, 1e-10);
  EXPECT_NEAR(s.omega_rot * s.t_d, std::numbers::pi / 2.0, 1e-12);
}

TEST(CatSchedule, RelativePhaseAlignsSpinors) {
  const ModelParams p{1.0, 0.0, 1};
  const Complex z = start_amplitude(5.0);
  const auto s = cat_schedule(p, z);
  EXPECT_NEAR(std::abs(s.delta), std::numbers::pi, 1e-12);
  const auto [plus, minus] = branch_spinors(p, z, s.t_d);
  // plus ~ e^{i delta} minus up to the overlap magnitude
  EXPECT_NEAR((plus - std::polar(1.0, s.delta) * minus).norm(), std::sqrt(2.0 - 2.0 * 0.9950371902099891), 1e-12);
}

TEST(Trajectory, StartsOnPositiveYAxis) {
  for (Sign s : {Sign::plus, Sign::minus}) {
    const PlanePoint pt = trajectory({1.0, 0.0, 1}, 5.0, s, 0.0);
    EXPECT_EQ(pt.x, 0.0);
    EXPECT_EQ(pt.y, 5.0);
  }
}

TEST(Trajectory, ConstantRadiusAndMirrorSymmetry) {
  const ModelParams p{0.7, 0.0, 1};
  for (double t = 0.0; t < 20.0; t += 0.73) {
    const PlanePoint a = trajectory(p, 3.0, Sign::plus, t);
    const PlanePoint b = trajectory(p, 3.0, Sign::minus, t);
    EXPECT_NEAR(std::hypot(a.x, a.y), 3.0, 1e-14);
    EXPECT_EQ(a.x, -b.x);
    EXPECT_EQ(a.y, b.y);
  }
}

TEST(Trajectory, PlusBranchCounterclockwise) {
  const ModelParams p{1.0, 0.0, 1};
  const PlanePoint a = trajectory(p, 5.0, Sign::plus, 0.0);
  const PlanePoint b = trajectory(p, 5.0, Sign::plus, 0.5);
  EXPECT_GT(a.x * b.y - a.y * b.x, 0.0);
}

TEST(Trajectory, LiteralFormIsNegativeImaginaryStart) {
  const ModelParams p{1.0, 0.0, 1};
  for (double t : {0.0, 0.4, 2.0}) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      const PlanePoint a = trajectory(p, 5.0, s, t);
      const PlanePoint b = trajectory(p, Complex(0.0, -5.0), s, t);
      EXPECT_NEAR(a.x, b.x, 1e-14);
      EXPECT_NEAR(a.y, b.y, 1e-14);
    }
  }
}

TEST(Trajectory, FollowsExactEvolution) {
  const ModelParams p{1.0, 0.0, 90};
  const Complex z = start_amplitude(5.0);
  const double t_d = cat_schedule(p, z).t_d;
  for (Sign s : {Sign::plus, Sign::minus}) {
    for (int k = 0; k <= 5; ++k) {
      const double t = 0.25 * t_d * k / 5.0;
      const PlanePoint exact = position_expectation(exact_branch(p, z, s, t));
      const PlanePoint asym = trajectory(p, z, s, t);
      EXPECT_LT(std::hypot(exact.x - asym.x, exact.y - asym.y), 0.05 * 5.0) << "t=" << t;
    }
  }
}

TEST(SpinorOverlap, UltraRelativistic) {
  const ModelParams p{1.0, 0.0, 1};
  EXPECT_NEAR(spinor_overlap_at_cat_time(p, 25.0), 0.9950371902099891, 1e-15);
  EXPECT_NEAR(measured_spinor_overlap(p, start_amplitude(5.0)), 0.9950371902099891, 1e-12);
}

TEST(SpinorOverlap, NonRelativistic) {
  const ModelParams p{1e-4, 0.0, 1};
  EXPECT_NEAR(spinor_overlap_at_cat_time(p, 25.0), 0.09950371902099892, 1e-15);
  EXPECT_NEAR(measured_spinor_overlap(p, start_amplitude(5.0)), 0.09950371902099892, 1e-12);
  EXPECT_DOUBLE_EQ(spinor_overlap_nonrelativistic(p, 25.0), 0.1);
  // correction is O(xi^{3/2})
  EXPECT_LT(std::abs(spinor_overlap_at_cat_time(p, 25.0) - 0.1), 4.0 * std::pow(p.xi * 25.0, 1.5));
}

TEST(SpinorOverlap, MonotoneTowardsOne) {
  double previous = 0.0;
  for (double xi : {1e-6, 1e-4, 1e-2, 1.0, 1e2, 1e4}) {
    const double v = spinor_overlap_at_cat_time({xi, 0.0, 1}, 25.0);
    EXPECT_GT(v, previous);
    EXPECT_LT(v, 1.0);
    previous = v;
  }
  EXPECT_GT(previous, 1.0 - 1e-6);
}

TEST(Regime, Bands) {
  EXPECT_EQ(classify_regime(4.0), Regime::microscopic);
  EXPECT_EQ(classify_regime(10.0), Regime::mesoscopic);
  EXPECT_EQ(classify_regime(25.0), Regime::mesoscopic);
  EXPECT_EQ(classify_regime(100.0), Regime::mesoscopic);
  EXPECT_EQ(classify_regime(400.0), Regime::macroscopic);
  EXPECT_EQ(regime_label(Regime::mesoscopic), "mesoscopic");
  EXPECT_TRUE(is_ultra_relativistic({1.0, 0.0, 1}, 25.0));
  EXPECT_FALSE(is_ultra_relativistic({1e-4, 0.0, 1}, 25.0));
}

TEST(DiracCatState, ComponentsAntipodalAndDistinct) {
  const ModelParams p{1.0, 0.0, 90};
  const DiracCat cat = dirac_cat(p, start_amplitude(5.0));
  EXPECT_LT(std::abs(inner_product(cat.plus_component, cat.minus_component)), 1e-12);
  EXPECT_NEAR(norm(cat.orbital_cat), 1.0, 1e-12);
  EXPECT_NEAR(cat.plus_weight + cat.minus_weight, 1.0, 1e-15);
  EXPECT_TRUE(cat.ultra_relativistic);
  // start phase pi/2 turned by -+pi/2: centres at 5 and -5 on the real axis
  EXPECT_NEAR(lowering_expectation(cat.plus_component.amplitudes()).real(), 5.0, 1e-10);
  EXPECT_NEAR(lowering_expectation(cat.minus_component.amplitudes()).real(), -5.0, 1e-10);
}

TEST(DiracCatState, ComponentOverlapClosedForm) {
  // a smaller amplitude keeps e^{-2|z|^2} above roundoff
  const ModelParams p{1.0, 0.0, 40};
  const DiracCat cat = dirac_cat(p, start_amplitude(2.0));
  EXPECT_NEAR(std::abs(inner_product(cat.plus_component, cat.minus_component)), std::exp(-8.0), 1e-12);
}

TEST(DiracCatState, WeightsFollowMixingAmplitudes) {
  const ModelParams p{1.0, 0.0, 90};
  const DiracCat cat = dirac_cat(p, start_amplitude(5.0));
  const double e = std::sqrt(101.0);
  EXPECT_NEAR(cat.plus_weight, (e + 1.0) / (2.0 * e), 1e-15);
  EXPECT_NEAR(cat.minus_weight, (e - 1.0) / (2.0 * e), 1e-15);
  EXPECT_FALSE(dirac_cat({1e-4, 0.0, 90}, start_amplitude(5.0)).ultra_relativistic);
}

TEST(MesoscopicComposite, CoherenceFromSpinorOverlap) {
  for (double xi : {1.0, 1e-4}) {
    const ModelParams p{xi, 0.0, 90};
    const Complex z = start_amplitude(5.0);
    const DiracCat cat = dirac_cat(p, z);
    const DiracState composite = mesoscopic_composite(p, z, cat.t_d);
    const double ab = std::sqrt(cat.plus_weight * cat.minus_weight);
    const double expected = ab * spinor_overlap_at_cat_time(p, 25.0);
    EXPECT_NEAR(coherence_magnitude(composite, cat.plus_component, cat.minus_component), expected, 1e-3);
  }
}

TEST(MesoscopicComposite, CoherenceLimits) {
  const Complex z = start_amplitude(5.0);
  const ModelParams rel{1.0, 0.0, 90};
  const ModelParams nonrel{1e-4, 0.0, 90};
  const DiracCat a = dirac_cat(rel, z);
  const DiracCat b = dirac_cat(nonrel, z);
  const double ca = coherence_magnitude(mesoscopic_composite(rel, z, a.t_d), a.plus_component, a.minus_component);
  const double cb = coherence_magnitude(mesoscopic_composite(nonrel, z, b.t_d), b.plus_component, b.minus_component);
  EXPECT_GT(ca / std::sqrt(a.plus_weight * a.minus_weight), 0.99);
  EXPECT_LE(cb, 0.1 * std::sqrt(b.plus_weight * b.minus_weight));
}
