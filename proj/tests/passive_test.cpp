// Copyright 2026 The gaussent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussent/passive.hpp"

#include <cmath>
#include <complex>

#include "gtest/gtest.h"

#include "gaussent/coupling.hpp"
#include "gaussent/entanglement.hpp"
#include "test_support.hpp"

using namespace gaussent;
using gaussent::testing::Generator;
using gaussent::testing::kPi;

namespace {

Matrix4 standard_symmetric(double a, double c) {
  Matrix4 m = Matrix4::Zero();
  m.diagonal() << a, a, a, a;
  m(0, 2) = m(2, 0) = c;
  m(1, 3) = m(3, 1) = -c;
  return m;
}

ModeUnitary random_unitary(Generator& gen) {
  const std::complex<double> i(0, 1);
  const double t = gen.angle();
  const std::complex<double> e1 = std::exp(i * gen.angle());
  const std::complex<double> e2 = std::exp(i * gen.angle());
  ModeUnitary u;
  u << std::cos(t) * e1, -std::sin(t) * std::conj(e2), std::sin(t) * e2, std::cos(t) * std::conj(e1);
  return u * std::exp(i * gen.angle());
}

}  // namespace

TEST(passive, unitary_roundtrip) {
  Generator gen(41);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.passive2();
    const auto u = to_mode_unitary(p);
    EXPECT_TRUE((u.adjoint() * u).isIdentity(1e-12));
    EXPECT_TRUE(from_mode_unitary(u).matrix().isApprox(p.matrix(), 1e-12));
  }
  for (int i = 0; i < 100; ++i) {
    const auto u1 = random_unitary(gen);
    const auto u2 = random_unitary(gen);
    // Applying u1 then u2 to the field.
    const Matrix lhs = from_mode_unitary(u2 * u1).matrix();
    const Matrix rhs = from_mode_unitary(u1).then(from_mode_unitary(u2)).matrix();
    EXPECT_TRUE(lhs.isApprox(rhs, 1e-12));
  }
  EXPECT_THROW(to_mode_unitary(two_mode_squeezer(0.2, 0.1)), Error);
  ModeUnitary bad = ModeUnitary::Identity() * 2.0;
  EXPECT_THROW(from_mode_unitary(bad), Error);
}

TEST(passive, bound_examples) {
  EXPECT_NEAR(passive_bound(CovarianceMatrix::identity(2)), 1.0, 1e-14);
  const auto tilted = gaussent::testing::tilted_reference();
  Eigen::SelfAdjointEigenSolver<Matrix> es(tilted.matrix());
  const double oracle = std::sqrt(es.eigenvalues()(0) * es.eigenvalues()(1));
  EXPECT_NEAR(passive_bound(tilted), oracle, 1e-14);
  EXPECT_NEAR(passive_bound(tilted), 0.40, 0.01);
  const auto sf = CovarianceMatrix(standard_symmetric(4.135, 3.805));
  EXPECT_NEAR(passive_bound(sf), nu_tilde(sf).nu_minus, 1e-12);
  EXPECT_THROW(passive_bound(CovarianceMatrix(Matrix::Identity(4, 4) * 0.5)), Error);
}

TEST(passive, bound_is_never_beaten) {
  Generator gen(42);
  for (int i = 0; i < 1000; ++i) {
    const auto cm = gen.physical2();
    const double bound = std::max(0.0, -std::log2(passive_bound(cm)));
    for (int k = 0; k < 10; ++k) {
      EXPECT_LE(log_negativity(apply(gen.passive2(), cm)), bound + 1e-6);
    }
  }
}

TEST(passive, optimize_tilted_reference) {
  const auto tilted = gaussent::testing::tilted_reference();
  const auto c = optimize_passive(tilted);
  EXPECT_TRUE(c.converged);
  EXPECT_NEAR(-std::log2(c.achieved_nu_tilde), 1.32, 0.01);
  EXPECT_LE(c.achieved_nu_tilde, c.bound_nu_tilde + kBoundAttainmentTol);
  EXPECT_GE(c.achieved_nu_tilde, c.bound_nu_tilde - 1e-6);
  const auto after = apply(c.transform, tilted);
  EXPECT_NEAR(after.trace(), tilted.trace(), 1e-10 * tilted.trace());
  EXPECT_NEAR(nu_tilde(after).nu_minus, c.achieved_nu_tilde, 1e-12);
  // Emitted transform is the parameterised one up to a common phase.
  const auto recomposed = c.transform.then(common_phase_shift(c.removed_common_phase));
  EXPECT_TRUE(recomposed.matrix().isApprox(passive_transform(c.parameters).matrix(), 1e-10));
  EXPECT_NEAR(std::abs(to_mode_unitary(c.transform).determinant() - 1.0), 0.0, 1e-10);
}

TEST(passive, optimize_coupled_family) {
  Generator gen(43);
  for (int i = 0; i < 12; ++i) {
    const CoupledStateParams p{gen.uniform(1.2, 8.0), gen.uniform(-1.5, 1.5)};
    const auto cm = coupled_cm_entangled_basis(p);
    const auto c = optimize_passive(cm);
    EXPECT_TRUE(c.converged);
    EXPECT_NEAR(c.bound_nu_tilde, 1 / p.a, 1e-10);
    EXPECT_LE(c.achieved_nu_tilde - c.bound_nu_tilde, 1e-5);
    EXPECT_NEAR(apply(c.transform, cm).trace(), cm.trace(), 1e-10 * cm.trace());
  }
}

TEST(passive, coupled_family_single_phase_correction) {
  // One phase shifter on one mode in the squeezed basis realigns the ellipses.
  const CoupledStateParams p{3.0, 0.35};
  const std::size_t m1[] = {1};
  const auto fixed = apply(beam_splitter(kPi / 4),
                           apply(embed(phase_shift(p.theta), m1, 2), coupled_cm_squeezed_basis(p)));
  const auto fixed_other = apply(beam_splitter(kPi / 4),
                                 apply(embed(phase_shift(-p.theta), m1, 2), coupled_cm_squeezed_basis(p)));
  const double best = std::min(nu_tilde(fixed).nu_minus, nu_tilde(fixed_other).nu_minus);
  EXPECT_NEAR(best, 1 / p.a, 1e-12);
}

TEST(passive, optimize_standard_form_is_identity) {
  Generator gen(44);
  for (int i = 0; i < 5; ++i) {
    const double a = gen.uniform(1.5, 6.0);
    const double c = std::sqrt(a * a - 1) * gen.uniform(0.2, 1.0);
    const auto cm = CovarianceMatrix(standard_symmetric(a, c));
    const auto res = optimize_passive(cm);
    EXPECT_LE(res.initial_nu_tilde - res.achieved_nu_tilde, 1e-6);
    EXPECT_TRUE(res.converged);
  }
  const auto vac = optimize_passive(CovarianceMatrix::identity(2));
  EXPECT_NEAR(vac.achieved_nu_tilde, 1.0, 1e-12);
}

TEST(passive, retarder_conventions) {
  const std::complex<double> i(0, 1);
  const auto q0 = retarder_jones(kPi / 2, 0.0);
  EXPECT_NEAR(std::abs(q0(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q0(1, 1) - i), 0.0, 1e-15);
  const auto h = retarder_jones(kPi, 0.3);
  EXPECT_TRUE((h * h).isIdentity(1e-14));
  Generator gen(45);
  for (int k = 0; k < 50; ++k) {
    const auto j = retarder_jones(gen.uniform(0, kPi), gen.angle());
    EXPECT_TRUE((j.adjoint() * j).isIdentity(1e-14));
  }
}

TEST(passive, waveplate_forward_composition) {
  Generator gen(46);
  for (int k = 0; k < 50; ++k) {
    const WaveplateSequence w{gen.angle(), gen.angle(), gen.angle(), 0.0};
    const auto j = waveplate_jones(w);
    const auto expected = retarder_jones(kPi / 2, w.q2_angle) * retarder_jones(kPi, w.h_angle) *
                          retarder_jones(kPi / 2, w.q1_angle);
    EXPECT_TRUE(j.isApprox(expected, 1e-14));
    EXPECT_NEAR(std::abs(j.determinant() - 1.0), 0.0, 1e-12);
  }
}

TEST(passive, waveplate_decomposition_recovers_action) {
  Generator gen(47);
  auto check = [&](const SymplecticTransform& target) {
    const auto w = waveplate_decomposition(target);
    const auto realised = waveplate_transform(w).then(common_phase_shift(w.common_phase));
    for (int k = 0; k < 5; ++k) {
      const auto cm = gen.physical2();
      const auto lhs = apply(target, cm).matrix();
      const auto rhs = apply(realised, cm).matrix();
      EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-8 * std::max(1.0, cm.matrix().norm()));
    }
  };
  check(SymplecticTransform::identity(2));
  const std::size_t m1[] = {1};
  check(embed(phase_shift(0.37), m1, 2));
  for (int k = 0; k < 30; ++k) check(gen.passive2());
  EXPECT_THROW(waveplate_decomposition(two_mode_squeezer(0.3, 0.2)), Error);
}

TEST(passive, waveplates_on_tilted_reference) {
  const auto tilted = gaussent::testing::tilted_reference();
  const auto c = optimize_passive(tilted);
  const auto w = waveplate_decomposition(c.transform);
  const auto plates = waveplate_transform(w).then(common_phase_shift(w.common_phase));
  EXPECT_NEAR(log_negativity(apply(plates, tilted)), 1.32, 0.01);
  // The common phase commutes with everything and leaves nu~ unchanged.
  EXPECT_NEAR(nu_tilde(apply(waveplate_transform(w), tilted)).nu_minus, c.achieved_nu_tilde, 1e-8);
}
