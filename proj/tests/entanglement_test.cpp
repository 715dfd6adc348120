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

#include "gaussent/entanglement.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace gaussent;
using gaussent::testing::Generator;
using gaussent::testing::kPi;

namespace {

CovarianceMatrix rotated_reference() {
  return apply(beam_splitter(kPi / 4), gaussent::testing::squeezed_basis_reference());
}

StandardForm symmetric_form(double a, double cp, double cm) {
  Matrix4 m = Matrix4::Zero();
  m.diagonal() << a, a, a, a;
  m(0, 2) = m(2, 0) = cp;
  m(1, 3) = m(3, 1) = cm;
  return standard_form(CovarianceMatrix(m));
}

}  // namespace

TEST(entanglement, nu_tilde_examples) {
  const auto vac = nu_tilde(CovarianceMatrix::identity(2));
  EXPECT_NEAR(vac.nu_minus, 1.0, 1e-12);
  EXPECT_NEAR(vac.nu_plus, 1.0, 1e-12);
  EXPECT_NEAR(nu_tilde(rotated_reference()).nu_minus, 0.33, 1e-12);
  EXPECT_NEAR(nu_tilde(squeezed_thermal_state(1, 1, 0.5)).nu_minus, std::exp(-1.0), 1e-12);
  EXPECT_NEAR(std::exp(-1.0), 0.3679, 1e-4);
}

TEST(entanglement, nu_tilde_matches_eigen_pipeline) {
  Generator gen(21);
  for (int i = 0; i < 2000; ++i) {
    const auto cm = gen.physical2();
    const auto closed = nu_tilde(cm);
    const auto oracle = gaussent::testing::spectrum_oracle(partial_transpose(cm).matrix());
    EXPECT_NEAR(closed.nu_minus, oracle[0], 1e-8 * std::max(1.0, oracle[0]));
    EXPECT_NEAR(closed.nu_plus, oracle[1], 1e-8 * std::max(1.0, oracle[1]));
  }
}

TEST(entanglement, nu_tilde_inconsistent) {
  // Indefinite matrix whose invariants admit no real transposed spectrum.
  Matrix4 g;
  g << 0.1, -1.8, 0.6, 0.3,
      -1.8, 1.1, 0.3, 0.4,
       0.6, 0.3, 0.7, 0.3,
       0.3, 0.4, 0.3, -1.7;
  try {
    nu_tilde(CovarianceMatrix(g));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::inconsistent_invariants);
  }
}

TEST(entanglement, symmetric_nu_tilde) {
  const auto sf = standard_form(rotated_reference());
  EXPECT_NEAR(nu_tilde_symmetric(sf), 0.33, 1e-12);
  EXPECT_NEAR(nu_tilde_symmetric(symmetric_form(2.5, 0, 0)), 2.5, 1e-12);
  const double r = 0.6;
  EXPECT_NEAR(nu_tilde_symmetric(symmetric_form(std::cosh(2 * r), std::sinh(2 * r), -std::sinh(2 * r))),
              std::exp(-2 * r), 1e-12);
  Matrix4 m = Matrix4::Zero();
  m.diagonal() << 2, 2, 3, 3;
  try {
    nu_tilde_symmetric(standard_form(CovarianceMatrix(m)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_symmetric);
  }
  Generator gen(22);
  for (int i = 0; i < 200; ++i) {
    const double a = gen.uniform(1.0, 5.0);
    const double r2 = gen.uniform(0.0, 1.2);
    const auto cm = squeezed_thermal_state(a, a, r2);
    EXPECT_NEAR(nu_tilde_symmetric(standard_form(cm)), nu_tilde(cm).nu_minus, 1e-8);
  }
}

TEST(entanglement, ppt_examples) {
  const double nus[] = {2.0, 3.0};
  EXPECT_TRUE(ppt_separable(thermal_state(nus)));
  EXPECT_FALSE(ppt_separable(rotated_reference()));
  // Symmetric standard form on the boundary: sqrt((a-c)(a-c)) = 1 with
  // a = 2, c+ = -c- = 1.
  const auto boundary = symmetric_form(2.0, 1.0, -1.0).matrix();
  EXPECT_NEAR(nu_tilde(boundary).nu_minus, 1.0, 1e-12);
  EXPECT_TRUE(ppt_separable(boundary));
  EXPECT_FALSE(ppt_separable(symmetric_form(2.0, 1.0 + 1e-6, -1.0 - 1e-6).matrix()));
}

TEST(entanglement, ppt_agrees_with_delta_inequality) {
  Generator gen(23);
  int entangled = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto cm = gen.physical2(1.0, 3.0);
    const bool sep = ppt_separable(cm);
    const double det = cm.determinant();
    const bool ineq = delta_invariant_transposed(cm) <= det + 1 + 1e-9 * (1 + det);
    EXPECT_EQ(sep, ineq);
    if (!sep) {
      ++entangled;
      EXPECT_LT(TwoModeBlocks::from(cm).gamma.determinant(), 0.0);
    }
  }
  EXPECT_GT(entangled, 1000);
  EXPECT_LT(entangled, 9000);
}

TEST(entanglement, measures_of_reference_state) {
  const auto cm = rotated_reference();
  EXPECT_NEAR(log_negativity(cm), -std::log2(0.33), 1e-12);
  EXPECT_NEAR(log_negativity(cm), 1.60, 0.01);
  EXPECT_NEAR(negativity(cm), (1 - 0.33) / 0.66, 1e-12);
  EXPECT_NEAR(negativity(cm), 1.015, 1e-3);
  EXPECT_NEAR(entanglement_of_formation(cm), gaussent::testing::eof_oracle(0.33), 1e-10);
  // Direct evaluation of the closed form at x = 0.33.
  const double big = 1.33 * 1.33 / 1.32;
  const double small = 0.67 * 0.67 / 1.32;
  EXPECT_NEAR(entanglement_of_formation(cm), big * std::log2(big) - small * std::log2(small), 1e-12);
  EXPECT_NEAR(entanglement_of_formation(cm), 1.0951, 1e-4);
  EXPECT_EQ(negativity(CovarianceMatrix::identity(2)), 0.0);
  EXPECT_EQ(negativity_from_nu(1.0), 0.0);
}

TEST(entanglement, tilted_and_corrected_reference) {
  const auto tilted = apply(beam_splitter(kPi / 4), gaussent::testing::tilted_reference());
  EXPECT_NEAR(log_negativity(tilted), 1.13, 0.02);
  Matrix4 corr = Matrix4::Zero();
  corr.diagonal() << 0.4, 12.59, 12.59, 0.4;
  EXPECT_NEAR(log_negativity(apply(beam_splitter(kPi / 4), CovarianceMatrix(corr))),
              -std::log2(0.4), 1e-12);
  EXPECT_NEAR(-std::log2(0.4), 1.32, 0.01);
}

TEST(entanglement, eof_kernel) {
  EXPECT_EQ(eof_from_nu(1.0), 0.0);
  EXPECT_EQ(eof_from_nu(1.7), 0.0);
  EXPECT_EQ(eof_from_nu(1.0 - 1e-10), 0.0);
  EXPECT_GT(eof_from_nu(0.1), eof_from_nu(0.2));
  EXPECT_GT(eof_from_nu(0.2), eof_from_nu(0.5));
  Generator gen(24);
  for (int i = 0; i < 500; ++i) {
    const double x = gen.uniform(0.02, 1.0);
    EXPECT_NEAR(eof_from_nu(x), gaussent::testing::eof_oracle(x), 1e-10);
  }
  double prev = eof_from_nu(0.01);
  for (double x = 0.02; x < 1.0; x += 0.01) {
    const double v = eof_from_nu(x);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_THROW(entanglement_of_formation(squeezed_thermal_state(1.0, 2.0, 0.3)), Error);
}

TEST(entanglement, measures_vanish_together) {
  Generator gen(25);
  for (int i = 0; i < 2000; ++i) {
    const double a = gen.uniform(1.0, 3.0);
    const auto cm = apply(gen.local2(0.5), squeezed_thermal_state(a, a, gen.uniform(0.0, 1.0)));
    const auto r = analyze(cm);
    ASSERT_TRUE(r.symmetric);
    ASSERT_TRUE(r.eof.has_value());
    EXPECT_EQ(r.negativity > 0, r.log_negativity > 0);
    EXPECT_EQ(r.log_negativity > 0, *r.eof > 0);
    EXPECT_EQ(r.separable, r.log_negativity == 0);
  }
}

TEST(entanglement, local_invariance) {
  Generator gen(26);
  for (int i = 0; i < 1000; ++i) {
    const double a = gen.uniform(1.0, 3.0);
    const auto cm = squeezed_thermal_state(a, a, gen.uniform(0.0, 1.2));
    const auto moved = apply(gen.local2(0.7), cm);
    EXPECT_NEAR(log_negativity(moved), log_negativity(cm), 1e-8);
    EXPECT_NEAR(negativity(moved), negativity(cm), 1e-8);
    EXPECT_NEAR(entanglement_of_formation(moved), entanglement_of_formation(cm), 1e-8);
  }
}

TEST(entanglement, log_negativity_monotone) {
  double prev = log_negativity_from_nu(0.05);
  for (double x = 0.06; x < 1.0; x += 0.01) {
    const double v = log_negativity_from_nu(x);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_EQ(log_negativity_from_nu(1.0), 0.0);
  EXPECT_EQ(log_negativity_from_nu(2.0), 0.0);
}

TEST(entanglement, analyze) {
  const auto r = analyze(rotated_reference());
  EXPECT_NEAR(r.nu_tilde_minus, 0.33, 1e-12);
  EXPECT_NEAR(r.log_negativity, 1.60, 0.01);
  EXPECT_FALSE(r.separable);
  EXPECT_TRUE(r.symmetric);
  const auto vac = analyze(CovarianceMatrix::identity(2));
  EXPECT_EQ(vac.negativity, 0.0);
  EXPECT_EQ(vac.log_negativity, 0.0);
  EXPECT_EQ(*vac.eof, 0.0);
  EXPECT_TRUE(vac.separable);
  EXPECT_NEAR(vac.purity, 1.0, 1e-15);

  Generator gen(27);
  for (int i = 0; i < 200; ++i) {
    const double nus[] = {gen.uniform(1, 3), gen.uniform(1, 3)};
    const auto sep = apply(gen.local2(), thermal_state(nus));
    const auto rep = analyze(sep);
    EXPECT_TRUE(rep.separable);
    EXPECT_EQ(rep.negativity, 0.0);
    if (rep.eof) EXPECT_EQ(*rep.eof, 0.0);
  }
  EXPECT_FALSE(analyze(squeezed_thermal_state(1.0, 2.0, 0.3)).eof.has_value());
  try {
    analyze(CovarianceMatrix(Matrix::Identity(4, 4) * 0.5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unphysical);
  }
}
