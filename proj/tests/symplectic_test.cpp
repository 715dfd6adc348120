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

#include "gaussent/symplectic.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace gaussent;
using gaussent::testing::Generator;
using gaussent::testing::kPi;

namespace {

Matrix4 standard_matrix(double a, double b, double cp, double cm) {
  Matrix4 m = Matrix4::Zero();
  m.diagonal() << a, a, b, b;
  m(0, 2) = m(2, 0) = cp;
  m(1, 3) = m(3, 1) = cm;
  return m;
}

void expect_symplectic(const Matrix& s, double tol = 1e-10) {
  const Matrix w = gaussent::testing::omega_oracle(static_cast<int>(s.rows()) / 2);
  EXPECT_TRUE((s.transpose() * w * s - w).cwiseAbs().maxCoeff() <= tol * std::max(1.0, s.squaredNorm()));
  EXPECT_NEAR(s.determinant(), 1.0, 1e-8);
}

}  // namespace

TEST(symplectic, rejects_non_symplectic) {
  Matrix m = Matrix::Identity(2, 2) * 2.0;
  try {
    SymplecticTransform s(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::domain);
  }
}

TEST(symplectic, two_mode_squeezer) {
  EXPECT_TRUE(two_mode_squeezer(0.0, 0.3).matrix().isApprox(Matrix::Identity(4, 4)));
  const double r = 0.7;
  const Matrix s = two_mode_squeezer(r, kPi / 4).matrix();
  expect_symplectic(s);
  // h = 0, k = 1: x couples to x with +s and p to p with -s.
  EXPECT_NEAR(s(0, 2), std::sinh(r), 1e-14);
  EXPECT_NEAR(s(1, 3), -std::sinh(r), 1e-14);
  EXPECT_EQ(s(0, 3), 0.0);
  EXPECT_EQ(s(1, 2), 0.0);
  EXPECT_NEAR(s(0, 0), std::cosh(r), 1e-14);
  EXPECT_NEAR(s(1, 1), std::cosh(r), 1e-14);

  const auto cm = apply(two_mode_squeezer(r, kPi / 4), CovarianceMatrix::identity(2));
  EXPECT_LE((cm.matrix() - squeezed_thermal_state(1.0, 1.0, r).matrix()).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(symplectic, single_mode_squeezer) {
  EXPECT_EQ(single_mode_squeezer(0.0).matrix(), Matrix::Identity(2, 2));
  const Matrix s = single_mode_squeezer(std::log(2.0)).matrix();
  EXPECT_NEAR(s(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(s(1, 1), 0.5, 1e-15);
  const auto cm = apply(single_mode_squeezer(0.4), CovarianceMatrix::identity(1));
  EXPECT_NEAR(cm(0, 0), std::exp(0.8), 1e-14);
  EXPECT_NEAR(cm(1, 1), std::exp(-0.8), 1e-14);
}

TEST(symplectic, beam_splitter_composition) {
  EXPECT_EQ(beam_splitter(0.0).matrix(), Matrix::Identity(4, 4));
  Generator gen(1);
  for (int i = 0; i < 100; ++i) {
    const double t1 = gen.angle();
    const double t2 = gen.angle();
    const Matrix lhs = beam_splitter(t1).then(beam_splitter(t2)).matrix();
    EXPECT_TRUE(lhs.isApprox(beam_splitter(t1 + t2).matrix(), 1e-12));
    EXPECT_TRUE(beam_splitter(t1).is_passive());
  }
  // Two quarter turns swap the modes up to sign: R(pi/2)^2 = -1.
  const Matrix half = beam_splitter(kPi / 2).matrix();
  EXPECT_TRUE((half * half + Matrix::Identity(4, 4)).isZero(1e-15));
}

TEST(symplectic, phase_shift) {
  EXPECT_EQ(phase_shift(0.0).matrix(), Matrix::Identity(2, 2));
  const Matrix q = phase_shift(kPi / 2).matrix();
  Eigen::Vector2d v(0.3, 0.8);
  Eigen::Vector2d out = q.transpose() * v;
  // Congruence uses S^T: the quadrature vector maps (x, p) -> (p, -x) under
  // S^T, so S itself takes (x, p) to (-p, x).
  Eigen::Vector2d direct = q * v;
  EXPECT_NEAR(direct(0), -0.8, 1e-15);
  EXPECT_NEAR(direct(1), 0.3, 1e-15);
  EXPECT_NEAR(out(0), 0.8, 1e-15);
  EXPECT_TRUE(phase_shift(0.3).then(phase_shift(0.5)).matrix().isApprox(phase_shift(0.8).matrix()));
}

TEST(symplectic, embed) {
  const std::size_t m0[] = {0};
  const std::size_t m1[] = {1};
  EXPECT_EQ(embed(SymplecticTransform::identity(1), m0, 2).matrix(), Matrix::Identity(4, 4));
  const Matrix a = embed(phase_shift(0.4), m0, 2).matrix();
  const Matrix b = embed(phase_shift(0.4), m1, 2).matrix();
  EXPECT_TRUE(a.block(0, 0, 2, 2).isApprox(phase_shift(0.4).matrix()));
  EXPECT_TRUE(b.block(2, 2, 2, 2).isApprox(phase_shift(0.4).matrix()));
  EXPECT_FALSE(a.isApprox(b));
  expect_symplectic(a);
  const std::size_t swap[] = {1, 0};
  const Matrix c = embed(beam_splitter(0.3), swap, 3).matrix();
  expect_symplectic(c);
  const std::size_t dup[] = {1, 1};
  const std::size_t oob[] = {3};
  EXPECT_THROW(embed(beam_splitter(0.3), dup, 3), Error);
  EXPECT_THROW(embed(phase_shift(0.3), oob, 3), Error);
}

TEST(symplectic, apply_examples) {
  Generator gen(2);
  const auto cm = gen.physical2();
  EXPECT_EQ(apply(SymplecticTransform::identity(2), cm).matrix(), cm.matrix());
  for (int i = 0; i < 100; ++i) {
    const auto s = gen.symplectic2();
    const auto g = gen.physical2();
    EXPECT_NEAR(apply(s, g).determinant() / g.determinant(), 1.0, 1e-8);
  }
  EXPECT_THROW(apply(SymplecticTransform::identity(1), cm), Error);

  // Two squeezed vacua on orthogonal quadratures combined on a balanced beam
  // splitter give a two-mode squeezed vacuum with nu~ = 1/a.
  const double a = 3.0;
  Matrix4 d = Matrix4::Zero();
  d.diagonal() << a, 1 / a, 1 / a, a;
  const auto mixed = apply(beam_splitter(kPi / 4), CovarianceMatrix(d));
  const auto nus = gaussent::testing::spectrum_oracle(partial_transpose(mixed).matrix());
  EXPECT_NEAR(nus[0], 1 / a, 1e-12);
}

TEST(symplectic, spectrum_examples) {
  const auto vac = symplectic_spectrum(CovarianceMatrix::identity(2));
  EXPECT_NEAR(vac.nus[0], 1.0, 1e-12);
  EXPECT_NEAR(vac.nus[1], 1.0, 1e-12);
  for (double r : {0.0, 0.3, 1.1}) {
    const auto sp = symplectic_spectrum(squeezed_thermal_state(1.5, 3.0, r));
    EXPECT_NEAR(sp.nus[0], 1.5, 1e-9);
    EXPECT_NEAR(sp.nus[1], 3.0, 1e-9);
  }
  const auto ref = symplectic_spectrum(gaussent::testing::squeezed_basis_reference());
  EXPECT_NEAR(ref.nus[0], std::sqrt(0.33 * 7.94), 1e-12);
  EXPECT_NEAR(ref.nus[1], 1.619, 1e-3);
}

TEST(symplectic, spectrum_matches_oracle_and_closed_form) {
  Generator gen(3);
  for (int i = 0; i < 2000; ++i) {
    const auto cm = gen.physical2();
    const auto general = symplectic_spectrum(cm).nus;
    const auto closed = symplectic_spectrum_two_mode(cm).nus;
    const auto oracle = gaussent::testing::spectrum_oracle(cm.matrix());
    for (int k = 0; k < 2; ++k) {
      EXPECT_NEAR(general[k], oracle[k], 1e-9 * oracle[k]);
      EXPECT_NEAR(general[k], closed[k], 1e-10 * std::max(1.0, closed[k]));
    }
    EXPECT_NEAR(general[0] * general[0] * general[1] * general[1] / cm.determinant(), 1.0, 1e-8);
  }
}

TEST(symplectic, spectrum_three_modes) {
  Generator gen(4);
  const double nus[] = {1.2, 2.0, 3.5};
  const std::size_t m01[] = {0, 1};
  const std::size_t m12[] = {1, 2};
  auto s = embed(gen.symplectic2(), m01, 3).then(embed(gen.symplectic2(), m12, 3));
  const auto sp = symplectic_spectrum(apply(s, thermal_state(nus)));
  ASSERT_EQ(sp.nus.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(sp.nus[k], nus[k], 1e-8);
}

TEST(symplectic, williamson_roundtrip) {
  Generator gen(5);
  for (int i = 0; i < 1000; ++i) {
    const double n0 = gen.uniform(1.0, 4.0);
    const double n1 = gen.uniform(1.0, 4.0);
    const double nus[] = {n0, n1};
    const auto cm = apply(gen.symplectic2(), thermal_state(nus));
    const auto w = williamson(cm);
    EXPECT_NEAR(w.spectrum.nus[0], std::min(n0, n1), 1e-8);
    EXPECT_NEAR(w.spectrum.nus[1], std::max(n0, n1), 1e-8);
    const auto rebuilt = apply(w.transform, thermal_state(w.spectrum.nus));
    EXPECT_LE((rebuilt.matrix() - cm.matrix()).cwiseAbs().maxCoeff(), 1e-8);
  }
  const auto pure = williamson(squeezed_thermal_state(1.0, 1.0, 0.9));
  EXPECT_NEAR(pure.spectrum.nus[0], 1.0, 1e-9);
  EXPECT_NEAR(pure.spectrum.nus[1], 1.0, 1e-9);
  EXPECT_THROW(williamson(CovarianceMatrix(-Matrix::Identity(2, 2))), Error);
}

TEST(symplectic, partial_transpose_properties) {
  Generator gen(6);
  for (int i = 0; i < 500; ++i) {
    const auto cm = gen.physical2();
    const auto t = partial_transpose(cm);
    EXPECT_EQ(partial_transpose(t).matrix(), cm.matrix());
    EXPECT_NEAR(t.determinant() / cm.determinant(), 1.0, 1e-12);
    const auto b = TwoModeBlocks::from(cm);
    EXPECT_NEAR(delta_invariant(t),
                b.alpha.determinant() + b.beta.determinant() - 2 * b.gamma.determinant(), 1e-9);
    // Flipping either mode gives the same transposed spectrum.
    const auto s0 = symplectic_spectrum(partial_transpose(cm, 0)).nus;
    const auto s1 = symplectic_spectrum(t).nus;
    EXPECT_NEAR(s0[0], s1[0], 1e-9);
  }
  const auto sf = partial_transpose(CovarianceMatrix(standard_matrix(3, 2, 1.5, -0.7)));
  EXPECT_TRUE(sf.matrix().isApprox(standard_matrix(3, 2, 1.5, 0.7)));
  const double nus[] = {2.0, 3.0};
  const auto product = thermal_state(nus);
  EXPECT_NEAR(symplectic_spectrum(partial_transpose(product)).nus[0], 2.0, 1e-12);
  const double r = 0.45;
  EXPECT_NEAR(symplectic_spectrum(partial_transpose(squeezed_thermal_state(1, 1, r))).nus[0],
              std::exp(-2 * r), 1e-12);
  EXPECT_THROW(partial_transpose(CovarianceMatrix::identity(3)), Error);
}

TEST(symplectic, standard_form_reference) {
  const auto cm = apply(beam_splitter(kPi / 4), gaussent::testing::squeezed_basis_reference());
  const auto sf = standard_form(cm);
  EXPECT_NEAR(sf.a, 4.135, 1e-12);
  EXPECT_NEAR(sf.b, 4.135, 1e-12);
  EXPECT_NEAR(sf.c_plus, 3.805, 1e-12);
  EXPECT_NEAR(sf.c_minus, -3.805, 1e-12);
}

TEST(symplectic, standard_form_fixed_point) {
  const Matrix4 m = standard_matrix(2.0, 3.0, 1.2, -0.9);
  const auto sf = standard_form(CovarianceMatrix(m));
  EXPECT_NEAR(sf.a, 2.0, 1e-12);
  EXPECT_NEAR(sf.b, 3.0, 1e-12);
  EXPECT_NEAR(sf.c_plus, 1.2, 1e-12);
  EXPECT_NEAR(sf.c_minus, -0.9, 1e-12);
  EXPECT_LE((sf.local_transform.matrix().cwiseAbs() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(),
            1e-9);
}

TEST(symplectic, standard_form_local_invariance) {
  Generator gen(8);
  for (int i = 0; i < 1000; ++i) {
    const double a = gen.uniform(1.5, 4.0);
    const double b = gen.uniform(1.5, 4.0);
    const double cp = gen.uniform(0.1, 1.0);
    const double cm = gen.uniform(-1.0, 1.0) * cp;
    const Matrix4 m = standard_matrix(a, b, cp, cm);
    if (!is_physical(CovarianceMatrix(m))) continue;
    const auto src = apply(gen.local2(), CovarianceMatrix(m));
    const auto sf = standard_form(src);
    EXPECT_NEAR(sf.a, a, 1e-8);
    EXPECT_NEAR(sf.b, b, 1e-8);
    EXPECT_NEAR(sf.c_plus, cp, 1e-7);
    EXPECT_NEAR(sf.c_minus, cm, 1e-7);
    const auto reached = apply(sf.local_transform, src);
    EXPECT_LE((reached.matrix() - sf.matrix().matrix()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(symplectic, standard_form_invariants_on_random_states) {
  Generator gen(9);
  for (int i = 0; i < 2000; ++i) {
    const auto cm = gen.physical2();
    const auto sf = standard_form(cm);
    const auto blk = TwoModeBlocks::from(cm);
    EXPECT_GE(sf.a, 1.0 - 1e-9);
    EXPECT_GE(sf.b, 1.0 - 1e-9);
    EXPECT_GE(sf.c_plus, std::abs(sf.c_minus) - 1e-12);
    const double dg = blk.gamma.determinant();
    if (std::abs(dg) > 1e-9) EXPECT_EQ(sf.c_plus * sf.c_minus > 0, dg > 0);
    const double ab = sf.a * sf.b;
    const double det = (ab - sf.c_plus * sf.c_plus) * (ab - sf.c_minus * sf.c_minus);
    EXPECT_NEAR(det / cm.determinant(), 1.0, 1e-8);
    EXPECT_NEAR(sf.a * sf.a / blk.alpha.determinant(), 1.0, 1e-8);
    EXPECT_NEAR(sf.b * sf.b / blk.beta.determinant(), 1.0, 1e-8);
    EXPECT_NEAR(sf.c_plus * sf.c_minus, dg, 1e-8 * std::max(1.0, std::abs(dg)));
    const auto reached = apply(sf.local_transform, cm);
    EXPECT_LE((reached.matrix() - sf.matrix().matrix()).cwiseAbs().maxCoeff(),
              1e-8 * std::max(1.0, sf.a + sf.b));
  }
}

TEST(symplectic, standard_form_rejects_unphysical) {
  try {
    standard_form(CovarianceMatrix(Matrix::Identity(4, 4) * 0.5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unphysical);
  }
}

TEST(symplectic, invariance_under_congruence) {
  Generator gen(10);
  for (int i = 0; i < 2000; ++i) {
    const auto cm = gen.physical2();
    const auto before = symplectic_spectrum(cm).nus;
    const auto after = symplectic_spectrum(apply(gen.symplectic2(), cm)).nus;
    EXPECT_NEAR(before[0], after[0], 1e-8 * before[0]);
    EXPECT_NEAR(before[1], after[1], 1e-8 * before[1]);
    const auto p = gen.passive2();
    EXPECT_NEAR(apply(p, cm).trace(), cm.trace(), 1e-10 * std::max(1.0, cm.trace()));
  }
}

TEST(symplectic, uncertainty_criteria_agree) {
  Generator gen(16);
  int physical = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto cm = gen.straddling2();
    const bool direct = is_physical(cm);
    const double dlt = delta_invariant(cm);
    const double det = cm.determinant();
    const bool psd = Eigen::SelfAdjointEigenSolver<Matrix>(cm.matrix()).eigenvalues()(0) >= 0;
    const double nu_minus = gaussent::testing::spectrum_oracle(cm.matrix())[0];
    const bool closed = dlt <= 1 + det + 1e-9 * (1 + det) && psd && nu_minus >= 1 - 1e-9;
    EXPECT_EQ(direct, closed) << cm.matrix();
    physical += direct;
  }
  // The generator should land on both sides of the boundary.
  EXPECT_GT(physical, 500);
  EXPECT_LT(physical, 9500);
}

TEST(symplectic, inverse_and_passivity) {
  Generator gen(17);
  for (int i = 0; i < 100; ++i) {
    const auto s = gen.symplectic2();
    EXPECT_TRUE(s.then(s.inverse()).matrix().isIdentity(1e-9));
    EXPECT_TRUE(gen.passive2().is_passive());
  }
  EXPECT_FALSE(two_mode_squeezer(0.3, 0.1).is_passive());
}
