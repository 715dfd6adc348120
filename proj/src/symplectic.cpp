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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <fmt/format.h>

namespace gaussent {

namespace {

constexpr double kPairingTol = 1e-7;

void require_two_mode(const CovarianceMatrix& cm, const char* what) {
  if (cm.modes() != 2) {
    throw Error(ErrorCode::dimension_mismatch,
                fmt::format("{} supports two-mode states only, got {} modes", what, cm.modes()));
  }
}

Matrix2 rotation2(double theta) {
  Matrix2 r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

// Symmetric square root of a symmetric positive definite matrix.
Matrix spd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success || solver.eigenvalues().minCoeff() <= 0.0) {
    throw Error(ErrorCode::unphysical, "matrix is not positive definite");
  }
  return solver.operatorSqrt();
}

// Orthogonal rotations (det +1) U, V and a signed diagonal with d0 >= |d1|
// such that m = U diag(d0, d1) V^T.
void signed_svd(const Matrix2& m, Matrix2& u, Matrix2& v, double& d0, double& d1) {
  Eigen::JacobiSVD<Matrix2> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  u = svd.matrixU();
  v = svd.matrixV();
  d0 = svd.singularValues()(0);
  d1 = svd.singularValues()(1);
  if (u.determinant() < 0) {
    u.col(1) *= -1.0;
    d1 = -d1;
  }
  if (v.determinant() < 0) {
    v.col(1) *= -1.0;
    d1 = -d1;
  }
}

}  // namespace

SymplecticTransform::SymplecticTransform(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0 || m_.rows() % 2 != 0) {
    throw Error(ErrorCode::malformed_matrix,
                fmt::format("symplectic transform must be square with even dimension, got {}x{}",
                            m_.rows(), m_.cols()));
  }
  const Matrix omega = symplectic_form(modes());
  const double residual = (m_.transpose() * omega * m_ - omega).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff() * m_.cwiseAbs().maxCoeff());
  if (!(residual <= kSymplecticTol * scale)) {
    throw Error(ErrorCode::domain,
                fmt::format("matrix is not symplectic (max |S^T W S - W| = {:.3g})", residual));
  }
}

SymplecticTransform SymplecticTransform::identity(std::size_t modes) {
  return SymplecticTransform(Matrix::Identity(2 * modes, 2 * modes));
}

SymplecticTransform SymplecticTransform::then(const SymplecticTransform& other) const {
  if (other.modes() != modes()) {
    throw Error(ErrorCode::dimension_mismatch, "cannot compose transforms of different size");
  }
  return SymplecticTransform(m_ * other.m_);
}

SymplecticTransform SymplecticTransform::inverse() const {
  // S^-1 = -Omega S^T Omega
  const Matrix omega = symplectic_form(modes());
  return SymplecticTransform(-omega * m_.transpose() * omega);
}

bool SymplecticTransform::is_passive(double tol) const {
  const auto n = m_.rows();
  return (m_.transpose() * m_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= tol;
}

SymplecticTransform two_mode_squeezer(double r, double phi) {
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  const double h = std::cos(2.0 * phi);
  const double k = std::sin(2.0 * phi);
  Matrix m(4, 4);
  m << c - h * s, 0, k * s, 0,
       0, c + h * s, 0, -k * s,
       k * s, 0, c + h * s, 0,
       0, -k * s, 0, c - h * s;
  return SymplecticTransform(std::move(m));
}

SymplecticTransform single_mode_squeezer(double r) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::exp(r);
  m(1, 1) = std::exp(-r);
  return SymplecticTransform(std::move(m));
}

SymplecticTransform beam_splitter(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix m(4, 4);
  m << c, 0, -s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, s, 0, c;
  return SymplecticTransform(std::move(m));
}

SymplecticTransform phase_shift(double theta) {
  return SymplecticTransform(Matrix(rotation2(theta)));
}

SymplecticTransform direct_sum(const SymplecticTransform& first, const SymplecticTransform& second) {
  const auto n1 = first.matrix().rows();
  const auto n2 = second.matrix().rows();
  Matrix m = Matrix::Zero(n1 + n2, n1 + n2);
  m.topLeftCorner(n1, n1) = first.matrix();
  m.bottomRightCorner(n2, n2) = second.matrix();
  return SymplecticTransform(std::move(m));
}

SymplecticTransform embed(const SymplecticTransform& s, std::span<const std::size_t> target_modes,
                          std::size_t total_modes) {
  if (target_modes.size() != s.modes()) {
    throw Error(ErrorCode::invalid_argument,
                fmt::format("transform acts on {} modes but {} targets were given", s.modes(),
                            target_modes.size()));
  }
  std::vector<bool> seen(total_modes, false);
  for (std::size_t mode : target_modes) {
    if (mode >= total_modes) {
      throw Error(ErrorCode::invalid_argument,
                  fmt::format("mode index {} out of range for {} modes", mode, total_modes));
    }
    if (seen[mode]) {
      throw Error(ErrorCode::invalid_argument, fmt::format("mode index {} repeated", mode));
    }
    seen[mode] = true;
  }
  Matrix m = Matrix::Identity(2 * total_modes, 2 * total_modes);
  for (std::size_t i = 0; i < target_modes.size(); ++i) {
    for (std::size_t j = 0; j < target_modes.size(); ++j) {
      m.block<2, 2>(2 * target_modes[i], 2 * target_modes[j]) =
          s.matrix().block<2, 2>(2 * i, 2 * j);
    }
  }
  return SymplecticTransform(std::move(m));
}

CovarianceMatrix apply(const SymplecticTransform& s, const CovarianceMatrix& cm) {
  if (s.modes() != cm.modes()) {
    throw Error(ErrorCode::dimension_mismatch,
                fmt::format("transform on {} modes applied to {}-mode state", s.modes(), cm.modes()));
  }
  Matrix out = s.matrix().transpose() * cm.matrix() * s.matrix();
  out = 0.5 * (out + out.transpose()).eval();
  return CovarianceMatrix(std::move(out));
}

ThermalSpectrum symplectic_spectrum(const CovarianceMatrix& cm) {
  const Matrix m = symplectic_form(cm.modes()) * cm.matrix();
  Eigen::EigenSolver<Matrix> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::numerical_degeneracy, "eigen-decomposition of Omega Gamma failed");
  }
  std::vector<double> positive;
  std::vector<double> negative;
  double scale = 1.0;
  for (const auto& ev : solver.eigenvalues()) {
    scale = std::max(scale, std::abs(ev));
  }
  for (const auto& ev : solver.eigenvalues()) {
    if (std::abs(ev.real()) > kPairingTol * scale) {
      throw Error(ErrorCode::numerical_degeneracy,
                  fmt::format("Omega Gamma has eigenvalue with real part {:.3g}; "
                              "Gamma is not positive definite",
                              ev.real()));
    }
    (ev.imag() >= 0.0 ? positive : negative).push_back(std::abs(ev.imag()));
  }
  if (positive.size() != negative.size()) {
    throw Error(ErrorCode::numerical_degeneracy, "eigenvalues of Omega Gamma do not pair up");
  }
  std::sort(positive.begin(), positive.end());
  std::sort(negative.begin(), negative.end());
  for (std::size_t i = 0; i < positive.size(); ++i) {
    if (std::abs(positive[i] - negative[i]) > kPairingTol * scale) {
      throw Error(ErrorCode::numerical_degeneracy,
                  fmt::format("symplectic eigenvalue pairing failed ({} vs {})", positive[i],
                              negative[i]));
    }
    positive[i] = 0.5 * (positive[i] + negative[i]);
  }
  return {positive};
}

double delta_invariant(const CovarianceMatrix& cm) {
  const auto blocks = TwoModeBlocks::from(cm);
  return blocks.alpha.determinant() + blocks.beta.determinant() + 2.0 * blocks.gamma.determinant();
}

ThermalSpectrum symplectic_spectrum_two_mode(const CovarianceMatrix& cm) {
  require_two_mode(cm, "closed-form symplectic spectrum");
  const double delta = delta_invariant(cm);
  const double det = cm.determinant();
  const double disc = delta * delta - 4.0 * det;
  if (disc < -kPhysicalTol) {
    throw Error(ErrorCode::inconsistent_invariants,
                fmt::format("Delta^2 - 4 det Gamma = {:.3g} is negative", disc));
  }
  const double root = std::sqrt(std::max(disc, 0.0));
  const double lo = 0.5 * (delta - root);
  if (lo < 0.0) {
    throw Error(ErrorCode::unphysical, "negative squared symplectic eigenvalue");
  }
  return {{std::sqrt(lo), std::sqrt(0.5 * (delta + root))}};
}

WilliamsonDecomposition williamson(const CovarianceMatrix& cm) {
  const std::size_t n = cm.modes();
  const Matrix root = spd_sqrt(cm.matrix());
  const Matrix omega = symplectic_form(n);
  // A = Gamma^1/2 Omega Gamma^1/2 is antisymmetric; its real Schur form is
  // block diagonal with blocks nu_k [[0, 1], [-1, 0]] once orientations are fixed.
  const Matrix a = root * omega * root;
  Eigen::RealSchur<Matrix> schur(a);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::numerical_degeneracy, "real Schur decomposition failed");
  }
  Matrix q = schur.matrixU();
  const Matrix& t = schur.matrixT();

  std::vector<double> nus(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = static_cast<Eigen::Index>(2 * k);
    const double upper = t(i, i + 1);
    const double lower = t(i + 1, i);
    if (!(upper * lower < 0.0)) {
      throw Error(ErrorCode::numerical_degeneracy,
                  "Williamson: Schur form has a non-rotational block");
    }
    nus[k] = 0.5 * (std::abs(upper) + std::abs(lower));
    if (upper < 0.0) q.col(i).swap(q.col(i + 1));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return nus[x] < nus[y]; });

  Matrix q_sorted(2 * n, 2 * n);
  std::vector<double> sorted(n);
  Eigen::VectorXd inv_sqrt(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = static_cast<Eigen::Index>(2 * order[k]);
    const auto dst = static_cast<Eigen::Index>(2 * k);
    q_sorted.col(dst) = q.col(src);
    q_sorted.col(dst + 1) = q.col(src + 1);
    sorted[k] = nus[order[k]];
    inv_sqrt(dst) = inv_sqrt(dst + 1) = 1.0 / std::sqrt(sorted[k]);
  }
  // S = nu^-1/2 Q^T Gamma^1/2
  Matrix s = inv_sqrt.asDiagonal() * q_sorted.transpose() * root;
  return {SymplecticTransform(std::move(s)), {std::move(sorted)}};
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, std::size_t mode) {
  require_two_mode(cm, "partial transpose");
  if (mode > 1) throw Error(ErrorCode::invalid_argument, "partial transpose mode must be 0 or 1");
  Eigen::Vector4d flip = Eigen::Vector4d::Ones();
  flip(2 * static_cast<Eigen::Index>(mode) + 1) = -1.0;
  Matrix out = flip.asDiagonal() * cm.matrix() * flip.asDiagonal();
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix StandardForm::matrix() const {
  Matrix m(4, 4);
  m << a, 0, c_plus, 0,
       0, a, 0, c_minus,
       c_plus, 0, b, 0,
       0, c_minus, 0, b;
  return CovarianceMatrix(std::move(m));
}

StandardForm standard_form(const CovarianceMatrix& cm) {
  require_two_mode(cm, "standard form");
  if (!is_physical(cm)) {
    throw Error(ErrorCode::unphysical, "standard form requires a physical covariance matrix");
  }
  const auto blocks = TwoModeBlocks::from(cm);
  const double det_alpha = blocks.alpha.determinant();
  const double det_beta = blocks.beta.determinant();
  const double det_gamma = blocks.gamma.determinant();
  const double det = cm.determinant();

  const double a = std::sqrt(det_alpha);
  const double b = std::sqrt(det_beta);
  // c+ c- = det gamma and c+^2 + c-^2 = (a^2 b^2 + det_gamma^2 - det) / (ab)
  const double sum_sq = (det_alpha * det_beta + det_gamma * det_gamma - det) / (a * b);
  double disc = sum_sq * sum_sq - 4.0 * det_gamma * det_gamma;
  if (disc < -kPhysicalTol) {
    throw Error(ErrorCode::inconsistent_invariants,
                fmt::format("standard-form discriminant {:.3g} is negative", disc));
  }
  disc = std::max(disc, 0.0);
  const double big = std::max(0.0, 0.5 * (sum_sq + std::sqrt(disc)));
  const double small = std::max(0.0, 0.5 * (sum_sq - std::sqrt(disc)));
  const double c_plus = std::sqrt(big);
  const double c_minus = (det_gamma < 0.0 ? -1.0 : 1.0) * std::sqrt(small);

  // Local transform: symmetric per-mode Williamson (alpha = S1^T a S1), then
  // rotations from the signed SVD of the rescaled intermodal block.
  const Matrix2 s1 = spd_sqrt(blocks.alpha / a);
  const Matrix2 s2 = spd_sqrt(blocks.beta / b);
  const Matrix2 s1_inv = s1.inverse();
  const Matrix2 s2_inv = s2.inverse();
  const Matrix2 gamma_scaled = s1_inv.transpose() * blocks.gamma * s2_inv;
  Matrix2 u, v;
  double d0 = 0.0, d1 = 0.0;
  signed_svd(gamma_scaled, u, v, d0, d1);

  Matrix local = Matrix::Zero(4, 4);
  local.block<2, 2>(0, 0) = s1_inv * u;
  local.block<2, 2>(2, 2) = s2_inv * v;
  return {a, b, c_plus, c_minus, SymplecticTransform(std::move(local))};
}

}  // namespace gaussent
