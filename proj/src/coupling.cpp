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

#include "gaussent/coupling.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "gaussent/entanglement.hpp"

namespace gaussent {

namespace {

void require_valid(const CoupledStateParams& p) {
  if (!(p.a >= 1.0) || !std::isfinite(p.a) || !std::isfinite(p.theta)) {
    throw Error(ErrorCode::domain,
                fmt::format("coupled state needs a >= 1 and finite theta (a = {}, theta = {})", p.a,
                            p.theta));
  }
}

}  // namespace

CovarianceMatrix coupled_cm_squeezed_basis(const CoupledStateParams& p) {
  require_valid(p);
  const double a = p.a;
  const double cs = std::cos(p.theta);
  const double sn = std::sin(p.theta);
  const double b = cs * cs / a + a * sn * sn;
  const double b_prime = a * cs * cs + sn * sn / a;
  const double c = (a - 1.0 / a) * sn * cs;
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = a;
  m(1, 1) = 1.0 / a;
  m(2, 2) = b;
  m(3, 3) = b_prime;
  m(2, 3) = m(3, 2) = c;
  return CovarianceMatrix(std::move(m));
}

CovarianceMatrix coupled_cm_entangled_basis(const CoupledStateParams& p) {
  require_valid(p);
  const double a = p.a;
  const double cs = std::cos(p.theta);
  const double sn = std::sin(p.theta);
  const double n1 = (cs * cs + a * a * (sn * sn + 1.0)) / (2.0 * a);
  const double n2 = (a * a * cs * cs + sn * sn + 1.0) / (2.0 * a);
  const double k = (1.0 - a * a) / (2.0 * a) * cs * cs;
  const double kp = (a * a - 1.0) / (2.0 * a) * sn * cs;
  Matrix m(4, 4);
  m << n1, kp, k, kp,
       kp, n2, kp, -k,
       k, kp, n1, kp,
       kp, -k, kp, n2;
  return CovarianceMatrix(std::move(m));
}

double nu_tilde_sq_analytic(const CoupledStateParams& p) {
  require_valid(p);
  const double a2 = p.a * p.a;
  const double a4 = a2 * a2;
  const double cs = std::cos(p.theta);
  const double sn = std::sin(p.theta);
  const double radicand =
      cs * cs * (a4 + 6.0 * a2 + (a2 - 1.0) * (a2 - 1.0) * std::cos(2.0 * p.theta) + 1.0);
  if (radicand < -1e-12) {
    throw Error(ErrorCode::numerical_degeneracy,
                fmt::format("negative radicand {:.3g} in closed-form nu~^2", radicand));
  }
  return (2.0 * (a4 + 1.0) * cs * cs + 4.0 * a2 * sn * sn -
          std::numbers::sqrt2 * (a2 - 1.0) * std::sqrt(std::max(radicand, 0.0))) /
         (4.0 * a2);
}

std::vector<SurfacePoint> sweep_logneg_surface(std::span<const double> a_grid,
                                               std::span<const double> theta_grid) {
  if (a_grid.empty() || theta_grid.empty()) {
    throw Error(ErrorCode::invalid_argument, "sweep grids must be non-empty");
  }
  std::vector<SurfacePoint> rows;
  rows.reserve(a_grid.size() * theta_grid.size());
  for (double a : a_grid) {
    for (double theta : theta_grid) {
      const double nu = std::sqrt(nu_tilde_sq_analytic({a, theta}));
      rows.push_back({a, theta, log_negativity_from_nu(nu)});
    }
  }
  return rows;
}

NoiseEllipse noise_ellipse(const CoupledStateParams& p, SqueezedMode mode) {
  const auto cm = coupled_cm_squeezed_basis(p);
  const Eigen::Index offset = mode == SqueezedMode::plus ? 0 : 2;
  const Matrix2 block = cm.matrix().block<2, 2>(offset, offset);
  Eigen::SelfAdjointEigenSolver<Matrix2> solver(block);
  const auto& values = solver.eigenvalues();
  const Eigen::Vector2d minor = solver.eigenvectors().col(0);
  double angle = std::atan2(minor(1), minor(0));
  // Axes are undirected: fold into (-pi/2, pi/2].
  if (angle <= -std::numbers::pi / 2) angle += std::numbers::pi;
  if (angle > std::numbers::pi / 2) angle -= std::numbers::pi;
  return {values(1), values(0), angle, block(0, 0)};
}

}  // namespace gaussent
