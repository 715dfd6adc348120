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

#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "gaussent/errors.hpp"

namespace gaussent {

using Matrix = Eigen::MatrixXd;
using Matrix2 = Eigen::Matrix2d;
using Matrix4 = Eigen::Matrix4d;

// Tolerances shared across modules. Values are in shot-noise units.
inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kPhysicalTol = 1e-9;

/// Block-diagonal symplectic form Omega = (+)_i [[0, 1], [-1, 0]] for n modes.
Matrix symplectic_form(std::size_t modes);

/// Zero-mean Gaussian state covariance matrix in (x1, p1, ..., xn, pn) order,
/// normalised so that the vacuum has unit variance.
///
/// Construction enforces shape and symmetry only. Positivity is a property of
/// the state, checked by validate_physical(), because perturbed or estimated
/// matrices must be representable even when they are not physical.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix entries);

  static CovarianceMatrix identity(std::size_t modes);

  std::size_t modes() const { return static_cast<std::size_t>(entries_.rows()) / 2; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  double determinant() const { return entries_.determinant(); }
  double trace() const { return entries_.trace(); }

 private:
  Matrix entries_;
};

/// The 2x2 blocks of a two-mode covariance matrix [[alpha, gamma], [gamma^T, beta]].
struct TwoModeBlocks {
  Matrix2 alpha;
  Matrix2 beta;
  Matrix2 gamma;

  static TwoModeBlocks from(const CovarianceMatrix& cm);
  CovarianceMatrix assemble() const;
};

/// Symplectic eigenvalues, ascending.
struct ThermalSpectrum {
  std::vector<double> nus;

  double product() const;
};

struct Physical {};
struct Unphysical {
  double min_eigenvalue;
};
using PhysicalityVerdict = std::variant<Physical, Unphysical>;

/// Physical iff the smallest eigenvalue of the Hermitian matrix Gamma + i Omega
/// is >= -kPhysicalTol.
PhysicalityVerdict validate_physical(const CovarianceMatrix& cm);
bool is_physical(const CovarianceMatrix& cm);
/// Smallest eigenvalue of Gamma + i Omega.
double min_uncertainty_eigenvalue(const CovarianceMatrix& cm);

/// Tr(rho^2) = (det Gamma)^(-1/2).
double purity(const CovarianceMatrix& cm);

CovarianceMatrix thermal_state(std::span<const double> nus);

/// Photon-number distribution p_0..p_{k_max} of a single-mode thermal state
/// with symplectic eigenvalue nu.
std::vector<double> thermal_fock_distribution(double nu, std::size_t k_max);

/// Two-mode squeezed thermal state in standard form:
///   a  = nu_- cosh^2 r + nu_+ sinh^2 r
///   b  = nu_- sinh^2 r + nu_+ cosh^2 r
///   c+ = -c- = (nu_- + nu_+)/2 sinh 2r
CovarianceMatrix squeezed_thermal_state(double nu_minus, double nu_plus, double r);

}  // namespace gaussent
