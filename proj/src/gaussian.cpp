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

#include "gaussent/gaussian.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

namespace gaussent {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_matrix: return "malformed matrix";
    case ErrorCode::unphysical: return "unphysical input";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::dimension_mismatch: return "dimension mismatch";
    case ErrorCode::numerical_degeneracy: return "numerical degeneracy";
    case ErrorCode::inconsistent_invariants: return "inconsistent invariants";
    case ErrorCode::not_symmetric: return "state not symmetric";
    case ErrorCode::io: return "i/o error";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::invalid_argument: return "invalid argument";
  }
  return "unknown error";
}

Matrix symplectic_form(std::size_t modes) {
  Matrix omega = Matrix::Zero(2 * modes, 2 * modes);
  for (std::size_t i = 0; i < modes; ++i) {
    omega(2 * i, 2 * i + 1) = 1.0;
    omega(2 * i + 1, 2 * i) = -1.0;
  }
  return omega;
}

CovarianceMatrix::CovarianceMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0 || entries_.rows() % 2 != 0) {
    throw Error(ErrorCode::malformed_matrix,
                fmt::format("covariance matrix must be square with even dimension, got {}x{}",
                            entries_.rows(), entries_.cols()));
  }
  if (!entries_.allFinite()) {
    throw Error(ErrorCode::malformed_matrix, "covariance matrix has non-finite entries");
  }
  const double asym = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    throw Error(ErrorCode::malformed_matrix,
                fmt::format("covariance matrix is not symmetric (max |G - G^T| = {:.3g})", asym));
  }
  entries_ = 0.5 * (entries_ + entries_.transpose());
}

CovarianceMatrix CovarianceMatrix::identity(std::size_t modes) {
  return CovarianceMatrix(Matrix::Identity(2 * modes, 2 * modes));
}

TwoModeBlocks TwoModeBlocks::from(const CovarianceMatrix& cm) {
  if (cm.modes() != 2) {
    throw Error(ErrorCode::dimension_mismatch,
                fmt::format("expected a two-mode covariance matrix, got {} modes", cm.modes()));
  }
  const Matrix& m = cm.matrix();
  return {m.block<2, 2>(0, 0), m.block<2, 2>(2, 2), m.block<2, 2>(0, 2)};
}

CovarianceMatrix TwoModeBlocks::assemble() const {
  Matrix m(4, 4);
  m << alpha, gamma, gamma.transpose(), beta;
  return CovarianceMatrix(std::move(m));
}

double ThermalSpectrum::product() const {
  double p = 1.0;
  for (double nu : nus) p *= nu;
  return p;
}

double min_uncertainty_eigenvalue(const CovarianceMatrix& cm) {
  const Eigen::MatrixXcd h =
      cm.matrix().cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) * symplectic_form(cm.modes()).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

PhysicalityVerdict validate_physical(const CovarianceMatrix& cm) {
  const double lowest = min_uncertainty_eigenvalue(cm);
  if (lowest >= -kPhysicalTol) return Physical{};
  return Unphysical{lowest};
}

bool is_physical(const CovarianceMatrix& cm) {
  return std::holds_alternative<Physical>(validate_physical(cm));
}

double purity(const CovarianceMatrix& cm) {
  const double det = cm.determinant();
  if (!(det > 0.0)) {
    throw Error(ErrorCode::unphysical, fmt::format("purity undefined for det Gamma = {:.6g}", det));
  }
  return 1.0 / std::sqrt(det);
}

CovarianceMatrix thermal_state(std::span<const double> nus) {
  if (nus.empty()) throw Error(ErrorCode::domain, "thermal state needs at least one mode");
  Matrix m = Matrix::Zero(2 * nus.size(), 2 * nus.size());
  for (std::size_t i = 0; i < nus.size(); ++i) {
    if (!(nus[i] >= 1.0)) {
      throw Error(ErrorCode::domain,
                  fmt::format("symplectic eigenvalue {} of mode {} is below 1", nus[i], i));
    }
    m(2 * i, 2 * i) = nus[i];
    m(2 * i + 1, 2 * i + 1) = nus[i];
  }
  return CovarianceMatrix(std::move(m));
}

std::vector<double> thermal_fock_distribution(double nu, std::size_t k_max) {
  if (!(nu >= 1.0)) {
    throw Error(ErrorCode::domain, fmt::format("thermal eigenvalue {} is below 1", nu));
  }
  const double ratio = (nu - 1.0) / (nu + 1.0);
  std::vector<double> p(k_max + 1);
  double term = 2.0 / (nu + 1.0);
  for (auto& pk : p) {
    pk = term;
    term *= ratio;
  }
  return p;
}

CovarianceMatrix squeezed_thermal_state(double nu_minus, double nu_plus, double r) {
  if (!(nu_minus >= 1.0) || !(nu_plus >= 1.0)) {
    throw Error(ErrorCode::domain,
                fmt::format("symplectic eigenvalues ({}, {}) must be >= 1", nu_minus, nu_plus));
  }
  const double ch2 = std::cosh(r) * std::cosh(r);
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double a = nu_minus * ch2 + nu_plus * sh2;
  const double b = nu_minus * sh2 + nu_plus * ch2;
  const double c = 0.5 * (nu_minus + nu_plus) * std::sinh(2.0 * r);
  Matrix m(4, 4);
  m << a, 0, c, 0,
       0, a, 0, -c,
       c, 0, b, 0,
       0, -c, 0, b;
  return CovarianceMatrix(std::move(m));
}

}  // namespace gaussent
