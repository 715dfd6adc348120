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

#include <fmt/format.h>

namespace gaussent {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

double delta_invariant_transposed(const CovarianceMatrix& cm) {
  const auto blocks = TwoModeBlocks::from(cm);
  return blocks.alpha.determinant() + blocks.beta.determinant() - 2.0 * blocks.gamma.determinant();
}

PartialTransposeSpectrum nu_tilde(const CovarianceMatrix& cm) {
  const double delta = delta_invariant_transposed(cm);
  const double det = cm.determinant();
  const double disc = delta * delta - 4.0 * det;
  if (disc < -kPhysicalTol) {
    throw Error(ErrorCode::inconsistent_invariants,
                fmt::format("Delta~^2 - 4 det Gamma = {:.3g} is negative", disc));
  }
  const double root = std::sqrt(std::max(disc, 0.0));
  const double lo = 0.5 * (delta - root);
  if (!(lo > 0.0)) {
    throw Error(ErrorCode::unphysical,
                fmt::format("partially transposed spectrum is not positive (nu~^2 = {:.3g})", lo));
  }
  return {std::sqrt(lo), std::sqrt(0.5 * (delta + root))};
}

bool is_symmetric_state(const CovarianceMatrix& cm) {
  const auto blocks = TwoModeBlocks::from(cm);
  const double a = std::sqrt(std::max(blocks.alpha.determinant(), 0.0));
  const double b = std::sqrt(std::max(blocks.beta.determinant(), 0.0));
  return std::abs(a - b) <= kSymmetricTol;
}

double nu_tilde_symmetric(const StandardForm& sf) {
  if (std::abs(sf.a - sf.b) > kSymmetricTol) {
    throw Error(ErrorCode::not_symmetric,
                fmt::format("standard form is not symmetric (a = {}, b = {})", sf.a, sf.b));
  }
  return std::sqrt((sf.a - std::abs(sf.c_plus)) * (sf.a - std::abs(sf.c_minus)));
}

bool ppt_separable(const CovarianceMatrix& cm) {
  const double nu = nu_tilde(cm).nu_minus;
  const bool separable = nu >= 1.0 - kSeparableTol;
  if (!separable) {
    const double det_gamma = TwoModeBlocks::from(cm).gamma.determinant();
    if (det_gamma > kPhysicalTol) {
      throw Error(ErrorCode::inconsistent_invariants,
                  fmt::format("entangled verdict with det gamma = {:.3g} > 0", det_gamma));
    }
  }
  return separable;
}

double negativity_from_nu(double nu) {
  if (nu >= 1.0 - kSeparableTol) return 0.0;
  return (1.0 - nu) / (2.0 * nu);
}

double log_negativity_from_nu(double nu) {
  if (nu >= 1.0 - kSeparableTol) return 0.0;
  return -std::log2(nu);
}

double eof_kernel(double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::domain, "entanglement of formation needs nu~ > 0");
  const double plus = (1.0 + x) * (1.0 + x) / (4.0 * x);
  const double minus = (1.0 - x) * (1.0 - x) / (4.0 * x);
  return xlog2x(plus) - xlog2x(minus);
}

double eof_from_nu(double nu) {
  if (nu >= 1.0 - kSeparableTol) return 0.0;
  return std::max(0.0, eof_kernel(nu));
}

double negativity(const CovarianceMatrix& cm) { return negativity_from_nu(nu_tilde(cm).nu_minus); }

double log_negativity(const CovarianceMatrix& cm) {
  return log_negativity_from_nu(nu_tilde(cm).nu_minus);
}

double entanglement_of_formation(const CovarianceMatrix& cm) {
  if (!is_symmetric_state(cm)) {
    throw Error(ErrorCode::not_symmetric,
                "entanglement of formation is only available for symmetric states");
  }
  return eof_from_nu(nu_tilde(cm).nu_minus);
}

EntanglementReport analyze(const CovarianceMatrix& cm) {
  if (cm.modes() != 2) {
    throw Error(ErrorCode::dimension_mismatch, "entanglement analysis needs a two-mode state");
  }
  if (const auto verdict = validate_physical(cm); std::holds_alternative<Unphysical>(verdict)) {
    throw Error(ErrorCode::unphysical,
                fmt::format("covariance matrix is unphysical (min eigenvalue of G + iW = {:.6g})",
                            std::get<Unphysical>(verdict).min_eigenvalue));
  }
  const auto spectrum = nu_tilde(cm);
  EntanglementReport report{};
  report.nu_tilde_minus = spectrum.nu_minus;
  report.nu_tilde_plus = spectrum.nu_plus;
  report.separable = ppt_separable(cm);
  report.negativity = negativity_from_nu(spectrum.nu_minus);
  report.log_negativity = log_negativity_from_nu(spectrum.nu_minus);
  report.purity = purity(cm);
  report.symmetric = is_symmetric_state(cm);
  if (report.symmetric) report.eof = eof_from_nu(spectrum.nu_minus);
  return report;
}

}  // namespace gaussent
