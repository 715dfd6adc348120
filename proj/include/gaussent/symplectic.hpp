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

#include "gaussent/gaussian.hpp"

namespace gaussent {

inline constexpr double kSymplecticTol = 1e-10;

/// A real 2n x 2n matrix S with S^T Omega S = Omega. Acts on covariance
/// matrices by congruence, Gamma -> S^T Gamma S.
class SymplecticTransform {
 public:
  /// Throws ErrorCode::domain when the symplectic condition fails. The check is
  /// entrywise, scaled by the squared magnitude of S for strongly squeezing maps.
  explicit SymplecticTransform(Matrix m);

  static SymplecticTransform identity(std::size_t modes);

  std::size_t modes() const { return static_cast<std::size_t>(m_.rows()) / 2; }
  const Matrix& matrix() const { return m_; }

  /// this * other; applying the product equals applying `this` then `other`.
  SymplecticTransform then(const SymplecticTransform& other) const;
  SymplecticTransform inverse() const;

  /// Orthogonal symplectic maps preserve tr Gamma.
  bool is_passive(double tol = 1e-9) const;

 private:
  Matrix m_;
};

// Elementary transforms.
SymplecticTransform two_mode_squeezer(double r, double phi);
SymplecticTransform single_mode_squeezer(double r);
SymplecticTransform beam_splitter(double theta);
SymplecticTransform phase_shift(double theta);
/// Direct sum S1 (+) S2 of two single-mode transforms.
SymplecticTransform direct_sum(const SymplecticTransform& first, const SymplecticTransform& second);

/// Places a transform acting on `target_modes.size()` modes into an n-mode
/// identity, acting on the listed modes in the listed order.
SymplecticTransform embed(const SymplecticTransform& s, std::span<const std::size_t> target_modes,
                          std::size_t total_modes);

CovarianceMatrix apply(const SymplecticTransform& s, const CovarianceMatrix& cm);

/// General-n symplectic spectrum from the eigenvalues +-i nu of Omega Gamma.
ThermalSpectrum symplectic_spectrum(const CovarianceMatrix& cm);

/// Two-mode closed form 2 nu^2 = Delta -+ sqrt(Delta^2 - 4 det Gamma).
ThermalSpectrum symplectic_spectrum_two_mode(const CovarianceMatrix& cm);

/// Delta(Gamma) = det alpha + det beta + 2 det gamma.
double delta_invariant(const CovarianceMatrix& cm);

struct WilliamsonDecomposition {
  SymplecticTransform transform;  // Gamma = S^T diag(nu_1, nu_1, ...) S
  ThermalSpectrum spectrum;
};

WilliamsonDecomposition williamson(const CovarianceMatrix& cm);

/// Reflects the p quadrature of `mode` (0 or 1). Only two-mode states.
CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, std::size_t mode = 1);

struct StandardForm {
  double a;
  double b;
  double c_plus;
  double c_minus;
  /// S_l = S1 (+) S2 with S_l^T Gamma S_l equal to the standard form.
  SymplecticTransform local_transform;

  CovarianceMatrix matrix() const;
};

/// Local-invariant reduction. c_plus >= |c_minus| and c_plus >= 0; the sign of
/// c_minus follows det gamma.
StandardForm standard_form(const CovarianceMatrix& cm);

}  // namespace gaussent
