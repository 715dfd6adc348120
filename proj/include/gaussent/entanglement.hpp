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

#include <optional>

#include "gaussent/gaussian.hpp"
#include "gaussent/symplectic.hpp"

namespace gaussent {

inline constexpr double kSeparableTol = 1e-9;
inline constexpr double kSymmetricTol = 1e-6;

struct PartialTransposeSpectrum {
  double nu_minus;
  double nu_plus;
};

/// Symplectic eigenvalues of the partially transposed state, from the
/// invariants Delta~ = det alpha + det beta - 2 det gamma and det Gamma.
PartialTransposeSpectrum nu_tilde(const CovarianceMatrix& cm);

/// Delta~(Gamma) = det alpha + det beta - 2 det gamma.
double delta_invariant_transposed(const CovarianceMatrix& cm);

/// sqrt((a - |c+|)(a - |c-|)) for symmetric standard forms.
double nu_tilde_symmetric(const StandardForm& sf);

/// PPT criterion: separable iff nu~_- >= 1 - kSeparableTol.
bool ppt_separable(const CovarianceMatrix& cm);

double negativity(const CovarianceMatrix& cm);
/// max[0, -log2 nu~_-], in bits.
double log_negativity(const CovarianceMatrix& cm);

/// Measures as functions of nu~_- alone.
double negativity_from_nu(double nu_tilde_minus);
double log_negativity_from_nu(double nu_tilde_minus);
/// h(x) of the Gaussian entanglement of formation, with h(1) = 0 and 0 log 0 = 0.
double eof_kernel(double x);
double eof_from_nu(double nu_tilde_minus);

/// Gaussian entanglement of formation; symmetric states only.
double entanglement_of_formation(const CovarianceMatrix& cm);

bool is_symmetric_state(const CovarianceMatrix& cm);

struct EntanglementReport {
  double nu_tilde_minus;
  double nu_tilde_plus;
  double negativity;
  double log_negativity;
  std::optional<double> eof;  // symmetric states only
  double purity;
  bool separable;
  bool symmetric;
};

/// Full two-mode analysis. Throws ErrorCode::unphysical for unphysical input.
EntanglementReport analyze(const CovarianceMatrix& cm);

}  // namespace gaussent
