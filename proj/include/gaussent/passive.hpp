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

#include <complex>

#include <Eigen/Dense>

#include "gaussent/gaussian.hpp"
#include "gaussent/symplectic.hpp"

namespace gaussent {

using ModeUnitary = Eigen::Matrix2cd;

/// Passive two-mode transforms correspond to 2x2 unitaries on the mode
/// amplitudes: a -> U a, equivalently (x + ip) -> U (x + ip).
ModeUnitary to_mode_unitary(const SymplecticTransform& passive);
SymplecticTransform from_mode_unitary(const ModeUnitary& u);

/// The same phase shift applied to both modes.
SymplecticTransform common_phase_shift(double phase);

/// Smallest nu~_- reachable by passive transforms: sqrt(lambda_1 lambda_2) of
/// the two smallest ordinary eigenvalues of Gamma.
double passive_bound(const CovarianceMatrix& cm);

/// P = (R(phase1) (+) R(phase2)) * B(beam_splitter) * (1 (+) R(phase3)).
/// These four angles cover the whole two-mode passive group.
struct PassiveParameters {
  double phase1 = 0.0;
  double phase2 = 0.0;
  double beam_splitter = 0.0;
  double phase3 = 0.0;
};

SymplecticTransform passive_transform(const PassiveParameters& p);

struct PassiveCorrection {
  /// Normalised to det U = 1; differs from passive_transform(parameters) by
  /// the common phase `removed_common_phase`, which does not change entanglement.
  SymplecticTransform transform;
  PassiveParameters parameters;
  double removed_common_phase;
  double initial_nu_tilde;
  double achieved_nu_tilde;
  double bound_nu_tilde;
  bool converged;
  int grid_evaluations;
  int refinement_iterations;
};

inline constexpr double kBoundAttainmentTol = 1e-5;

/// Minimises nu~_- of P^T Gamma P over the passive group: a 16-step grid per
/// angle followed by simplex refinement. Never throws for non-attainment;
/// `converged` reports whether the bound was met within kBoundAttainmentTol.
PassiveCorrection optimize_passive(const CovarianceMatrix& cm);

/// Jones matrix of a linear retarder with fast axis at `angle` and
/// retardation e^{i retardance} on the slow axis.
ModeUnitary retarder_jones(double retardance, double angle);

/// Quarter, half, quarter plate angles (radians). Light meets q1 first.
struct WaveplateSequence {
  double q1_angle;
  double h_angle;
  double q2_angle;
  /// Target = plates followed by a common phase shift of this amount.
  double common_phase;
};

ModeUnitary waveplate_jones(const WaveplateSequence& w);
/// Symplectic action of the three plates alone (without the common phase).
SymplecticTransform waveplate_transform(const WaveplateSequence& w);

/// Finds Q-H-Q plate angles reproducing a passive target. The plates realise
/// the det U = 1 part; any remaining common phase is returned separately.
WaveplateSequence waveplate_decomposition(const SymplecticTransform& target);

}  // namespace gaussent
