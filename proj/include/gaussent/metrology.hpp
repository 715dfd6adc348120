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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gaussent/gaussian.hpp"

namespace gaussent {

enum class PerturbedBlock { diagonal_blocks, off_diagonal_block };
enum class EntrySet { all, standard_form_entries, non_standard_form_entries };
enum class PerturbationSign { plus, minus };

const char* to_string(PerturbedBlock block);
const char* to_string(EntrySet set);

struct EntrySelection {
  PerturbedBlock block;
  EntrySet entries;
};

/// Upper-triangle (row, col) positions of a 4x4 covariance matrix covered by
/// a selection. Off-diagonal positions are mirrored when perturbed.
std::vector<std::pair<int, int>> resolve_entries(const EntrySelection& selection);

struct PerturbationSpec {
  EntrySelection selection;
  double delta;
  PerturbationSign sign = PerturbationSign::plus;
};

struct PerturbedState {
  CovarianceMatrix cm;
  bool physical;
};

/// Adds the same error to every selected entry (and its mirror). The result
/// may be unphysical; that is reported, not rejected.
PerturbedState perturb(const CovarianceMatrix& cm, const PerturbationSpec& spec);

/// The six error curves: three entry sets in each of the two block kinds.
std::vector<EntrySelection> error_curve_selections();

struct SensitivityRow {
  EntrySelection selection;
  double delta;
  bool physical;
  std::optional<double> log_negativity;        // absent when unphysical
  std::optional<double> delta_log_negativity;  // |E_N(perturbed) - E_N(baseline)|
};

/// Perturbs a baseline given in the squeezed (A+-) basis and evaluates the
/// log-negativity between the entangled modes after a balanced beam splitter
/// (or as-is when rotate45 is false). Rows are ordered by selection, then delta.
std::vector<SensitivityRow> sensitivity_sweep(const CovarianceMatrix& baseline,
                                              std::span<const EntrySelection> selections,
                                              std::span<const double> delta_grid,
                                              PerturbationSign sign = PerturbationSign::plus,
                                              bool rotate45 = true);

/// Smallest delta at which any row of the given block kind is unphysical.
std::optional<double> first_unphysical_delta(std::span<const SensitivityRow> rows,
                                             PerturbedBlock block);

/// Name of the generator behind sample_state and homodyne_scan; reproducible
/// per seed within one build.
inline constexpr const char* kRngAlgorithm = "mt19937_64+std::normal_distribution";

/// count x 2n zero-mean normal samples with covariance Gamma = L L^T.
Matrix sample_state(const CovarianceMatrix& cm, std::size_t count, std::uint64_t seed);

/// Analytic variance of x cos(phi) + p sin(phi) for one mode.
double quadrature_variance(const CovarianceMatrix& cm, std::size_t mode, double phase);

struct QuadratureTrace {
  std::size_t mode;
  std::size_t samples_per_phase;
  std::uint64_t seed;
  std::vector<double> phases;
  std::vector<double> variances;
  std::vector<double> variances_db;
  std::vector<double> analytic_variances;
  /// Standard deviation of the variance estimator, analytic * sqrt(2/(N-1)).
  std::vector<double> standard_errors;
};

/// Simulated LO phase scan. Phase point i uses seed ^ i.
QuadratureTrace homodyne_scan(const CovarianceMatrix& cm, std::size_t mode,
                              std::span<const double> phases, std::size_t samples_per_phase,
                              std::uint64_t seed);

/// In-phase to in-quadrature detection: a pi/2 phase shift on mode 2, i.e.
/// (x1, p1, x2, p2) -> (x1, p1, p2, x2) up to sign.
CovarianceMatrix quadrature_relabel(const CovarianceMatrix& cm);

/// Unbiased sample covariance of the rows of `samples`. With
/// zero_offdiag_offblock set, the off-diagonal entries of the intermodal block
/// are forced to zero.
CovarianceMatrix estimate_cm(const Matrix& samples, bool zero_offdiag_offblock = false);

}  // namespace gaussent
