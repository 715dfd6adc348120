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

#include "gaussent/metrology.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Cholesky>
#include <fmt/format.h>

#include "gaussent/entanglement.hpp"
#include "gaussent/symplectic.hpp"

namespace gaussent {

namespace {

Matrix normal_samples(const Matrix& lower, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto dim = lower.rows();
  Matrix unit(static_cast<Eigen::Index>(count), dim);
  for (Eigen::Index i = 0; i < unit.rows(); ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) unit(i, j) = normal(engine);
  }
  return unit * lower.transpose();
}

Matrix cholesky_factor(const Matrix& m) {
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::unphysical, "covariance matrix is not positive definite");
  }
  return llt.matrixL();
}

std::optional<double> log_negativity_if_physical(const CovarianceMatrix& cm, bool rotate45) {
  if (!is_physical(cm)) return std::nullopt;
  try {
    const auto analyzed = rotate45 ? apply(beam_splitter(std::numbers::pi / 4), cm) : cm;
    return log_negativity(analyzed);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

const char* to_string(PerturbedBlock block) {
  return block == PerturbedBlock::diagonal_blocks ? "diagonal-blocks" : "off-diagonal-block";
}

const char* to_string(EntrySet set) {
  switch (set) {
    case EntrySet::all: return "all";
    case EntrySet::standard_form_entries: return "standard-form-entries";
    case EntrySet::non_standard_form_entries: return "non-standard-form-entries";
  }
  return "?";
}

std::vector<std::pair<int, int>> resolve_entries(const EntrySelection& selection) {
  const bool standard = selection.entries != EntrySet::non_standard_form_entries;
  const bool non_standard = selection.entries != EntrySet::standard_form_entries;
  std::vector<std::pair<int, int>> out;
  if (selection.block == PerturbedBlock::diagonal_blocks) {
    if (standard) out.insert(out.end(), {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    if (non_standard) out.insert(out.end(), {{0, 1}, {2, 3}});
  } else {
    if (standard) out.insert(out.end(), {{0, 2}, {1, 3}});
    if (non_standard) out.insert(out.end(), {{0, 3}, {1, 2}});
  }
  return out;
}

PerturbedState perturb(const CovarianceMatrix& cm, const PerturbationSpec& spec) {
  if (cm.modes() != 2) {
    throw Error(ErrorCode::dimension_mismatch, "perturbations are defined on two-mode states");
  }
  const double delta = spec.sign == PerturbationSign::plus ? spec.delta : -spec.delta;
  Matrix m = cm.matrix();
  for (const auto& [i, j] : resolve_entries(spec.selection)) {
    m(i, j) += delta;
    if (i != j) m(j, i) += delta;
  }
  CovarianceMatrix out(std::move(m));
  const bool physical = is_physical(out);
  return {std::move(out), physical};
}

std::vector<EntrySelection> error_curve_selections() {
  return {
      {PerturbedBlock::diagonal_blocks, EntrySet::all},
      {PerturbedBlock::diagonal_blocks, EntrySet::standard_form_entries},
      {PerturbedBlock::diagonal_blocks, EntrySet::non_standard_form_entries},
      {PerturbedBlock::off_diagonal_block, EntrySet::all},
      {PerturbedBlock::off_diagonal_block, EntrySet::non_standard_form_entries},
      {PerturbedBlock::off_diagonal_block, EntrySet::standard_form_entries},
  };
}

std::vector<SensitivityRow> sensitivity_sweep(const CovarianceMatrix& baseline,
                                              std::span<const EntrySelection> selections,
                                              std::span<const double> delta_grid,
                                              PerturbationSign sign, bool rotate45) {
  const auto reference = log_negativity_if_physical(baseline, rotate45);
  if (!reference) {
    throw Error(ErrorCode::unphysical, "sensitivity baseline must be physical");
  }
  std::vector<SensitivityRow> rows;
  rows.reserve(selections.size() * delta_grid.size());
  for (const auto& selection : selections) {
    for (double delta : delta_grid) {
      const auto state = perturb(baseline, {selection, delta, sign});
      SensitivityRow row{selection, delta, state.physical, std::nullopt, std::nullopt};
      if (state.physical) {
        row.log_negativity = log_negativity_if_physical(state.cm, rotate45);
        if (row.log_negativity) {
          row.delta_log_negativity = std::abs(*row.log_negativity - *reference);
        } else {
          row.physical = false;
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::optional<double> first_unphysical_delta(std::span<const SensitivityRow> rows,
                                             PerturbedBlock block) {
  std::optional<double> first;
  for (const auto& row : rows) {
    if (row.selection.block != block || row.physical) continue;
    if (!first || row.delta < *first) first = row.delta;
  }
  return first;
}

Matrix sample_state(const CovarianceMatrix& cm, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw Error(ErrorCode::invalid_argument, "sample count must be positive");
  return normal_samples(cholesky_factor(cm.matrix()), count, seed);
}

double quadrature_variance(const CovarianceMatrix& cm, std::size_t mode, double phase) {
  if (mode >= cm.modes()) {
    throw Error(ErrorCode::invalid_argument,
                fmt::format("mode {} out of range for {}-mode state", mode, cm.modes()));
  }
  const Eigen::Vector2d u(std::cos(phase), std::sin(phase));
  const auto i = static_cast<Eigen::Index>(2 * mode);
  return u.dot(cm.matrix().block<2, 2>(i, i) * u);
}

QuadratureTrace homodyne_scan(const CovarianceMatrix& cm, std::size_t mode,
                              std::span<const double> phases, std::size_t samples_per_phase,
                              std::uint64_t seed) {
  if (mode >= cm.modes()) {
    throw Error(ErrorCode::invalid_argument,
                fmt::format("mode {} out of range for {}-mode state", mode, cm.modes()));
  }
  if (samples_per_phase < 2) {
    throw Error(ErrorCode::invalid_argument, "homodyne scan needs at least 2 samples per phase");
  }
  if (!is_physical(cm)) {
    throw Error(ErrorCode::unphysical, "homodyne scan requires a physical covariance matrix");
  }
  const auto i = static_cast<Eigen::Index>(2 * mode);
  const Matrix lower = cholesky_factor(cm.matrix().block<2, 2>(i, i));

  QuadratureTrace trace{mode, samples_per_phase, seed, {}, {}, {}, {}, {}};
  const double n = static_cast<double>(samples_per_phase);
  for (std::size_t k = 0; k < phases.size(); ++k) {
    const double phi = phases[k];
    const Matrix xp = normal_samples(lower, samples_per_phase, seed ^ static_cast<std::uint64_t>(k));
    const Eigen::VectorXd quad = xp.col(0) * std::cos(phi) + xp.col(1) * std::sin(phi);
    const double mean = quad.mean();
    const double variance = (quad.array() - mean).square().sum() / (n - 1.0);
    const double analytic = quadrature_variance(cm, mode, phi);
    trace.phases.push_back(phi);
    trace.variances.push_back(variance);
    trace.variances_db.push_back(10.0 * std::log10(variance));
    trace.analytic_variances.push_back(analytic);
    trace.standard_errors.push_back(analytic * std::sqrt(2.0 / (n - 1.0)));
  }
  return trace;
}

CovarianceMatrix quadrature_relabel(const CovarianceMatrix& cm) {
  if (cm.modes() != 2) {
    throw Error(ErrorCode::dimension_mismatch, "quadrature relabel acts on two-mode states");
  }
  const std::size_t second[] = {1};
  return apply(embed(phase_shift(std::numbers::pi / 2), second, 2), cm);
}

CovarianceMatrix estimate_cm(const Matrix& samples, bool zero_offdiag_offblock) {
  if (samples.rows() < 2) {
    throw Error(ErrorCode::numerical_degeneracy,
                fmt::format("degenerate sample set: {} samples, need at least 2", samples.rows()));
  }
  if (samples.cols() == 0 || samples.cols() % 2 != 0) {
    throw Error(ErrorCode::malformed_matrix, "samples must have an even number of columns");
  }
  const Eigen::RowVectorXd mean = samples.colwise().mean();
  const Matrix centered = samples.rowwise() - mean;
  Matrix cov = centered.transpose() * centered / static_cast<double>(samples.rows() - 1);
  cov = 0.5 * (cov + cov.transpose()).eval();
  if (zero_offdiag_offblock) {
    if (cov.rows() != 4) {
      throw Error(ErrorCode::dimension_mismatch, "off-block zeroing needs two-mode samples");
    }
    cov(0, 3) = cov(3, 0) = 0.0;
    cov(1, 2) = cov(2, 1) = 0.0;
  }
  return CovarianceMatrix(std::move(cov));
}

}  // namespace gaussent
