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

#include "gaussent/gaussent.h"

#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "gaussent/cm_io.hpp"
#include "gaussent/coupling.hpp"
#include "gaussent/entanglement.hpp"
#include "gaussent/gaussian.hpp"
#include "gaussent/metrology.hpp"
#include "gaussent/passive.hpp"
#include "gaussent/symplectic.hpp"

struct gs_cm {
  gaussent::CovarianceMatrix cm;
};

namespace {

using gaussent::CovarianceMatrix;
using gaussent::Error;
using gaussent::ErrorCode;
using gaussent::Matrix;

thread_local std::string g_last_error;

gs_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_matrix: return GS_ERR_MALFORMED;
    case ErrorCode::unphysical: return GS_ERR_UNPHYSICAL;
    case ErrorCode::domain: return GS_ERR_DOMAIN;
    case ErrorCode::dimension_mismatch: return GS_ERR_DIMENSION;
    case ErrorCode::numerical_degeneracy: return GS_ERR_DEGENERATE;
    case ErrorCode::inconsistent_invariants: return GS_ERR_INCONSISTENT;
    case ErrorCode::not_symmetric: return GS_ERR_NOT_SYMMETRIC;
    case ErrorCode::io: return GS_ERR_IO;
    case ErrorCode::parse: return GS_ERR_PARSE;
    case ErrorCode::invalid_argument: return GS_ERR_INVALID_ARGUMENT;
  }
  return GS_ERR_INTERNAL;
}

template <typename F>
gs_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return GS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GS_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

const CovarianceMatrix& deref(const gs_cm* cm) {
  require(cm != nullptr, "null covariance matrix handle");
  return cm->cm;
}

void emit(gs_cm** out, CovarianceMatrix cm) {
  *out = new gs_cm{std::move(cm)};
}

Matrix read4(const double m[16]) {
  Matrix s(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s(i, j) = m[4 * i + j];
  return s;
}

void write4(const Matrix& s, double out[16]) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = s(i, j);
}

gaussent::EntrySelection from_c(const gs_selection& s) {
  gaussent::EntrySelection sel{};
  switch (s.block) {
    case GS_BLOCK_DIAGONAL: sel.block = gaussent::PerturbedBlock::diagonal_blocks; break;
    case GS_BLOCK_OFF_DIAGONAL: sel.block = gaussent::PerturbedBlock::off_diagonal_block; break;
    default: throw Error(ErrorCode::invalid_argument, "unknown block selector");
  }
  switch (s.entries) {
    case GS_ENTRIES_ALL: sel.entries = gaussent::EntrySet::all; break;
    case GS_ENTRIES_STANDARD_FORM: sel.entries = gaussent::EntrySet::standard_form_entries; break;
    case GS_ENTRIES_NON_STANDARD_FORM:
      sel.entries = gaussent::EntrySet::non_standard_form_entries;
      break;
    default: throw Error(ErrorCode::invalid_argument, "unknown entry set");
  }
  return sel;
}

gs_selection to_c(const gaussent::EntrySelection& s) {
  gs_selection out{};
  out.block = s.block == gaussent::PerturbedBlock::diagonal_blocks ? GS_BLOCK_DIAGONAL
                                                                   : GS_BLOCK_OFF_DIAGONAL;
  switch (s.entries) {
    case gaussent::EntrySet::all: out.entries = GS_ENTRIES_ALL; break;
    case gaussent::EntrySet::standard_form_entries: out.entries = GS_ENTRIES_STANDARD_FORM; break;
    case gaussent::EntrySet::non_standard_form_entries:
      out.entries = GS_ENTRIES_NON_STANDARD_FORM;
      break;
  }
  return out;
}

std::vector<std::string> split_lines(const char* text) {
  std::vector<std::string> lines;
  if (text == nullptr) return lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

extern "C" {

const char* gs_last_error(void) { return g_last_error.c_str(); }

const char* gs_status_name(gs_status status) {
  switch (status) {
    case GS_OK: return "ok";
    case GS_ERR_MALFORMED: return "malformed_matrix";
    case GS_ERR_UNPHYSICAL: return "unphysical";
    case GS_ERR_DOMAIN: return "domain";
    case GS_ERR_DIMENSION: return "dimension_mismatch";
    case GS_ERR_DEGENERATE: return "numerical_degeneracy";
    case GS_ERR_INCONSISTENT: return "inconsistent_invariants";
    case GS_ERR_NOT_SYMMETRIC: return "not_symmetric";
    case GS_ERR_IO: return "io";
    case GS_ERR_PARSE: return "parse";
    case GS_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case GS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* gs_version(void) { return "0.1.0"; }

const char* gs_rng_algorithm(void) { return gaussent::kRngAlgorithm; }

gs_status gs_cm_create(size_t modes, const double* entries, gs_cm** out) {
  return guarded([&] {
    require(entries != nullptr && out != nullptr, "null argument");
    require(modes > 0, "mode count must be positive");
    const Eigen::Index d = static_cast<Eigen::Index>(2 * modes);
    Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) m(i, j) = entries[i * d + j];
    emit(out, CovarianceMatrix(std::move(m)));
  });
}

gs_status gs_cm_load(const char* path, gs_cm** out, double* asymmetry) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    auto loaded = gaussent::load_cmv1(path);
    if (asymmetry != nullptr) *asymmetry = loaded.asymmetry;
    emit(out, std::move(loaded.cm));
  });
}

gs_status gs_cm_save(const gs_cm* cm, const char* path, const char* header) {
  return guarded([&] {
    require(path != nullptr, "null path");
    gaussent::save_cmv1(path, deref(cm), split_lines(header));
  });
}

void gs_cm_free(gs_cm* cm) { delete cm; }

size_t gs_cm_modes(const gs_cm* cm) { return cm == nullptr ? 0 : cm->cm.modes(); }

gs_status gs_cm_entries(const gs_cm* cm, double* out, size_t len) {
  return guarded([&] {
    const auto& g = deref(cm);
    require(out != nullptr, "null output");
    const size_t d = g.dim();
    if (len < d * d) throw Error(ErrorCode::dimension_mismatch, "output buffer too small");
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        out[i * d + j] = g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  });
}

gs_status gs_cm_vacuum(size_t modes, gs_cm** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(modes > 0, "mode count must be positive");
    emit(out, CovarianceMatrix::identity(modes));
  });
}

gs_status gs_cm_thermal(const double* nus, size_t modes, gs_cm** out) {
  return guarded([&] {
    require(nus != nullptr && out != nullptr, "null argument");
    emit(out, gaussent::thermal_state({nus, modes}));
  });
}

gs_status gs_cm_squeezed_thermal(double nu_minus, double nu_plus, double r, gs_cm** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    emit(out, gaussent::squeezed_thermal_state(nu_minus, nu_plus, r));
  });
}

gs_status gs_cm_coupled(double a, double theta, int entangled_basis, gs_cm** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const gaussent::CoupledStateParams p{a, theta};
    emit(out, entangled_basis ? gaussent::coupled_cm_entangled_basis(p)
                              : gaussent::coupled_cm_squeezed_basis(p));
  });
}

gs_status gs_validate(const gs_cm* cm, int* physical, double* min_eigenvalue) {
  return guarded([&] {
    const auto& g = deref(cm);
    const double m = gaussent::min_uncertainty_eigenvalue(g);
    if (physical != nullptr) *physical = m >= -gaussent::kPhysicalTol ? 1 : 0;
    if (min_eigenvalue != nullptr) *min_eigenvalue = m;
  });
}

gs_status gs_purity(const gs_cm* cm, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = gaussent::purity(deref(cm));
  });
}

gs_status gs_symplectic_spectrum(const gs_cm* cm, double* out, size_t len) {
  return guarded([&] {
    const auto& g = deref(cm);
    require(out != nullptr, "null output");
    if (len < g.modes()) throw Error(ErrorCode::dimension_mismatch, "output buffer too small");
    const auto spec = gaussent::symplectic_spectrum(g);
    for (size_t i = 0; i < spec.nus.size(); ++i) out[i] = spec.nus[i];
  });
}

gs_status gs_beam_splitter(double theta, double out[16]) {
  return guarded([&] {
    require(out != nullptr, "null output");
    write4(gaussent::beam_splitter(theta).matrix(), out);
  });
}

gs_status gs_apply(const gs_cm* cm, const double transform[16], gs_cm** out) {
  return guarded([&] {
    const auto& g = deref(cm);
    require(transform != nullptr && out != nullptr, "null argument");
    if (g.modes() != 2) throw Error(ErrorCode::dimension_mismatch, "transform is two-mode");
    emit(out, gaussent::apply(gaussent::SymplecticTransform(read4(transform)), g));
  });
}

gs_status gs_transform_save(const double transform[16], const char* path, const char* header) {
  return guarded([&] {
    require(transform != nullptr && path != nullptr, "null argument");
    const gaussent::SymplecticTransform s(read4(transform));
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io, std::string("cannot write '") + path + "'");
    gaussent::write_transform(out, s, split_lines(header));
    out.flush();
    if (!out) throw Error(ErrorCode::io, std::string("write to '") + path + "' failed");
  });
}

gs_status gs_partial_transpose(const gs_cm* cm, gs_cm** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    emit(out, gaussent::partial_transpose(deref(cm)));
  });
}

gs_status gs_standard_form_of(const gs_cm* cm, gs_standard_form* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto sf = gaussent::standard_form(deref(cm));
    out->a = sf.a;
    out->b = sf.b;
    out->c_plus = sf.c_plus;
    out->c_minus = sf.c_minus;
    write4(sf.local_transform.matrix(), out->local_transform);
  });
}

gs_status gs_analyze(const gs_cm* cm, gs_report* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto r = gaussent::analyze(deref(cm));
    out->nu_tilde_minus = r.nu_tilde_minus;
    out->nu_tilde_plus = r.nu_tilde_plus;
    out->negativity = r.negativity;
    out->log_negativity = r.log_negativity;
    out->has_eof = r.eof.has_value() ? 1 : 0;
    out->eof = r.eof.value_or(std::numeric_limits<double>::quiet_NaN());
    out->purity = r.purity;
    out->separable = r.separable ? 1 : 0;
    out->symmetric = r.symmetric ? 1 : 0;
  });
}

gs_status gs_passive_bound(const gs_cm* cm, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = gaussent::passive_bound(deref(cm));
  });
}

static void fill_waveplates(const gaussent::WaveplateSequence& w, gs_waveplates* out) {
  out->q1_angle = w.q1_angle;
  out->h_angle = w.h_angle;
  out->q2_angle = w.q2_angle;
  out->common_phase = w.common_phase;
}

gs_status gs_optimize_passive(const gs_cm* cm, gs_passive_correction* out, gs_cm** corrected) {
  return guarded([&] {
    const auto& g = deref(cm);
    require(out != nullptr, "null output");
    const auto c = gaussent::optimize_passive(g);
    write4(c.transform.matrix(), out->transform);
    out->phase1 = c.parameters.phase1;
    out->phase2 = c.parameters.phase2;
    out->beam_splitter = c.parameters.beam_splitter;
    out->phase3 = c.parameters.phase3;
    out->removed_common_phase = c.removed_common_phase;
    out->initial_nu_tilde = c.initial_nu_tilde;
    out->achieved_nu_tilde = c.achieved_nu_tilde;
    out->bound_nu_tilde = c.bound_nu_tilde;
    out->converged = c.converged ? 1 : 0;
    fill_waveplates(gaussent::waveplate_decomposition(c.transform), &out->waveplates);
    if (corrected != nullptr) emit(corrected, gaussent::apply(c.transform, g));
  });
}

gs_status gs_waveplate_decomposition(const double transform[16], gs_waveplates* out) {
  return guarded([&] {
    require(transform != nullptr && out != nullptr, "null argument");
    fill_waveplates(
        gaussent::waveplate_decomposition(gaussent::SymplecticTransform(read4(transform))), out);
  });
}

gs_status gs_tilt_surface(const double* a_grid, size_t n_a, const double* theta_grid,
                          size_t n_theta, double* out_logneg) {
  return guarded([&] {
    require(a_grid != nullptr && theta_grid != nullptr && out_logneg != nullptr, "null argument");
    const auto pts = gaussent::sweep_logneg_surface({a_grid, n_a}, {theta_grid, n_theta});
    for (size_t i = 0; i < pts.size(); ++i) out_logneg[i] = pts[i].log_negativity;
  });
}

size_t gs_error_curve_selections(gs_selection* out, size_t len) {
  const auto sels = gaussent::error_curve_selections();
  if (out != nullptr)
    for (size_t i = 0; i < sels.size() && i < len; ++i) out[i] = to_c(sels[i]);
  return sels.size();
}

gs_status gs_sensitivity_sweep(const gs_cm* baseline, const gs_selection* selections,
                               size_t n_selections, const double* deltas, size_t n_deltas,
                               int negative_sign, int rotate45, gs_sensitivity_row* rows) {
  return guarded([&] {
    const auto& g = deref(baseline);
    require(selections != nullptr && deltas != nullptr && rows != nullptr, "null argument");
    std::vector<gaussent::EntrySelection> sels;
    for (size_t i = 0; i < n_selections; ++i) sels.push_back(from_c(selections[i]));
    const auto out = gaussent::sensitivity_sweep(
        g, sels, {deltas, n_deltas},
        negative_sign ? gaussent::PerturbationSign::minus : gaussent::PerturbationSign::plus,
        rotate45 != 0);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (size_t i = 0; i < out.size(); ++i) {
      rows[i].selection = to_c(out[i].selection);
      rows[i].delta = out[i].delta;
      rows[i].physical = out[i].physical ? 1 : 0;
      rows[i].log_negativity = out[i].log_negativity.value_or(nan);
      rows[i].delta_log_negativity = out[i].delta_log_negativity.value_or(nan);
    }
  });
}

gs_status gs_homodyne_scan(const gs_cm* cm, size_t mode, const double* phases, size_t n_phases,
                           size_t samples_per_phase, uint64_t seed, double* variances,
                           double* analytic, double* standard_error) {
  return guarded([&] {
    require(phases != nullptr && variances != nullptr, "null argument");
    const auto t =
        gaussent::homodyne_scan(deref(cm), mode, {phases, n_phases}, samples_per_phase, seed);
    for (size_t i = 0; i < n_phases; ++i) {
      variances[i] = t.variances[i];
      if (analytic != nullptr) analytic[i] = t.analytic_variances[i];
      if (standard_error != nullptr) standard_error[i] = t.standard_errors[i];
    }
  });
}

gs_status gs_sample_and_estimate(const gs_cm* cm, size_t count, uint64_t seed,
                                 int zero_offdiag_offblock, gs_cm** estimate) {
  return guarded([&] {
    const auto& g = deref(cm);
    require(estimate != nullptr, "null output");
    const Matrix samples = gaussent::sample_state(g, count, seed);
    emit(estimate, gaussent::estimate_cm(samples, zero_offdiag_offblock != 0));
  });
}

gs_status gs_quadrature_relabel(const gs_cm* cm, gs_cm** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    emit(out, gaussent::quadrature_relabel(deref(cm)));
  });
}

}  // extern "C"
