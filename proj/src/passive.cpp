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

#include "gaussent/passive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "gaussent/entanglement.hpp"
#include "nelder_mead.hpp"

namespace gaussent {

namespace {

constexpr int kGridSteps = 16;
constexpr int kRefinementStarts = 4;
constexpr int kMaxRestarts = 20;
constexpr double kPi = std::numbers::pi;

void require_two_mode_passive(const SymplecticTransform& s) {
  if (s.modes() != 2) {
    throw Error(ErrorCode::dimension_mismatch, "passive transforms act on two modes");
  }
  if (!s.is_passive(1e-8)) {
    throw Error(ErrorCode::domain, "transform is not passive (not orthogonal)");
  }
}

double nu_tilde_or_inf(const Matrix& congruent) {
  try {
    return nu_tilde(CovarianceMatrix(congruent)).nu_minus;
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

ModeUnitary su2_part(const ModeUnitary& u, double& common_phase) {
  common_phase = 0.5 * std::arg(u.determinant());
  return u * std::polar(1.0, -common_phase);
}

}  // namespace

ModeUnitary to_mode_unitary(const SymplecticTransform& passive) {
  require_two_mode_passive(passive);
  const Matrix m = passive.matrix().transpose();
  ModeUnitary u;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      u(j, k) = {m(2 * j, 2 * k), m(2 * j + 1, 2 * k)};
    }
  }
  return u;
}

SymplecticTransform from_mode_unitary(const ModeUnitary& u) {
  if (!(u.adjoint() * u - ModeUnitary::Identity()).isZero(1e-9)) {
    throw Error(ErrorCode::domain, "mode transformation is not unitary");
  }
  Matrix m(4, 4);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const double re = u(j, k).real();
      const double im = u(j, k).imag();
      m.block<2, 2>(2 * j, 2 * k) << re, -im, im, re;
    }
  }
  return SymplecticTransform(m.transpose());
}

SymplecticTransform common_phase_shift(double phase) {
  return from_mode_unitary(ModeUnitary::Identity() * std::polar(1.0, phase));
}

double passive_bound(const CovarianceMatrix& cm) {
  if (cm.modes() != 2) {
    throw Error(ErrorCode::dimension_mismatch, "passive bound is defined for two-mode states");
  }
  if (!is_physical(cm)) {
    throw Error(ErrorCode::unphysical, "passive bound requires a physical covariance matrix");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(cm.matrix(), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::sqrt(ev(0) * ev(1));
}

SymplecticTransform passive_transform(const PassiveParameters& p) {
  const auto outer = direct_sum(phase_shift(p.phase1), phase_shift(p.phase2));
  const auto inner = direct_sum(SymplecticTransform::identity(1), phase_shift(p.phase3));
  return outer.then(beam_splitter(p.beam_splitter)).then(inner);
}

PassiveCorrection optimize_passive(const CovarianceMatrix& cm) {
  const double bound = passive_bound(cm);
  const Matrix& gamma = cm.matrix();

  auto objective = [&](const std::vector<double>& x) {
    const Matrix p = passive_transform({x[0], x[1], x[2], x[3]}).matrix();
    return nu_tilde_or_inf(p.transpose() * gamma * p);
  };

  // Phases and beam-splitter angle act on covariance matrices with period pi.
  struct Candidate {
    double value;
    std::vector<double> x;
  };
  std::vector<Candidate> best;
  int evaluations = 0;
  const double step = kPi / kGridSteps;
  for (int i = 0; i < kGridSteps; ++i) {
    for (int j = 0; j < kGridSteps; ++j) {
      for (int k = 0; k < kGridSteps; ++k) {
        for (int l = 0; l < kGridSteps; ++l) {
          std::vector<double> x{i * step, j * step, k * step, l * step};
          const double v = objective(x);
          ++evaluations;
          // Whole families of grid points are equivalent (at zero beam-splitter
          // angle the phases act locally), so keep only distinct values.
          const bool duplicate = std::any_of(best.begin(), best.end(), [&](const Candidate& c) {
            return std::abs(c.value - v) <= 1e-12 * std::max(1.0, v);
          });
          if (duplicate) continue;
          if (best.size() < kRefinementStarts || v < best.back().value) {
            best.push_back({v, std::move(x)});
            std::sort(best.begin(), best.end(),
                      [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
            if (best.size() > kRefinementStarts) best.pop_back();
          }
        }
      }
    }
  }

  const double initial = objective({0.0, 0.0, 0.0, 0.0});
  std::vector<double> x_best{0.0, 0.0, 0.0, 0.0};
  double v_best = initial;
  int iterations = 0;
  detail::SimplexOptions options;
  options.initial_step = 0.5 * step;
  options.x_tol = 1e-8;
  options.max_iterations = 500;
  for (const auto& start : best) {
    auto result = detail::nelder_mead(objective, start.x, options);
    iterations += result.iterations;
    // The objective is flat along local phase directions, which lets the
    // simplex collapse early; restart from the best vertex until it stalls.
    for (int restart = 0; restart < kMaxRestarts; ++restart) {
      auto again = detail::nelder_mead(objective, result.x, options);
      iterations += again.iterations;
      const bool stalled = !(again.value < result.value - 1e-15);
      if (again.value < result.value) result = std::move(again);
      if (stalled) break;
    }
    // Keep the identity unless another transform is strictly better.
    if (result.value < v_best - 1e-12) {
      v_best = result.value;
      x_best = result.x;
    }
  }

  const PassiveParameters params{x_best[0], x_best[1], x_best[2], x_best[3]};
  double removed = 0.0;
  const ModeUnitary normalised = su2_part(to_mode_unitary(passive_transform(params)), removed);
  auto transform = from_mode_unitary(normalised);
  const double achieved = nu_tilde(apply(transform, cm)).nu_minus;

  return {std::move(transform),
          params,
          removed,
          initial,
          achieved,
          bound,
          achieved <= bound + kBoundAttainmentTol,
          evaluations,
          iterations};
}

ModeUnitary retarder_jones(double retardance, double angle) {
  Eigen::Matrix2d rot;
  rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  ModeUnitary d = ModeUnitary::Zero();
  d(0, 0) = 1.0;
  d(1, 1) = std::polar(1.0, retardance);
  return rot.cast<std::complex<double>>() * d * rot.transpose().cast<std::complex<double>>();
}

ModeUnitary waveplate_jones(const WaveplateSequence& w) {
  return retarder_jones(kPi / 2, w.q2_angle) * retarder_jones(kPi, w.h_angle) *
         retarder_jones(kPi / 2, w.q1_angle);
}

SymplecticTransform waveplate_transform(const WaveplateSequence& w) {
  return from_mode_unitary(waveplate_jones(w));
}

WaveplateSequence waveplate_decomposition(const SymplecticTransform& target) {
  double common = 0.0;
  const ModeUnitary v = su2_part(to_mode_unitary(target), common);

  // +-V act identically on covariance matrices.
  auto residual = [&](const std::vector<double>& x) {
    const ModeUnitary j = waveplate_jones({x[0], x[1], x[2], 0.0});
    return std::min((j - v).squaredNorm(), (j + v).squaredNorm());
  };

  constexpr int steps = 8;
  std::vector<std::pair<double, std::vector<double>>> starts;
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      for (int k = 0; k < steps; ++k) {
        std::vector<double> x{i * kPi / steps, j * kPi / steps, k * kPi / steps};
        starts.emplace_back(residual(x), std::move(x));
      }
    }
  }
  std::partial_sort(starts.begin(), starts.begin() + 8, starts.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });

  detail::SimplexOptions options;
  options.initial_step = 0.2;
  options.x_tol = 1e-13;
  options.max_iterations = 4000;
  std::vector<double> x_best;
  double r_best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 8 && r_best > 1e-22; ++s) {
    const auto result = detail::nelder_mead(residual, starts[s].second, options);
    if (result.value < r_best) {
      r_best = result.value;
      x_best = result.x;
    }
  }
  if (!(r_best <= 1e-18)) {
    throw Error(ErrorCode::numerical_degeneracy,
                fmt::format("waveplate decomposition did not converge (residual {:.3g})", r_best));
  }
  auto wrap = [](double angle) { return angle - kPi * std::floor(angle / kPi); };
  return {wrap(x_best[0]), wrap(x_best[1]), wrap(x_best[2]), common};
}

}  // namespace gaussent
