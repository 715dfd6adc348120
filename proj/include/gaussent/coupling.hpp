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

#include <span>
#include <vector>

#include "gaussent/gaussian.hpp"

namespace gaussent {

/// Two squeezed modes A+ and A- whose squeezed quadratures are tilted by
/// `theta` away from orthogonality. `a` >= 1 is the anti-squeezed variance,
/// 1/a the squeezed one.
struct CoupledStateParams {
  double a;
  double theta;
};

/// Covariance matrix of (A+, A-): diag(a, 1/a) (+) [[b, c], [c, b']],
/// uncorrelated modes.
CovarianceMatrix coupled_cm_squeezed_basis(const CoupledStateParams& p);

/// The same state after a balanced beam splitter (modes A1, A2), from the
/// closed-form entries n1, n2, k, k'.
CovarianceMatrix coupled_cm_entangled_basis(const CoupledStateParams& p);

/// Closed-form squared smallest partially-transposed symplectic eigenvalue
/// between A1 and A2.
double nu_tilde_sq_analytic(const CoupledStateParams& p);

struct SurfacePoint {
  double a;
  double theta;
  double log_negativity;
};

/// Row-major over a_grid, then theta_grid.
std::vector<SurfacePoint> sweep_logneg_surface(std::span<const double> a_grid,
                                               std::span<const double> theta_grid);

enum class SqueezedMode { plus, minus };

struct NoiseEllipse {
  double major_axis_variance;
  double minor_axis_variance;
  /// Direction of the minor (squeezed) axis in the (x, p) plane, in (-pi/2, pi/2].
  double orientation_angle;
  /// Variance of the x quadrature (LO phase 0).
  double reference_variance;
};

NoiseEllipse noise_ellipse(const CoupledStateParams& p, SqueezedMode mode);

}  // namespace gaussent
