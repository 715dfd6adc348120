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

#include <functional>
#include <vector>

namespace gaussent::detail {

struct SimplexResult {
  std::vector<double> x;
  double value;
  int iterations;
  bool converged;
};

struct SimplexOptions {
  double initial_step = 0.1;
  double x_tol = 1e-8;
  int max_iterations = 500;
};

/// Derivative-free minimisation with a contracting Nelder-Mead simplex. Stops
/// when the simplex diameter falls below x_tol or after max_iterations.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, const SimplexOptions& options = {});

}  // namespace gaussent::detail
