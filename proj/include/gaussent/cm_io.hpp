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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gaussent/gaussian.hpp"
#include "gaussent/symplectic.hpp"

namespace gaussent {

/// Asymmetry above which the loader warns (it always symmetrises).
inline constexpr double kLoadAsymmetryWarning = 1e-6;

struct LoadedMatrix {
  CovarianceMatrix cm;
  /// max |G - G^T| of the entries as written, before averaging.
  double asymmetry;
  std::vector<std::string> comments;

  bool asymmetry_warning() const { return asymmetry > kLoadAsymmetryWarning; }
};

/// cmv1 text format:
///
///   # comment lines (anywhere) and blank lines are ignored
///   cmv1 <n>
///   <2n whitespace-separated decimals>   x 2n rows, row-major
///
/// Quadrature order is (x1, p1, ..., xn, pn); vacuum variance is 1.
LoadedMatrix read_cmv1(std::istream& in, std::string_view source = "<stream>");
LoadedMatrix load_cmv1(const std::string& path);

/// Writes shortest round-trip decimals; `comments` become leading `#` lines.
void write_cmv1(std::ostream& out, const CovarianceMatrix& cm,
                const std::vector<std::string>& comments = {});
void save_cmv1(const std::string& path, const CovarianceMatrix& cm,
               const std::vector<std::string>& comments = {});

/// Same layout with the magic word `symplectic`, for exported transforms.
void write_transform(std::ostream& out, const SymplecticTransform& s,
                     const std::vector<std::string>& comments = {});
SymplecticTransform read_transform(std::istream& in, std::string_view source = "<stream>");

}  // namespace gaussent
