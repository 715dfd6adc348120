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

#include "gaussent/cm_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace gaussent {

namespace {

struct RawMatrix {
  Matrix entries;
  std::vector<std::string> comments;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_error(std::string_view source, std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::parse, fmt::format("{}:{}: {}", source, line, msg));
}

double parse_double(std::string_view token, std::string_view source, std::size_t line) {
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    parse_error(source, line, fmt::format("invalid number '{}'", token));
  }
  return value;
}

RawMatrix read_block(std::istream& in, std::string_view source, std::string_view magic) {
  RawMatrix raw;
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  Eigen::Index row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      raw.comments.emplace_back(trim(text.substr(1)));
      continue;
    }
    const auto tokens = split_ws(text);
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != magic) {
        parse_error(source, line_no, fmt::format("expected header '{} <n>'", magic));
      }
      const double modes = parse_double(tokens[1], source, line_no);
      if (modes < 1 || modes != std::floor(modes) || modes > 1024) {
        parse_error(source, line_no, fmt::format("invalid mode count '{}'", tokens[1]));
      }
      n = static_cast<std::size_t>(modes);
      raw.entries = Matrix::Zero(2 * n, 2 * n);
      have_header = true;
      continue;
    }
    if (row >= raw.entries.rows()) {
      parse_error(source, line_no, "unexpected data after the last matrix row");
    }
    if (tokens.size() != 2 * n) {
      parse_error(source, line_no,
                  fmt::format("expected {} entries in row {}, found {}", 2 * n, row + 1, tokens.size()));
    }
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      raw.entries(row, static_cast<Eigen::Index>(j)) = parse_double(tokens[j], source, line_no);
    }
    ++row;
  }
  if (!have_header) parse_error(source, line_no, fmt::format("missing '{}' header", magic));
  if (row != raw.entries.rows()) {
    parse_error(source, line_no,
                fmt::format("expected {} rows, found {}", raw.entries.rows(), row));
  }
  return raw;
}

void write_block(std::ostream& out, std::string_view magic, const Matrix& m,
                 const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << magic << ' ' << m.rows() / 2 << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << fmt::format("{}", m(i, j));
    }
    out << '\n';
  }
}

}  // namespace

LoadedMatrix read_cmv1(std::istream& in, std::string_view source) {
  auto raw = read_block(in, source, "cmv1");
  const double asymmetry = (raw.entries - raw.entries.transpose()).cwiseAbs().maxCoeff();
  Matrix sym = 0.5 * (raw.entries + raw.entries.transpose());
  return {CovarianceMatrix(std::move(sym)), asymmetry, std::move(raw.comments)};
}

LoadedMatrix load_cmv1(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, fmt::format("cannot open '{}'", path));
  return read_cmv1(in, path);
}

void write_cmv1(std::ostream& out, const CovarianceMatrix& cm,
                const std::vector<std::string>& comments) {
  write_block(out, "cmv1", cm.matrix(), comments);
}

void save_cmv1(const std::string& path, const CovarianceMatrix& cm,
               const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, fmt::format("cannot write '{}'", path));
  write_cmv1(out, cm, comments);
  if (!out) throw Error(ErrorCode::io, fmt::format("write to '{}' failed", path));
}

void write_transform(std::ostream& out, const SymplecticTransform& s,
                     const std::vector<std::string>& comments) {
  write_block(out, "symplectic", s.matrix(), comments);
}

SymplecticTransform read_transform(std::istream& in, std::string_view source) {
  return SymplecticTransform(read_block(in, source, "symplectic").entries);
}

}  // namespace gaussent
