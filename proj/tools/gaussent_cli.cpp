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

// Command-line front end. Talks to the library only through the C interface.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaussent/gaussent.h"

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;
constexpr double kDeg = kPi / 180.0;

enum Exit : int { kOk = 0, kUsage = 1, kUnphysical = 2, kNotConverged = 3 };

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

int exit_for(gs_status s) {
  return s == GS_ERR_UNPHYSICAL || s == GS_ERR_INCONSISTENT ? kUnphysical : kUsage;
}

void check(gs_status s, const std::string& what) {
  if (s != GS_OK) throw Failure(exit_for(s), fmt::format("{}: {}", what, gs_last_error()));
}

struct CmDeleter {
  void operator()(gs_cm* p) const { gs_cm_free(p); }
};
using Cm = std::unique_ptr<gs_cm, CmDeleter>;

Cm take(gs_cm* p) { return Cm(p); }

std::vector<double> entries(const gs_cm* cm) {
  const std::size_t d = 2 * gs_cm_modes(cm);
  std::vector<double> out(d * d);
  check(gs_cm_entries(cm, out.data(), out.size()), "entries");
  return out;
}

double db(double variance) { return 10.0 * std::log10(variance); }

/// Resolved configuration, echoed into every output header.
struct Config {
  std::string command;
  std::vector<std::pair<std::string, std::string>> items;

  void add(std::string key, std::string value) { items.emplace_back(std::move(key), std::move(value)); }
  template <typename T>
  void add(std::string key, const T& value) {
    items.emplace_back(std::move(key), fmt::format("{}", value));
  }

  std::string header() const {
    std::string out = fmt::format("gaussent {} {}", gs_version(), command);
    for (const auto& [k, v] : items) out += fmt::format("\n{}: {}", k, v);
    return out;
  }
  std::string comment_block() const {
    std::string out;
    std::istringstream in(header());
    std::string line;
    while (std::getline(in, line)) out += "# " + line + "\n";
    return out;
  }
  json to_json() const {
    json j = json::object();
    j["tool"] = fmt::format("gaussent {}", gs_version());
    j["command"] = command;
    for (const auto& [k, v] : items) j[k] = v;
    return j;
  }
};

enum class Format { text, json };

struct Common {
  std::string input;
  std::string basis = "as-is";
  std::string format = "text";

  Format fmt() const { return format == "json" ? Format::json : Format::text; }
};

void add_basis(CLI::App* app, Common& c) {
  app->add_option("--basis", c.basis, "as-is, or rotate-45 to apply a balanced beam splitter first")
      ->check(CLI::IsMember({"as-is", "rotate-45"}))
      ->capture_default_str();
}

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

Cm load(const std::string& path) {
  gs_cm* raw = nullptr;
  double asymmetry = 0.0;
  check(gs_cm_load(path.c_str(), &raw, &asymmetry), fmt::format("loading {}", path));
  if (asymmetry > 1e-6) {
    std::cerr << fmt::format("warning: {}: asymmetry {:.3g} exceeds 1e-06; entries averaged\n", path,
                             asymmetry);
  }
  return take(raw);
}

Cm rotate45(const gs_cm* cm) {
  double bs[16];
  check(gs_beam_splitter(kPi / 4, bs), "beam splitter");
  gs_cm* out = nullptr;
  check(gs_apply(cm, bs, &out), "rotate-45");
  return take(out);
}

Cm in_basis(Cm cm, const std::string& basis) {
  return basis == "rotate-45" ? rotate45(cm.get()) : std::move(cm);
}

json matrix_json(const std::vector<double>& m, std::size_t d) {
  json rows = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d; ++j) row.push_back(m[i * d + j]);
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostream& out, const std::vector<double>& m, std::size_t d, const char* indent) {
  for (std::size_t i = 0; i < d; ++i) {
    out << indent;
    for (std::size_t j = 0; j < d; ++j) out << fmt::format("{:>12.6f}", m[i * d + j]);
    out << '\n';
  }
}

json variances_json(const std::vector<double>& m, std::size_t d) {
  json out = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    const double v = m[i * d + i];
    out.push_back({{"quadrature", i}, {"variance", v}, {"db", v > 0 ? json(db(v)) : json(nullptr)}});
  }
  return out;
}

void print_variances(std::ostream& out, const std::vector<double>& m, std::size_t d) {
  static const char* names[] = {"x", "p"};
  for (std::size_t i = 0; i < d; ++i) {
    const double v = m[i * d + i];
    out << fmt::format("  var {}{} = {:.6f}  ({})\n", names[i % 2], i / 2 + 1, v,
                       v > 0 ? fmt::format("{:+.3f} dB", db(v)) : std::string("n/a"));
  }
}

json report_json(const gs_report& r) {
  return {{"nu_tilde_minus", r.nu_tilde_minus},
          {"nu_tilde_plus", r.nu_tilde_plus},
          {"negativity", r.negativity},
          {"log_negativity", r.log_negativity},
          {"eof", r.has_eof ? json(r.eof) : json(nullptr)},
          {"purity", r.purity},
          {"separable", r.separable != 0},
          {"symmetric", r.symmetric != 0}};
}

void print_report(std::ostream& out, const gs_report& r, const char* indent = "") {
  out << fmt::format("{}nu_tilde_minus = {:.6f}\n", indent, r.nu_tilde_minus);
  out << fmt::format("{}nu_tilde_plus = {:.6f}\n", indent, r.nu_tilde_plus);
  out << fmt::format("{}negativity = {:.6f}\n", indent, r.negativity);
  out << fmt::format("{}log_negativity = {:.6f}\n", indent, r.log_negativity);
  out << fmt::format("{}eof = {}\n", indent,
                     r.has_eof ? fmt::format("{:.6f}", r.eof) : std::string("n/a (nonsymmetric state)"));
  out << fmt::format("{}purity = {:.6f}\n", indent, r.purity);
  out << fmt::format("{}separable = {}\n", indent, r.separable ? "true" : "false");
  out << fmt::format("{}symmetric = {}\n", indent, r.symmetric ? "true" : "false");
}

void emit(const Config& cfg, Format f, const json& body, const std::string& text) {
  if (f == Format::json) {
    json j = {{"config", cfg.to_json()}};
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << cfg.comment_block() << text;
  }
}

// ---- subcommands ---------------------------------------------------------

int cmd_validate(const Common& c) {
  Config cfg{"validate", {}};
  cfg.add("input", c.input);
  const Cm cm = load(c.input);
  int physical = 0;
  double min_eig = 0.0;
  check(gs_validate(cm.get(), &physical, &min_eig), "validate");
  const auto m = entries(cm.get());
  const std::size_t d = 2 * gs_cm_modes(cm.get());
  std::ostringstream text;
  text << fmt::format("modes = {}\n", d / 2);
  text << fmt::format("verdict = {}\n", physical ? "physical" : "unphysical");
  text << fmt::format("min_eigenvalue(Gamma + i Omega) = {:.6g}\n", min_eig);
  print_variances(text, m, d);
  emit(cfg, c.fmt(),
       {{"modes", d / 2}, {"physical", physical != 0}, {"min_eigenvalue", min_eig},
        {"variances", variances_json(m, d)}},
       text.str());
  return physical ? kOk : kUnphysical;
}

int cmd_analyze(const Common& c) {
  Config cfg{"analyze", {}};
  cfg.add("input", c.input);
  cfg.add("basis", c.basis);
  const Cm cm = in_basis(load(c.input), c.basis);
  gs_report r{};
  check(gs_analyze(cm.get(), &r), "analyze");
  const auto m = entries(cm.get());
  double nus[2];
  check(gs_symplectic_spectrum(cm.get(), nus, 2), "symplectic spectrum");
  std::ostringstream text;
  print_report(text, r);
  text << fmt::format("symplectic_spectrum = {:.6f} {:.6f}\n", nus[0], nus[1]);
  text << "analysed covariance matrix:\n";
  print_matrix(text, m, 4, "  ");
  print_variances(text, m, 4);
  json body = report_json(r);
  body["symplectic_spectrum"] = {nus[0], nus[1]};
  body["covariance_matrix"] = matrix_json(m, 4);
  body["variances"] = variances_json(m, 4);
  emit(cfg, c.fmt(), body, text.str());
  return kOk;
}

int cmd_standard_form(const Common& c) {
  Config cfg{"standard-form", {}};
  cfg.add("input", c.input);
  cfg.add("basis", c.basis);
  const Cm cm = in_basis(load(c.input), c.basis);
  gs_standard_form sf{};
  check(gs_standard_form_of(cm.get(), &sf), "standard form");
  const std::vector<double> local(sf.local_transform, sf.local_transform + 16);
  std::ostringstream text;
  text << fmt::format("a = {:.6f}  ({:+.3f} dB)\n", sf.a, db(sf.a));
  text << fmt::format("b = {:.6f}  ({:+.3f} dB)\n", sf.b, db(sf.b));
  text << fmt::format("c_plus = {:.6f}\n", sf.c_plus);
  text << fmt::format("c_minus = {:.6f}\n", sf.c_minus);
  text << "local transform (S1 + S2, applied as S^T Gamma S):\n";
  print_matrix(text, local, 4, "  ");
  emit(cfg, c.fmt(),
       {{"a", sf.a}, {"a_db", db(sf.a)}, {"b", sf.b}, {"b_db", db(sf.b)}, {"c_plus", sf.c_plus},
        {"c_minus", sf.c_minus}, {"local_transform", matrix_json(local, 4)}},
       text.str());
  return kOk;
}

struct OptimizeArgs {
  Common common;
  std::string output;
  std::string transform_output;
};

int cmd_optimize(const OptimizeArgs& a) {
  const Common& c = a.common;
  Config cfg{"optimize", {}};
  cfg.add("input", c.input);
  cfg.add("basis", c.basis);
  cfg.add("output", a.output);
  if (!a.transform_output.empty()) cfg.add("transform_output", a.transform_output);
  cfg.add("search", "16^4 grid over [0, 180) deg, simplex refinement");
  const Cm cm = in_basis(load(c.input), c.basis);

  gs_report before{};
  check(gs_analyze(cm.get(), &before), "analyze input");
  gs_passive_correction pc{};
  gs_cm* raw = nullptr;
  check(gs_optimize_passive(cm.get(), &pc, &raw), "optimize");
  const Cm corrected = take(raw);
  gs_report after{};
  check(gs_analyze(corrected.get(), &after), "analyze corrected");

  const std::string header =
      cfg.header() + fmt::format("\ncorrected state, analysis basis ({})\nlog_negativity before: {}\nlog_negativity after: {}",
                                 c.basis, before.log_negativity, after.log_negativity);
  check(gs_cm_save(corrected.get(), a.output.c_str(), header.c_str()), "writing corrected state");
  if (!a.transform_output.empty()) {
    check(gs_transform_save(pc.transform, a.transform_output.c_str(), cfg.header().c_str()),
          "writing transform");
  }

  const auto& w = pc.waveplates;
  const std::vector<double> t(pc.transform, pc.transform + 16);
  std::ostringstream text;
  text << fmt::format("converged = {}\n", pc.converged ? "true" : "false");
  text << fmt::format("passive_bound_nu_tilde = {:.6f}  (log_negativity bound {:.6f})\n", pc.bound_nu_tilde,
                      std::max(0.0, -std::log2(pc.bound_nu_tilde)));
  text << "before:\n";
  print_report(text, before, "  ");
  text << "after:\n";
  print_report(text, after, "  ");
  text << fmt::format("parameters (deg): phase1 {:.6f} phase2 {:.6f} beam_splitter {:.6f} phase3 {:.6f}\n",
                      pc.phase1 / kDeg, pc.phase2 / kDeg, pc.beam_splitter / kDeg, pc.phase3 / kDeg);
  text << fmt::format("removed common phase (deg): {:.6f}\n", pc.removed_common_phase / kDeg);
  text << fmt::format("waveplates (deg, light meets Q1 first): Q1 {:.6f} H {:.6f} Q2 {:.6f}, common phase {:.6f}\n",
                      w.q1_angle / kDeg, w.h_angle / kDeg, w.q2_angle / kDeg, w.common_phase / kDeg);
  text << "transform:\n";
  print_matrix(text, t, 4, "  ");
  text << "corrected covariance matrix variances:\n";
  print_variances(text, entries(corrected.get()), 4);

  emit(cfg, c.fmt(),
       {{"converged", pc.converged != 0},
        {"bound_nu_tilde", pc.bound_nu_tilde},
        {"initial_nu_tilde", pc.initial_nu_tilde},
        {"achieved_nu_tilde", pc.achieved_nu_tilde},
        {"before", report_json(before)},
        {"after", report_json(after)},
        {"parameters_deg",
         {{"phase1", pc.phase1 / kDeg}, {"phase2", pc.phase2 / kDeg}, {"beam_splitter", pc.beam_splitter / kDeg},
          {"phase3", pc.phase3 / kDeg}}},
        {"removed_common_phase_deg", pc.removed_common_phase / kDeg},
        {"waveplates_deg",
         {{"q1", w.q1_angle / kDeg}, {"h", w.h_angle / kDeg}, {"q2", w.q2_angle / kDeg},
          {"common_phase", w.common_phase / kDeg}}},
        {"transform", matrix_json(t, 4)},
        {"corrected_variances", variances_json(entries(corrected.get()), 4)}},
       text.str());
  if (!pc.converged) {
    std::cerr << fmt::format("error: passive optimisation did not reach the bound (achieved {:.8f}, bound {:.8f}); best result written\n",
                             pc.achieved_nu_tilde, pc.bound_nu_tilde);
    return kNotConverged;
  }
  return kOk;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw Failure(kUsage, "grid needs at least one step");
  if (steps == 1) return {lo};
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) out.push_back(lo + (hi - lo) * i / (steps - 1));
  return out;
}

struct Output {
  std::string path;
  std::ofstream file;

  std::ostream& stream() { return path.empty() || path == "-" ? std::cout : file; }
  void open() {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw Failure(kUsage, fmt::format("cannot write '{}'", path));
  }
};

struct SurfaceArgs {
  double a_min = 1.0, a_max = 10.0;
  int a_steps = 101;
  double theta_min = -90.0, theta_max = 90.0;
  int theta_steps = 101;
  std::string output;
};

int cmd_tilt_surface(const SurfaceArgs& s) {
  Config cfg{"sweep tilt-surface", {}};
  cfg.add("a", fmt::format("[{}, {}] x {}", s.a_min, s.a_max, s.a_steps));
  cfg.add("theta_deg", fmt::format("[{}, {}] x {}", s.theta_min, s.theta_max, s.theta_steps));
  const auto as = linspace(s.a_min, s.a_max, s.a_steps);
  const auto ts = linspace(s.theta_min, s.theta_max, s.theta_steps);
  std::vector<double> rad;
  for (double t : ts) rad.push_back(t * kDeg);
  std::vector<double> en(as.size() * ts.size());
  check(gs_tilt_surface(as.data(), as.size(), rad.data(), rad.size(), en.data()), "tilt surface");
  Output out{s.output, {}};
  out.open();
  auto& o = out.stream();
  o << cfg.comment_block();
  o << "# log_negativity in bits; squeezed_db = -10 log10(a)\n";
  o << "a\ttheta_deg\tsqueezed_db\tlog_negativity\n";
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j)
      o << fmt::format("{}\t{}\t{:.6f}\t{:.10g}\n", as[i], ts[j], -db(as[i]), en[i * ts.size() + j]);
  return kOk;
}

struct SensitivityArgs {
  std::string baseline;
  double delta_min = 0.0, delta_max = 0.3, delta_step = 0.005;
  std::string sign = "plus";
  std::string basis = "rotate-45";
  std::string output;
};

const char* block_name(gs_block b) { return b == GS_BLOCK_DIAGONAL ? "diagonal-blocks" : "off-diagonal-block"; }
const char* entries_name(gs_entry_set e) {
  switch (e) {
    case GS_ENTRIES_ALL: return "all";
    case GS_ENTRIES_STANDARD_FORM: return "standard-form";
    case GS_ENTRIES_NON_STANDARD_FORM: return "non-standard-form";
  }
  return "?";
}

int cmd_sensitivity(const SensitivityArgs& s) {
  Config cfg{"sweep sensitivity", {}};
  Cm base;
  if (s.baseline.empty()) {
    const double ref[] = {0.33, 0, 0, 0, 0, 7.94, 0, 0, 0, 0, 7.94, 0, 0, 0, 0, 0.33};
    gs_cm* raw = nullptr;
    check(gs_cm_create(2, ref, &raw), "baseline");
    base = take(raw);
    cfg.add("baseline", "built-in diag(0.33, 7.94, 7.94, 0.33)");
  } else {
    base = load(s.baseline);
    cfg.add("baseline", s.baseline);
  }
  if (!(s.delta_step > 0)) throw Failure(kUsage, "--delta-step must be positive");
  if (s.delta_max < s.delta_min) throw Failure(kUsage, "--delta-max is below --delta-min");
  std::vector<double> deltas;
  const int n = static_cast<int>(std::floor((s.delta_max - s.delta_min) / s.delta_step + 1e-9));
  for (int i = 0; i <= n; ++i) deltas.push_back(s.delta_min + i * s.delta_step);
  cfg.add("delta", fmt::format("[{}, {}] step {}", s.delta_min, s.delta_max, s.delta_step));
  cfg.add("sign", s.sign);
  cfg.add("basis", s.basis);

  gs_selection sels[6];
  const std::size_t ns = gs_error_curve_selections(sels, 6);
  std::vector<gs_sensitivity_row> rows(ns * deltas.size());
  check(gs_sensitivity_sweep(base.get(), sels, ns, deltas.data(), deltas.size(), s.sign == "minus",
                             s.basis == "rotate-45", rows.data()),
        "sensitivity sweep");

  Output out{s.output, {}};
  out.open();
  auto& o = out.stream();
  o << cfg.comment_block();
  for (gs_block b : {GS_BLOCK_DIAGONAL, GS_BLOCK_OFF_DIAGONAL}) {
    for (std::size_t k = 0; k < ns; ++k) {
      if (sels[k].block != b || sels[k].entries != GS_ENTRIES_ALL) continue;
      std::optional<double> first;
      for (std::size_t j = 0; j < deltas.size(); ++j)
        if (!rows[k * deltas.size() + j].physical) {
          first = deltas[j];
          break;
        }
      o << fmt::format("# first unphysical delta, {} / all entries: {}\n", block_name(b),
                       first ? fmt::format("{}", *first) : std::string("none in range"));
    }
  }
  o << "block\tentries\tdelta\tphysical\tlog_negativity\tdelta_log_negativity\n";
  for (const auto& r : rows) {
    o << fmt::format("{}\t{}\t{}\t{}\t{}\t{}\n", block_name(r.selection.block), entries_name(r.selection.entries),
                     r.delta, r.physical ? 1 : 0,
                     r.physical ? fmt::format("{:.10g}", r.log_negativity) : std::string("nan"),
                     r.physical ? fmt::format("{:.10g}", r.delta_log_negativity) : std::string("nan"));
  }
  return kOk;
}

struct SimulateArgs {
  Common common;
  std::size_t samples = 1000000;
  std::size_t trace_samples = 10000;
  std::uint64_t seed = 1;
  int phase_steps = 181;
  bool zero_offdiag = false;
  std::string output_dir;
};

int cmd_simulate(const SimulateArgs& a) {
  const Common& c = a.common;
  Config cfg{"simulate", {}};
  cfg.add("input", c.input);
  cfg.add("samples", a.samples);
  cfg.add("trace_samples_per_phase", a.trace_samples);
  cfg.add("seed", a.seed);
  cfg.add("phase_grid_deg", fmt::format("[0, 180] x {}", a.phase_steps));
  cfg.add("zero_offdiag", a.zero_offdiag ? "true" : "false");
  cfg.add("basis", c.basis);
  cfg.add("rng", gs_rng_algorithm());
  cfg.add("output_dir", a.output_dir);

  const Cm cm = load(c.input);
  std::filesystem::create_directories(a.output_dir);
  const std::filesystem::path dir(a.output_dir);

  const auto phases_deg = linspace(0.0, 180.0, a.phase_steps);
  std::vector<double> phases;
  for (double p : phases_deg) phases.push_back(p * kDeg);
  const std::size_t modes = gs_cm_modes(cm.get());
  json traces = json::array();
  for (std::size_t mode = 0; mode < modes; ++mode) {
    std::vector<double> var(phases.size()), ana(phases.size()), se(phases.size());
    // Each mode gets its own stream so the two traces are independent.
    const std::uint64_t seed = a.seed + 0x9e3779b97f4a7c15ULL * (mode + 1);
    check(gs_homodyne_scan(cm.get(), mode, phases.data(), phases.size(), a.trace_samples, seed, var.data(),
                           ana.data(), se.data()),
          "homodyne scan");
    const auto path = dir / fmt::format("trace_mode{}.tsv", mode + 1);
    std::ofstream o(path);
    if (!o) throw Failure(kUsage, fmt::format("cannot write '{}'", path.string()));
    o << cfg.comment_block();
    o << fmt::format("# mode: {}\n# scan seed: {}\n", mode + 1, seed);
    o << "phase_deg\tvariance\tvariance_db\tanalytic\tanalytic_db\tstd_error\n";
    std::size_t imin = 0;
    for (std::size_t k = 0; k < phases.size(); ++k) {
      o << fmt::format("{}\t{:.10g}\t{:.6f}\t{:.10g}\t{:.6f}\t{:.6g}\n", phases_deg[k], var[k], db(var[k]), ana[k],
                       db(ana[k]), se[k]);
      if (var[k] < var[imin]) imin = k;
    }
    traces.push_back({{"mode", mode + 1},
                      {"file", path.string()},
                      {"min_variance", var[imin]},
                      {"min_variance_db", db(var[imin])},
                      {"min_phase_deg", phases_deg[imin]}});
  }

  gs_cm* raw = nullptr;
  check(gs_sample_and_estimate(cm.get(), a.samples, a.seed, a.zero_offdiag ? 1 : 0, &raw), "estimate");
  const Cm est = take(raw);
  const auto est_path = (dir / "estimate.cm").string();
  check(gs_cm_save(est.get(), est_path.c_str(), (cfg.header() + "\nestimated covariance matrix, input basis").c_str()),
        "writing estimate");
  const Cm analysed = in_basis(take([&] {
                                 gs_cm* copy = nullptr;
                                 const auto e = entries(est.get());
                                 check(gs_cm_create(modes, e.data(), &copy), "copy");
                                 return copy;
                               }()),
                               c.basis);
  int physical = 0;
  double min_eig = 0.0;
  check(gs_validate(analysed.get(), &physical, &min_eig), "validate estimate");

  std::ostringstream text;
  for (const auto& t : traces) {
    text << fmt::format("trace mode {}: min variance {:.6f} ({:+.3f} dB) at {} deg -> {}\n", t["mode"].get<int>(),
                        t["min_variance"].get<double>(), t["min_variance_db"].get<double>(),
                        t["min_phase_deg"].get<double>(), t["file"].get<std::string>());
  }
  text << fmt::format("estimate -> {}\n", est_path);
  print_variances(text, entries(est.get()), 2 * modes);
  json body = {{"traces", traces}, {"estimate_file", est_path},
               {"estimate_variances", variances_json(entries(est.get()), 2 * modes)}};
  int code = kOk;
  if (!physical) {
    text << fmt::format("estimate is unphysical (min eigenvalue {:.6g})\n", min_eig);
    body["physical"] = false;
    body["min_eigenvalue"] = min_eig;
    code = kUnphysical;
  } else {
    gs_report r{};
    check(gs_analyze(analysed.get(), &r), "analyze estimate");
    text << "entanglement of the estimate:\n";
    print_report(text, r, "  ");
    body["physical"] = true;
    body["report"] = report_json(r);
  }

  const auto report_path = dir / (c.fmt() == Format::json ? "report.json" : "report.txt");
  {
    std::ofstream o(report_path);
    if (!o) throw Failure(kUsage, fmt::format("cannot write '{}'", report_path.string()));
    if (c.fmt() == Format::json) {
      json j = {{"config", cfg.to_json()}};
      for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
      o << j.dump(2) << '\n';
    } else {
      o << cfg.comment_block() << text.str();
    }
  }
  emit(cfg, c.fmt(), body, text.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode Gaussian state analysis: covariance matrices, entanglement, passive optimisation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gs_version()));

  Common validate_args;
  auto* validate = app.add_subcommand("validate", "check the uncertainty principle (exit 2 if unphysical)");
  validate->add_option("input", validate_args.input, "cmv1 file")->required();
  add_format(validate, validate_args);

  Common analyze_args;
  auto* analyze = app.add_subcommand("analyze", "entanglement report for a two-mode state");
  analyze->add_option("input", analyze_args.input, "cmv1 file")->required();
  add_basis(analyze, analyze_args);
  add_format(analyze, analyze_args);

  Common sf_args;
  auto* sf = app.add_subcommand("standard-form", "local symplectic invariants and the reducing transform");
  sf->add_option("input", sf_args.input, "cmv1 file")->required();
  add_basis(sf, sf_args);
  add_format(sf, sf_args);

  OptimizeArgs opt_args;
  auto* opt = app.add_subcommand("optimize", "maximise entanglement over passive transformations");
  opt->add_option("input", opt_args.common.input, "cmv1 file")->required();
  opt->add_option("-o,--output", opt_args.output, "corrected state (cmv1), in the analysis basis")->required();
  opt->add_option("--transform-output", opt_args.transform_output, "write the 4x4 correction");
  add_basis(opt, opt_args.common);
  add_format(opt, opt_args.common);

  auto* sweep = app.add_subcommand("sweep", "parameter sweeps (tab-separated output)");
  sweep->require_subcommand(1);
  SurfaceArgs surf;
  auto* surface = sweep->add_subcommand("tilt-surface", "log-negativity over squeezing a and tilt angle");
  surface->add_option("--a-min", surf.a_min)->capture_default_str();
  surface->add_option("--a-max", surf.a_max)->capture_default_str();
  surface->add_option("--a-steps", surf.a_steps)->capture_default_str()->check(CLI::PositiveNumber);
  surface->add_option("--theta-min", surf.theta_min, "degrees")->capture_default_str();
  surface->add_option("--theta-max", surf.theta_max, "degrees")->capture_default_str();
  surface->add_option("--theta-steps", surf.theta_steps)->capture_default_str()->check(CLI::PositiveNumber);
  surface->add_option("-o,--output", surf.output, "output file (default stdout)");

  SensitivityArgs sens;
  auto* sensitivity = sweep->add_subcommand("sensitivity", "log-negativity error under equal entry errors");
  sensitivity->add_option("--baseline", sens.baseline, "cmv1 file (default: built-in reference state)");
  sensitivity->add_option("--delta-min", sens.delta_min)->capture_default_str();
  sensitivity->add_option("--delta-max", sens.delta_max)->capture_default_str();
  sensitivity->add_option("--delta-step", sens.delta_step)->capture_default_str();
  sensitivity->add_option("--sign", sens.sign)->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
  sensitivity->add_option("--basis", sens.basis, "basis for the log-negativity")
      ->check(CLI::IsMember({"as-is", "rotate-45"}))
      ->capture_default_str();
  sensitivity->add_option("-o,--output", sens.output, "output file (default stdout)");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "homodyne traces, sampled estimate and its report");
  simulate->add_option("input", sim.common.input, "cmv1 file")->required();
  simulate->add_option("--samples", sim.samples, "samples for the covariance estimate")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  simulate->add_option("--trace-samples", sim.trace_samples, "samples per LO phase")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  simulate->add_option("--seed", sim.seed)->capture_default_str();
  simulate->add_option("--phase-steps", sim.phase_steps, "LO phases over [0, 180] deg")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_flag("--zero-offdiag", sim.zero_offdiag, "zero the x1p2 and p1x2 estimates");
  simulate->add_option("-d,--output-dir", sim.output_dir)->required();
  add_basis(simulate, sim.common);
  add_format(simulate, sim.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(validate_args);
    if (*analyze) return cmd_analyze(analyze_args);
    if (*sf) return cmd_standard_form(sf_args);
    if (*opt) return cmd_optimize(opt_args);
    if (*surface) return cmd_tilt_surface(surf);
    if (*sensitivity) return cmd_sensitivity(sens);
    if (*simulate) return cmd_simulate(sim);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what() << '\n';
    return f.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
