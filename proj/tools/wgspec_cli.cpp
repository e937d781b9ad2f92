// Copyright 2026 The wgspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through wgspec.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wgspec/wgspec.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Failure {
  std::string message;
};

void check(wgspec_status s) {
  if (s != WGSPEC_OK)
    throw Failure{std::string(wgspec_status_string(s)) + ": " + wgspec_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  wgspec_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{"cannot open '" + path + "' for writing"};
  out << text;
  if (!out) throw Failure{"write failed for '" + path + "'"};
}

// Owning wrappers so early exits release handles.
template <class T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};
using Params = Handle<wgspec_params, wgspec_params_destroy>;
using Spectrum = Handle<wgspec_spectrum, wgspec_spectrum_destroy>;
using Scan = Handle<wgspec_scan, wgspec_scan_destroy>;

struct ModelOptions {
  int n = 0;
  double omega = 100.0;
  double gamma = 1.0;
  std::optional<double> phi;
  std::vector<double> phases;
  bool no_hii = false;
  std::optional<double> extra_j;
  bool random = false;
  unsigned long long seed = 0;
};

void add_model_options(CLI::App* cmd, ModelOptions& o, bool with_phase = true) {
  cmd->add_option("--n", o.n, "number of atoms")->required();
  cmd->add_option("--omega", o.omega, "Rabi frequency (units of gamma)")->capture_default_str();
  cmd->add_option("--gamma", o.gamma, "decay rate per direction")->capture_default_str();
  if (with_phase) {
    auto* phi = cmd->add_option("--phi", o.phi, "array period; phase of atom j is j * phi");
    auto* list = cmd->add_option("--phases", o.phases, "comma-separated phase list")
                     ->delimiter(',');
    phi->excludes(list);
  }
  cmd->add_flag("--no-hii", o.no_hii, "drop the waveguide-mediated interaction");
  cmd->add_option("--extra-j", o.extra_j, "nearest-neighbour coupling J");
}

void make_params(const ModelOptions& o, Params& p) {
  std::vector<double> phases = o.phases;
  if (o.random) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    phases.resize(static_cast<std::size_t>(std::max(o.n, 0)));
    for (auto& v : phases) v = u(rng);
  }
  if (!phases.empty()) {
    if (static_cast<int>(phases.size()) != o.n)
      throw Failure{"invalid input: --phases has " + std::to_string(phases.size()) +
                    " entries for --n " + std::to_string(o.n)};
    check(wgspec_params_create(o.n, o.omega, o.gamma, phases.data(), p.out()));
  } else {
    check(wgspec_params_create_equidistant(o.n, o.omega, o.gamma, o.phi.value_or(0.0), p.out()));
  }
  check(wgspec_params_set_interaction(p.get(), o.no_hii ? 0 : 1));
  if (o.extra_j) check(wgspec_params_set_extra_coupling(p.get(), 1, *o.extra_j));
}

wgspec_mode parse_mode(const std::string& s) {
  return s == "projected" ? WGSPEC_MODE_PROJECTED : WGSPEC_MODE_FULL;
}

wgspec_format format_for(const std::string& fmt, const std::string& out) {
  std::string f = fmt;
  if (f.empty()) {
    const auto dot = out.rfind('.');
    f = dot == std::string::npos ? "csv" : out.substr(dot + 1);
  }
  if (f == "json") return WGSPEC_FORMAT_JSON;
  if (f == "svg") return WGSPEC_FORMAT_SVG;
  return WGSPEC_FORMAT_CSV;
}

// Config file: a JSON object whose keys are long flag names without the
// leading dashes. Values are appended as flags unless the flag already
// appears on the command line.
std::vector<std::string> merge_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw Failure{"cannot read config '" + path + "'"};
  nlohmann::json cfg;
  try {
    in >> cfg;
  } catch (const nlohmann::json::exception& e) {
    throw Failure{"config '" + path + "': " + e.what()};
  }
  if (!cfg.is_object()) throw Failure{"config '" + path + "' must be a JSON object"};

  std::set<std::string> present;
  for (const auto& a : args)
    if (a.rfind("--", 0) == 0) present.insert(a.substr(2, a.find('=') - 2));
  // --phi and --phases are alternatives; a command-line choice of either wins.
  const bool phase_given = present.count("phi") || present.count("phases");

  for (const auto& [raw, value] : cfg.items()) {
    std::string key = raw;
    for (auto& c : key)
      if (c == '_') c = '-';
    if (present.count(key)) continue;
    if (phase_given && (key == "phi" || key == "phases")) continue;
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& v : value) {
        if (!joined.empty()) joined += ',';
        joined += v.is_string() ? v.get<std::string>() : v.dump();
      }
      args.push_back(flag);
      args.push_back(joined);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      args.push_back(flag);
      args.push_back(value.dump());
    } else {
      throw Failure{"config key '" + raw + "' has an unsupported value"};
    }
  }
  return args;
}

int run_spectrum(const ModelOptions& o, const std::string& mode, const std::string& out,
                 const std::string& format, double tol, double max_residue) {
  Params p;
  make_params(o, p);
  Spectrum s;
  check(wgspec_spectrum_compute(p.get(), parse_mode(mode), s.out()));
  char* text = nullptr;
  check(wgspec_spectrum_render(s.get(), format_for(format, out), &text));
  emit(take(text), out);
  size_t violations = 0, unclassified = 0;
  check(wgspec_spectrum_verify_bound(s.get(), tol, max_residue, nullptr, &violations,
                                     &unclassified));
  std::fprintf(stderr, "%zu eigenvalues, %zu bound violations, %zu unclassified (tol %g)\n",
               wgspec_spectrum_size(s.get()), violations, unclassified, tol);
  return violations == 0 && unclassified == 0 ? kExitPass : kExitViolation;
}

struct ScanOptions {
  double phi_start = 0.0;
  double phi_end = 2.0 * M_PI;
  int steps = 25;
  unsigned workers = 1;
  double tol = 0.02;
};

int run_scan(const ModelOptions& o, const ScanOptions& so, const std::string& mode,
             const std::string& out) {
  ModelOptions tmpl = o;
  tmpl.no_hii = false;
  Params p;
  make_params(tmpl, p);
  wgspec_scan_spec spec{so.phi_start, so.phi_end,  so.steps,  parse_mode(mode),
                        o.no_hii ? 0 : 1, 1, so.workers};
  Scan s;
  check(wgspec_scan_run(p.get(), &spec, s.out()));
  char* csv = nullptr;
  check(wgspec_scan_csv(s.get(), &csv));
  emit(take(csv), out);
  const size_t failed = wgspec_scan_failed_cells(s.get());
  const size_t below = wgspec_scan_bound_violations(s.get(), so.tol);
  std::fprintf(stderr, "%zu failed cells, %zu cells below (m gamma / 2)(1 - %g)\n", failed,
               below, so.tol);
  return failed == 0 && below == 0 ? kExitPass : kExitViolation;
}

int run_decompose(const ModelOptions& o, int m, const std::string& dump, const std::string& out) {
  Params p;
  make_params(o, p);
  char* report = nullptr;
  char* matrices = nullptr;
  int passed = 0;
  check(wgspec_decompose(p.get(), m, &report, dump.empty() ? nullptr : &matrices, &passed));
  emit(take(report), out);
  if (!dump.empty()) emit(take(matrices), dump);
  return passed ? kExitPass : kExitViolation;
}

int run_tilde(const ModelOptions& o, int s, const std::string& out) {
  if (!o.random && o.phases.empty() && !o.phi)
    throw Failure{"invalid input: tilde needs --phases, --phi or --random"};
  Params p;
  make_params(o, p);
  char* report = nullptr;
  int passed = 0;
  check(wgspec_tilde(p.get(), s, &report, &passed));
  emit(take(report), out);
  return passed ? kExitPass : kExitViolation;
}

int run_verify(const std::string& input, double tol, double max_residue,
               const std::string& out) {
  Spectrum s;
  check(wgspec_spectrum_load(input.c_str(), s.out()));
  char* report = nullptr;
  size_t violations = 0, unclassified = 0;
  check(wgspec_spectrum_verify_bound(s.get(), tol, max_residue, &report, &violations,
                                     &unclassified));
  emit(take(report), out);
  return violations == 0 && unclassified == 0 ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liouvillian spectra of driven waveguide-coupled atom arrays"};
  app.set_version_flag("--version", wgspec_version());
  app.require_subcommand(1);
  app.add_option("--config", "JSON file with default flag values")->expected(1);

  ModelOptions model;
  std::string mode = "full", out, format;
  double tol = 0.02;
  double max_residue = 0.02;

  auto* spectrum = app.add_subcommand("spectrum", "compute and export a Liouvillian spectrum");
  add_model_options(spectrum, model);
  spectrum->add_option("--mode", mode)->check(CLI::IsMember({"full", "projected"}));
  spectrum->add_option("--out", out, "output file (stdout if omitted)");
  spectrum->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));
  spectrum->add_option("--tol", tol, "bound tolerance in units of gamma")->capture_default_str();
  spectrum->add_option("--max-residue", max_residue, "branch residue limit, at most 0.5")
      ->capture_default_str();

  ScanOptions scan_opts;
  auto* scan = app.add_subcommand("scan", "minimum decay rate per branch over the array period");
  add_model_options(scan, model, false);
  scan->add_option("--phi-start", scan_opts.phi_start)->capture_default_str();
  scan->add_option("--phi-end", scan_opts.phi_end)->capture_default_str();
  scan->add_option("--steps", scan_opts.steps)->capture_default_str();
  scan->add_option("--workers", scan_opts.workers)->capture_default_str();
  scan->add_option("--tol", scan_opts.tol, "relative bound tolerance")->capture_default_str();
  scan->add_option("--mode", mode)->check(CLI::IsMember({"full", "projected"}));
  scan->add_option("--out", out);

  int m = 0;
  std::string dump;
  auto* decompose = app.add_subcommand("decompose", "check the rank-m block decomposition");
  add_model_options(decompose, model);
  decompose->add_option("--m", m)->required();
  decompose->add_option("--dump-matrices", dump, "write Q, F, A, B, B^T B as JSON");
  decompose->add_option("--out", out);

  int s = 0;
  auto* tilde = app.add_subcommand("tilde", "weight-s quadratic form and kernel audit");
  add_model_options(tilde, model);
  tilde->add_option("--s", s)->required();
  auto* random = tilde->add_flag("--random", model.random, "draw phases uniformly in [0, 2 pi)");
  tilde->add_option("--seed", model.seed)->capture_default_str();
  random->excludes("--phases")->excludes("--phi");
  tilde->add_option("--out", out);

  std::string input;
  auto* verify = app.add_subcommand("verify-bound", "check a saved spectrum against the bound");
  verify->add_option("--input", input)->required();
  verify->add_option("--tol", tol)->capture_default_str();
  verify->add_option("--max-residue", max_residue, "branch residue limit, at most 0.5")
      ->capture_default_str();
  verify->add_option("--out", out);

  try {
    auto args = merge_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitPass;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(model, mode, out, format, tol, max_residue);
    if (scan->parsed()) return run_scan(model, scan_opts, mode, out);
    if (decompose->parsed()) return run_decompose(model, m, dump, out);
    if (tilde->parsed()) return run_tilde(model, s, out);
    if (verify->parsed()) return run_verify(input, tol, max_residue, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
