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

#include "wgspec/wgspec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "wgspec/analysis.hpp"
#include "wgspec/effective_hamiltonian.hpp"
#include "wgspec/error.hpp"
#include "wgspec/io.hpp"
#include "wgspec/poset.hpp"
#include "wgspec/reduction.hpp"

struct wgspec_params {
  wgspec::ModelParams value;
};

struct wgspec_spectrum {
  wgspec::ParamsEcho params;
  std::vector<wgspec::SpectrumPoint> points;
};

struct wgspec_scan {
  wgspec::ScanResult value;
};

namespace {

thread_local std::string last_error;

wgspec_status to_status(wgspec::ErrorCode c) {
  switch (c) {
    case wgspec::ErrorCode::invalid_input: return WGSPEC_ERR_INVALID_INPUT;
    case wgspec::ErrorCode::capacity: return WGSPEC_ERR_CAPACITY;
    case wgspec::ErrorCode::numeric: return WGSPEC_ERR_NUMERIC;
    case wgspec::ErrorCode::io: return WGSPEC_ERR_IO;
    case wgspec::ErrorCode::convention: return WGSPEC_ERR_CONVENTION;
  }
  return WGSPEC_ERR_INTERNAL;
}

wgspec_status failure(wgspec_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <class F>
wgspec_status guarded(F&& f) {
  try {
    f();
    return WGSPEC_OK;
  } catch (const wgspec::Error& e) {
    return failure(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return failure(WGSPEC_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return failure(WGSPEC_ERR_INTERNAL, e.what());
  } catch (...) {
    return failure(WGSPEC_ERR_INTERNAL, "unknown error");
  }
}

void require(bool cond, const char* what) {
  if (!cond) wgspec::fail(wgspec::ErrorCode::invalid_input, what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

wgspec::SpectrumMode mode_of(wgspec_mode m) {
  switch (m) {
    case WGSPEC_MODE_FULL: return wgspec::SpectrumMode::full;
    case WGSPEC_MODE_PROJECTED: return wgspec::SpectrumMode::projected;
  }
  wgspec::fail(wgspec::ErrorCode::invalid_input, "unknown mode");
}

wgspec::ExportFormat format_of(wgspec_format f) {
  switch (f) {
    case WGSPEC_FORMAT_CSV: return wgspec::ExportFormat::csv;
    case WGSPEC_FORMAT_JSON: return wgspec::ExportFormat::json;
    case WGSPEC_FORMAT_SVG: return wgspec::ExportFormat::svg;
  }
  wgspec::fail(wgspec::ErrorCode::invalid_input, "unknown format");
}

}  // namespace

extern "C" {

const char* wgspec_version(void) { return "0.1.0"; }

const char* wgspec_status_string(wgspec_status status) {
  switch (status) {
    case WGSPEC_OK: return "ok";
    case WGSPEC_ERR_INVALID_INPUT: return "invalid input";
    case WGSPEC_ERR_CAPACITY: return "capacity exceeded";
    case WGSPEC_ERR_NUMERIC: return "numerical failure";
    case WGSPEC_ERR_IO: return "i/o error";
    case WGSPEC_ERR_CONVENTION: return "convention mismatch";
    case WGSPEC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* wgspec_last_error(void) { return last_error.c_str(); }

void wgspec_string_free(char* s) { std::free(s); }

wgspec_status wgspec_params_create(int n_atoms, double omega, double gamma, const double* phases,
                                   wgspec_params** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(phases != nullptr || n_atoms <= 0, "null phase array");
    std::vector<double> ph(phases, phases + std::max(n_atoms, 0));
    *out = new wgspec_params{wgspec::ModelParams(n_atoms, omega, gamma, std::move(ph))};
  });
}

wgspec_status wgspec_params_create_equidistant(int n_atoms, double omega, double gamma,
                                               double period, wgspec_params** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = new wgspec_params{wgspec::ModelParams::equidistant(n_atoms, omega, gamma, period)};
  });
}

wgspec_status wgspec_params_set_interaction(wgspec_params* p, int enabled) {
  return guarded([&] {
    require(p != nullptr, "null params handle");
    p->value = p->value.with_interaction(enabled != 0);
  });
}

wgspec_status wgspec_params_set_extra_coupling(wgspec_params* p, int enabled, double j) {
  return guarded([&] {
    require(p != nullptr, "null params handle");
    p->value = p->value.with_extra_coupling(enabled ? std::optional<double>(j) : std::nullopt);
  });
}

int wgspec_params_atoms(const wgspec_params* p) { return p ? p->value.n_atoms() : 0; }

void wgspec_params_destroy(wgspec_params* p) { delete p; }

wgspec_status wgspec_spectrum_compute(const wgspec_params* p, wgspec_mode mode,
                                      wgspec_spectrum** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null handle");
    auto points = wgspec::compute_spectrum(p->value, mode_of(mode));
    *out = new wgspec_spectrum{wgspec::ParamsEcho::of(p->value), std::move(points)};
  });
}

wgspec_status wgspec_spectrum_load(const char* path, wgspec_spectrum** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    auto loaded = wgspec::load_spectrum(path);
    *out = new wgspec_spectrum{std::move(loaded.params), std::move(loaded.points)};
  });
}

size_t wgspec_spectrum_size(const wgspec_spectrum* s) { return s ? s->points.size() : 0; }

wgspec_status wgspec_spectrum_point(const wgspec_spectrum* s, size_t index, double* re,
                                    double* im, int* branch, double* residue) {
  return guarded([&] {
    require(s != nullptr, "null spectrum handle");
    if (index >= s->points.size())
      wgspec::fail(wgspec::ErrorCode::invalid_input, "point index out of range");
    const auto& pt = s->points[index];
    if (re) *re = pt.value.real();
    if (im) *im = pt.value.imag();
    if (branch) *branch = pt.branch;
    if (residue) *residue = pt.residue;
  });
}

wgspec_status wgspec_spectrum_render(const wgspec_spectrum* s, wgspec_format format, char** out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = duplicate(wgspec::export_spectrum(s->points, s->params, format_of(format)));
  });
}

wgspec_status wgspec_spectrum_export(const wgspec_spectrum* s, wgspec_format format,
                                     const char* path) {
  return guarded([&] {
    require(s != nullptr && path != nullptr, "null argument");
    wgspec::write_text(path, wgspec::export_spectrum(s->points, s->params, format_of(format)));
  });
}

wgspec_status wgspec_spectrum_verify_bound(const wgspec_spectrum* s, double tol,
                                           double max_residue, char** report,
                                           size_t* violations, size_t* unclassified) {
  return guarded([&] {
    require(s != nullptr, "null spectrum handle");
    const auto r = wgspec::verify_bound(s->points, s->params, tol, max_residue);
    if (report) *report = duplicate(wgspec::to_json(r).dump(2) + "\n");
    if (violations) *violations = r.violations;
    if (unclassified) *unclassified = r.unclassified.size();
  });
}

void wgspec_spectrum_destroy(wgspec_spectrum* s) { delete s; }

wgspec_status wgspec_scan_run(const wgspec_params* tmpl, const wgspec_scan_spec* spec,
                              wgspec_scan** out) {
  return guarded([&] {
    require(tmpl != nullptr && spec != nullptr && out != nullptr, "null argument");
    wgspec::ScanSpec s;
    s.phi_start = spec->phi_start;
    s.phi_end = spec->phi_end;
    s.steps = spec->steps;
    s.mode = mode_of(spec->mode);
    s.with_interaction = spec->with_interaction != 0;
    s.without_interaction = spec->without_interaction != 0;
    s.workers = spec->workers == 0 ? 1 : spec->workers;
    *out = new wgspec_scan{wgspec::phase_scan(tmpl->value, s)};
  });
}

wgspec_status wgspec_scan_csv(const wgspec_scan* s, char** out) {
  return guarded([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = duplicate(wgspec::scan_csv(s->value));
  });
}

size_t wgspec_scan_failed_cells(const wgspec_scan* s) {
  if (!s) return 0;
  size_t n = 0;
  for (const auto& c : s->value.cells) n += c.error.empty() ? 0 : 1;
  return n;
}

size_t wgspec_scan_bound_violations(const wgspec_scan* s, double rel_tol) {
  if (!s) return 0;
  size_t n = 0;
  const double gamma = s->value.params.gamma;
  for (const auto& c : s->value.cells)
    if (c.error.empty() && c.m >= 1 && c.min_abs_re < 0.5 * c.m * gamma * (1.0 - rel_tol)) ++n;
  return n;
}

void wgspec_scan_destroy(wgspec_scan* s) { delete s; }

wgspec_status wgspec_decompose(const wgspec_params* p, int m, char** report, char** matrices,
                               int* passed) {
  return guarded([&] {
    require(p != nullptr, "null params handle");
    const int n = p->value.n_atoms();
    if (m < 0 || m > n) wgspec::fail(wgspec::ErrorCode::invalid_input, "m must be in [0, N]");
    const auto block = wgspec::build_reduced_block(wgspec::enumerate_rank_class(n, m), p->value);
    const auto dec = wgspec::verify_decomposition(block);
    const auto bend = wgspec::bendixson_report(block, p->value);
    wgspec::Json j;
    j["params"] = wgspec::to_json(wgspec::ParamsEcho::of(p->value));
    j["decomposition"] = wgspec::to_json(dec);
    j["bendixson"] = wgspec::to_json(bend);
    j["passed"] = dec.passed() && bend.holds;
    if (report) *report = duplicate(j.dump(2) + "\n");
    if (matrices) *matrices = duplicate(wgspec::block_matrices_json(block).dump(2) + "\n");
    if (passed) *passed = dec.passed() && bend.holds ? 1 : 0;
  });
}

wgspec_status wgspec_tilde(const wgspec_params* p, int s, char** report, int* passed) {
  return guarded([&] {
    require(p != nullptr, "null params handle");
    const auto dec = wgspec::tilde_decomposition(wgspec::build_tilde_block(p->value, s));
    const auto audit = wgspec::kernel_audit(p->value, s);
    wgspec::Json j;
    j["params"] = wgspec::to_json(wgspec::ParamsEcho::of(p->value));
    j["decomposition"] = wgspec::to_json(dec);
    j["kernel_audit"] = wgspec::to_json(audit);
    const bool ok = dec.passed() && audit.consistent;
    j["passed"] = ok;
    if (report) *report = duplicate(j.dump(2) + "\n");
    if (passed) *passed = ok ? 1 : 0;
  });
}

}  // extern "C"
