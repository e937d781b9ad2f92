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

#include "wgspec/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "wgspec/error.hpp"

namespace wgspec {

ParamsEcho ParamsEcho::of(const ModelParams& p) {
  return {p.n_atoms(),
          p.rabi(),
          p.gamma(),
          {p.phases().begin(), p.phases().end()},
          p.period(),
          p.include_interaction(),
          p.extra_coupling()};
}

ModelParams ParamsEcho::to_params() const {
  ModelParams p = period ? ModelParams::equidistant(n_atoms, omega, gamma, *period)
                         : ModelParams(n_atoms, omega, gamma, phases);
  return p.with_interaction(include_interaction).with_extra_coupling(extra_j);
}

BoundReport verify_bound(const std::vector<SpectrumPoint>& points, const ModelParams& params,
                         double tol, double residue_limit) {
  return verify_bound(points, ParamsEcho::of(params), tol, residue_limit);
}

BoundReport verify_bound(const std::vector<SpectrumPoint>& points, const ParamsEcho& params,
                         double tol, double residue_limit) {
  if (!(tol >= 0.0)) fail(ErrorCode::invalid_input, "tolerance must be >= 0");
  if (!(residue_limit >= 0.0 && residue_limit <= 0.5))
    fail(ErrorCode::invalid_input, "residue limit must be in [0, 0.5]");
  if (!(params.gamma > 0.0)) fail(ErrorCode::invalid_input, "gamma must be > 0");
  BoundReport report;
  report.params = params;
  report.tolerance = tol;
  const double gamma = params.gamma;

  std::map<int, BranchBound> rows;
  for (const auto& p : points) {
    if (p.residue > residue_limit) {
      report.unclassified.push_back({p.value.real(), p.value.imag(), p.residue});
      continue;
    }
    auto [it, inserted] = rows.try_emplace(p.branch);
    BranchBound& row = it->second;
    if (inserted) {
      row.m = p.branch;
      row.bound = 0.5 * std::abs(p.branch) * gamma;
      row.min_abs_re = std::numeric_limits<double>::infinity();
      row.max_re = -std::numeric_limits<double>::infinity();
    }
    ++row.count;
    row.max_re = std::max(row.max_re, p.value.real());
    const bool stationary = p.branch == 0 && std::abs(p.value) <= kStationaryThreshold * gamma;
    if (!stationary) row.min_abs_re = std::min(row.min_abs_re, std::abs(p.value.real()));
    if (p.value.real() > -row.bound + tol) ++report.violations;
  }

  report.worst_margin = std::numeric_limits<double>::infinity();
  for (auto& [m, row] : rows) {
    if (!std::isfinite(row.min_abs_re)) row.min_abs_re = 0.0;
    row.margin = row.min_abs_re - row.bound;
    row.violation = row.max_re > -row.bound + tol;
    row.subradiant = m == 0 && row.min_abs_re < gamma;
    if (m != 0) report.worst_margin = std::min(report.worst_margin, row.margin);
    report.rows.push_back(row);
  }
  if (!std::isfinite(report.worst_margin)) report.worst_margin = 0.0;
  return report;
}

std::string_view to_string(SpectrumMode m) {
  return m == SpectrumMode::full ? "full" : "projected";
}

SpectrumMode parse_mode(std::string_view s) {
  if (s == "full") return SpectrumMode::full;
  if (s == "projected") return SpectrumMode::projected;
  fail(ErrorCode::invalid_input, "unknown mode '" + std::string(s) + "'");
}

std::vector<SpectrumPoint> compute_spectrum(const ModelParams& params, SpectrumMode mode) {
  if (mode == SpectrumMode::projected) return projected_spectrum(params);
  if (params.n_atoms() > kMaxLiouvillianAtoms)
    fail(ErrorCode::capacity,
         "full mode limited to n_atoms <= " + std::to_string(kMaxLiouvillianAtoms) +
             "; use projected mode");
  const OperatorSet ops = build_operators(params);
  return full_spectrum(build_liouvillian(ops, params));
}

std::vector<double> branch_minima(const std::vector<SpectrumPoint>& points, int n_atoms,
                                  double gamma) {
  std::vector<double> minima(static_cast<std::size_t>(n_atoms) + 1,
                             std::numeric_limits<double>::infinity());
  for (const auto& p : points) {
    const int m = std::abs(p.branch);
    if (m > n_atoms) continue;
    if (m == 0 && std::abs(p.value) <= kStationaryThreshold * gamma) continue;
    minima[m] = std::min(minima[m], std::abs(p.value.real()));
  }
  for (auto& v : minima)
    if (!std::isfinite(v)) v = std::numeric_limits<double>::quiet_NaN();
  return minima;
}

const ScanCell* ScanResult::find(std::size_t grid_index, int m, bool interaction) const {
  if (grid_index >= grid.size()) return nullptr;
  const double phi = grid[grid_index];
  for (const auto& c : cells)
    if (c.phi == phi && c.m == m && c.interaction == interaction) return &c;
  return nullptr;
}

std::vector<double> phase_grid(double start, double end, int steps) {
  if (steps < 1) fail(ErrorCode::invalid_input, "steps must be >= 1");
  if (!std::isfinite(start) || !std::isfinite(end))
    fail(ErrorCode::invalid_input, "grid bounds must be finite");
  if (steps == 1) return {start};
  if (!(end > start)) fail(ErrorCode::invalid_input, "phi-end must exceed phi-start");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double h = (end - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[i] = i + 1 == steps ? end : start + i * h;
  return grid;
}

namespace {

class BlasThreadGuard {
 public:
  BlasThreadGuard() : saved_(blas_threads()) { set_blas_threads(1); }
  ~BlasThreadGuard() { set_blas_threads(saved_); }
  BlasThreadGuard(const BlasThreadGuard&) = delete;
  BlasThreadGuard& operator=(const BlasThreadGuard&) = delete;

 private:
  int saved_;
};

}  // namespace

ScanResult phase_scan(const ModelParams& tmpl, const ScanSpec& spec) {
  const int n = tmpl.n_atoms();
  if (spec.mode == SpectrumMode::full && n > kMaxLiouvillianAtoms)
    fail(ErrorCode::capacity, "full-mode scan limited to n_atoms <= 6");
  if (spec.mode == SpectrumMode::projected && n > kMaxReductionAtoms)
    fail(ErrorCode::capacity, "projected-mode scan limited to n_atoms <= 8");
  if (!spec.with_interaction && !spec.without_interaction)
    fail(ErrorCode::invalid_input, "scan needs at least one interaction variant");

  ScanResult result;
  result.params = ParamsEcho::of(tmpl);
  result.params.period.reset();
  result.mode = spec.mode;
  result.grid = phase_grid(spec.phi_start, spec.phi_end, spec.steps);

  std::vector<bool> variants;
  if (spec.with_interaction) variants.push_back(true);
  if (spec.without_interaction) variants.push_back(false);

  const std::size_t tasks = result.grid.size() * variants.size();
  const std::size_t per_task = static_cast<std::size_t>(n) + 1;
  result.cells.resize(tasks * per_task);

  auto run = [&](std::size_t t) {
    const double phi = result.grid[t / variants.size()];
    const bool interaction = variants[t % variants.size()];
    ScanCell* out = &result.cells[t * per_task];
    for (int m = 0; m <= n; ++m) out[m] = {phi, m, interaction, 0.0, {}};
    try {
      const ModelParams p = ModelParams::equidistant(n, tmpl.rabi(), tmpl.gamma(), phi)
                                .with_interaction(interaction)
                                .with_extra_coupling(tmpl.extra_coupling());
      const auto minima = branch_minima(compute_spectrum(p, spec.mode), n, p.gamma());
      for (int m = 0; m <= n; ++m) {
        out[m].min_abs_re = minima[m];
        if (std::isnan(minima[m])) out[m].error = "branch has no eigenvalues";
      }
    } catch (const std::exception& e) {
      for (int m = 0; m <= n; ++m) {
        out[m].min_abs_re = std::numeric_limits<double>::quiet_NaN();
        out[m].error = e.what();
      }
    }
  };

  BlasThreadGuard guard;
  const unsigned workers =
      std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(tasks)));
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks; ++t) run(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks; t = next++) run(t);
      });
    for (auto& th : pool) th.join();
  }
  return result;
}

BendixsonReport bendixson_report(const ReducedBlock& block, const ModelParams& params) {
  BendixsonReport r;
  r.rank = block.rank();
  const CMatrix g = block.generator(params);
  const auto values = general_eigenvalues(g);
  r.max_re_eigenvalue = -std::numeric_limits<double>::infinity();
  for (const auto& v : values) r.max_re_eigenvalue = std::max(r.max_re_eigenvalue, v.real());
  const CMatrix herm = 0.5 * (g + CMatrix(g.adjoint()));
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) fail(ErrorCode::numeric, "hermitian eigensolver failed");
  r.max_hermitian_eigenvalue = es.eigenvalues().maxCoeff();
  r.gap = r.max_hermitian_eigenvalue - r.max_re_eigenvalue;
  r.holds = r.max_re_eigenvalue <= r.max_hermitian_eigenvalue + 1e-10;
  return r;
}

}  // namespace wgspec
