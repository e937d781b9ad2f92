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

#pragma once

// Spectral-bound verification, phase scans and Bendixson checks.
//
// Bound: every eigenvalue on branch m obeys Re(lambda) <= -|m| gamma / 2.
// A finite drive shifts eigenvalues by O(N gamma^2 / Omega), so full-mode
// checks use a tolerance (default 0.02 gamma at Omega = 100 gamma).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wgspec/model.hpp"
#include "wgspec/reduction.hpp"
#include "wgspec/superoperator.hpp"

namespace wgspec {

inline constexpr double kDefaultBoundTolerance = 0.02;
// |lambda| below this (in units of gamma) counts as a stationary state.
inline constexpr double kStationaryThreshold = 1e-8;

struct BranchBound {
  int m = 0;
  std::size_t count = 0;
  double min_abs_re = 0.0;  // over non-stationary points of the branch
  double bound = 0.0;       // |m| gamma / 2
  double margin = 0.0;      // min_abs_re - bound
  double max_re = 0.0;
  bool violation = false;
  bool subradiant = false;  // m = 0 and min_abs_re < gamma: allowed

  friend bool operator==(const BranchBound&, const BranchBound&) = default;
};

struct ParamsEcho {
  int n_atoms = 0;
  double omega = 0.0;
  double gamma = 1.0;
  std::vector<double> phases;
  std::optional<double> period;
  bool include_interaction = true;
  std::optional<double> extra_j;

  static ParamsEcho of(const ModelParams& p);
  ModelParams to_params() const;
  friend bool operator==(const ParamsEcho&, const ParamsEcho&) = default;
};

struct UnclassifiedPoint {
  double re = 0.0;
  double im = 0.0;
  double residue = 0.0;
  friend bool operator==(const UnclassifiedPoint&, const UnclassifiedPoint&) = default;
};

struct BoundReport {
  ParamsEcho params;
  double tolerance = kDefaultBoundTolerance;
  std::vector<BranchBound> rows;  // ascending m
  std::vector<UnclassifiedPoint> unclassified;
  double worst_margin = 0.0;  // over branches m != 0
  std::size_t violations = 0;

  bool passed() const noexcept { return violations == 0 && unclassified.empty(); }
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Points whose branch residue exceeds residue_limit are listed as
/// unclassified. Limits up to 0.5 assign every point to its nearest branch,
/// which is needed when a Hermitian coupling splits the branches.
BoundReport verify_bound(const std::vector<SpectrumPoint>& points, const ModelParams& params,
                         double tol = kDefaultBoundTolerance,
                         double residue_limit = kBranchResidueLimit);
/// Same check when only the parameter echo is known (re-imported spectra).
BoundReport verify_bound(const std::vector<SpectrumPoint>& points, const ParamsEcho& params,
                         double tol = kDefaultBoundTolerance,
                         double residue_limit = kBranchResidueLimit);

enum class SpectrumMode { full, projected };
std::string_view to_string(SpectrumMode m);
SpectrumMode parse_mode(std::string_view s);

/// Full or projected spectrum of one configuration.
std::vector<SpectrumPoint> compute_spectrum(const ModelParams& params, SpectrumMode mode);

/// Minimum |Re lambda| per branch |m| = 0..N (stationary states excluded on
/// m = 0). Conjugate branches +-m are merged.
std::vector<double> branch_minima(const std::vector<SpectrumPoint>& points, int n_atoms,
                                  double gamma);

struct ScanSpec {
  double phi_start = 0.0;
  double phi_end = 0.0;
  int steps = 25;
  SpectrumMode mode = SpectrumMode::full;
  bool with_interaction = true;
  bool without_interaction = true;
  unsigned workers = 1;
};

struct ScanCell {
  double phi = 0.0;
  int m = 0;
  bool interaction = true;
  double min_abs_re = 0.0;
  std::string error;  // non-empty when this grid point failed
};

struct ScanResult {
  ParamsEcho params;
  SpectrumMode mode = SpectrumMode::full;
  std::vector<double> grid;
  // Ordered by (grid index, interaction on before off, m ascending).
  std::vector<ScanCell> cells;

  const ScanCell* find(std::size_t grid_index, int m, bool interaction) const;
};

std::vector<double> phase_grid(double start, double end, int steps);

/// Equidistant-array scan over the grid; the template supplies N, Omega,
/// gamma and the extra coupling. Cells are independent and may run on
/// `workers` threads; output does not depend on the worker count.
ScanResult phase_scan(const ModelParams& tmpl, const ScanSpec& spec);

struct BendixsonReport {
  int rank = 0;
  double max_re_eigenvalue = 0.0;
  double max_hermitian_eigenvalue = 0.0;
  double gap = 0.0;  // max_hermitian - max_re, >= 0 when the inequality holds
  bool holds = false;
};

BendixsonReport bendixson_report(const ReducedBlock& block, const ModelParams& params);

}  // namespace wgspec
