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

// Serialization of spectra, reports and scans.
//
// Numbers in CSV use 17 significant digits ("%.17g"); JSON objects are
// emitted with sorted keys, so identical inputs give identical bytes.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "wgspec/analysis.hpp"
#include "wgspec/effective_hamiltonian.hpp"
#include "wgspec/poset.hpp"
#include "wgspec/reduction.hpp"
#include "wgspec/superoperator.hpp"

namespace wgspec {

using Json = nlohmann::json;

enum class ExportFormat { csv, json, svg };
ExportFormat parse_format(std::string_view s);

std::string format_number(double v);

void write_text(const std::filesystem::path& path, std::string_view content);
std::string read_text(const std::filesystem::path& path);

Json to_json(const ParamsEcho& p);
ParamsEcho params_echo_from_json(const Json& j);

// Spectrum CSV header: n_atoms,omega,gamma,phi,m,re,im
std::string spectrum_csv(const std::vector<SpectrumPoint>& points, const ParamsEcho& params);
Json spectrum_json(const std::vector<SpectrumPoint>& points, const ParamsEcho& params);
/// Scatter of Re (x) against Im (y) with one dashed bound guide per branch
/// m = -N..N at Re = -|m| gamma / 2.
std::string spectrum_svg(const std::vector<SpectrumPoint>& points, const ParamsEcho& params);

std::string export_spectrum(const std::vector<SpectrumPoint>& points, const ParamsEcho& params,
                            ExportFormat format);

struct LoadedSpectrum {
  ParamsEcho params;
  std::vector<SpectrumPoint> points;
};

/// Reads a spectrum written as CSV or JSON (detected from the content).
/// Branch labels are recomputed from Im(lambda) / (2 Omega) for full-mode
/// points so residues are available again.
LoadedSpectrum parse_spectrum(std::string_view content);
LoadedSpectrum load_spectrum(const std::filesystem::path& path);

Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

// Scan CSV header: n_atoms,omega,gamma,phi,m,hii,extra_j,mode,min_abs_re
std::string scan_csv(const ScanResult& scan);

Json to_json(const DecompositionReport& r);
Json to_json(const BendixsonReport& r);
Json to_json(const TildeReport& r);
Json to_json(const KernelAudit& r);

/// Q, F, A, B and B^T B of a block, indexed by the listed class order.
Json block_matrices_json(const ReducedBlock& block);

}  // namespace wgspec
