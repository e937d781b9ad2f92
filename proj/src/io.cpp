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

#include "wgspec/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "wgspec/error.hpp"

namespace wgspec {

ExportFormat parse_format(std::string_view s) {
  if (s == "csv") return ExportFormat::csv;
  if (s == "json") return ExportFormat::json;
  if (s == "svg") return ExportFormat::svg;
  fail(ErrorCode::invalid_input, "unknown format '" + std::string(s) + "'");
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> number_or_null(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

double json_double(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    fail(ErrorCode::invalid_input, "not a number: '" + s + "'");
  return v;
}

Json matrix_json(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void write_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io, "cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) fail(ErrorCode::io, "write to '" + path.string() + "' failed");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json to_json(const ParamsEcho& p) {
  return Json{{"n_atoms", p.n_atoms},
              {"omega", p.omega},
              {"gamma", p.gamma},
              {"phases", p.phases},
              {"period", optional_number(p.period)},
              {"include_interaction", p.include_interaction},
              {"extra_j", optional_number(p.extra_j)}};
}

ParamsEcho params_echo_from_json(const Json& j) {
  ParamsEcho p;
  p.n_atoms = j.at("n_atoms").get<int>();
  p.omega = j.at("omega").get<double>();
  p.gamma = j.at("gamma").get<double>();
  p.phases = j.at("phases").get<std::vector<double>>();
  p.period = number_or_null(j, "period");
  p.include_interaction = j.value("include_interaction", true);
  p.extra_j = number_or_null(j, "extra_j");
  return p;
}

std::string spectrum_csv(const std::vector<SpectrumPoint>& points, const ParamsEcho& params) {
  std::string out = "n_atoms,omega,gamma,phi,m,re,im\n";
  const std::string prefix = std::to_string(params.n_atoms) + "," + format_number(params.omega) +
                             "," + format_number(params.gamma) + "," +
                             format_number(params.period.value_or(
                                 std::numeric_limits<double>::quiet_NaN())) +
                             ",";
  for (const auto& p : points) {
    out += prefix;
    out += std::to_string(p.branch) + "," + format_number(p.value.real()) + "," +
           format_number(p.value.imag()) + "\n";
  }
  return out;
}

Json spectrum_json(const std::vector<SpectrumPoint>& points, const ParamsEcho& params) {
  Json pts = Json::array();
  for (const auto& p : points)
    pts.push_back({{"m", p.branch},
                   {"re", p.value.real()},
                   {"im", p.value.imag()},
                   {"residue", p.residue},
                   {"source", std::string(to_string(p.source))}});
  return Json{{"params", to_json(params)}, {"points", std::move(pts)}};
}

std::string spectrum_svg(const std::vector<SpectrumPoint>& points, const ParamsEcho& params) {
  const double width = 800.0, height = 600.0, pad = 50.0;
  const double omega = params.omega > 0.0 ? params.omega : 1.0;
  const int n = params.n_atoms;

  double re_min = -0.5 * n * params.gamma;
  double im_abs = (2.0 * n + 1.0) * omega;
  for (const auto& p : points) {
    re_min = std::min(re_min, p.value.real());
    im_abs = std::max(im_abs, std::abs(p.value.imag()));
  }
  re_min -= 0.05 * std::abs(re_min) + 0.1 * params.gamma;
  const double re_max = 0.1 * std::abs(re_min) + 0.1 * params.gamma;
  const auto sx = [&](double re) {
    return pad + (re - re_min) / (re_max - re_min) * (width - 2 * pad);
  };
  const auto sy = [&](double im) {
    return height - pad - (im + im_abs) / (2 * im_abs) * (height - 2 * pad);
  };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
       "viewBox=\"0 0 800 600\">\n";
  s += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  s += "<line class=\"axis\" x1=\"" + short_number(sx(0.0)) + "\" y1=\"" + short_number(pad) +
       "\" x2=\"" + short_number(sx(0.0)) + "\" y2=\"" + short_number(height - pad) +
       "\" stroke=\"black\"/>\n";
  s += "<line class=\"axis\" x1=\"" + short_number(pad) + "\" y1=\"" + short_number(sy(0.0)) +
       "\" x2=\"" + short_number(width - pad) + "\" y2=\"" + short_number(sy(0.0)) +
       "\" stroke=\"black\"/>\n";
  s += "<text x=\"" + short_number(width / 2) + "\" y=\"" + short_number(height - 10) +
       "\" text-anchor=\"middle\">Re &#955;</text>\n";
  s += "<text x=\"15\" y=\"" + short_number(height / 2) + "\">Im &#955;</text>\n";
  for (int m = -n; m <= n; ++m) {
    const double x = sx(-0.5 * std::abs(m) * params.gamma);
    const double yc = 2.0 * m * omega;
    s += "<line class=\"bound\" x1=\"" + short_number(x) + "\" y1=\"" +
         short_number(sy(yc + 0.8 * omega)) + "\" x2=\"" + short_number(x) + "\" y2=\"" +
         short_number(sy(yc - 0.8 * omega)) +
         "\" stroke=\"red\" stroke-dasharray=\"6,4\"/>\n";
  }
  for (const auto& p : points)
    s += "<circle cx=\"" + short_number(sx(p.value.real())) + "\" cy=\"" +
         short_number(sy(p.value.imag())) + "\" r=\"1.5\" fill=\"navy\"/>\n";
  s += "</svg>\n";
  return s;
}

std::string export_spectrum(const std::vector<SpectrumPoint>& points, const ParamsEcho& params,
                            ExportFormat format) {
  switch (format) {
    case ExportFormat::csv: return spectrum_csv(points, params);
    case ExportFormat::json: return spectrum_json(points, params).dump(2) + "\n";
    case ExportFormat::svg: return spectrum_svg(points, params);
  }
  return {};
}

LoadedSpectrum parse_spectrum(std::string_view content) {
  LoadedSpectrum out;
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) fail(ErrorCode::invalid_input, "empty spectrum input");

  if (content[first] == '{') {
    Json j;
    try {
      j = Json::parse(content);
      out.params = params_echo_from_json(j.at("params"));
      for (const auto& p : j.at("points")) {
        const Complex v{json_double(p.at("re")), json_double(p.at("im"))};
        const auto source = p.value("source", std::string("full")) == "projected"
                                ? SpectrumSource::projected
                                : SpectrumSource::full;
        SpectrumPoint pt = classify(v, out.params.omega, source);
        if (source == SpectrumSource::projected) {
          pt.branch = p.at("m").get<int>();
          pt.residue = 0.0;
        }
        out.points.push_back(pt);
      }
    } catch (const Json::exception& e) {
      fail(ErrorCode::invalid_input, std::string("malformed spectrum JSON: ") + e.what());
    }
    return out;
  }

  std::istringstream in{std::string(content)};
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n_atoms,omega,gamma,phi,m,re,im")
    fail(ErrorCode::invalid_input, "unexpected spectrum CSV header '" + line + "'");
  bool have_params = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) fail(ErrorCode::invalid_input, "bad spectrum CSV row '" + line + "'");
    if (!have_params) {
      out.params.n_atoms = std::stoi(f[0]);
      out.params.omega = parse_double(f[1]);
      out.params.gamma = parse_double(f[2]);
      const double phi = parse_double(f[3]);
      if (!std::isnan(phi)) {
        out.params.period = phi;
        for (int j = 0; j < out.params.n_atoms; ++j) out.params.phases.push_back(j * phi);
      }
      have_params = true;
    }
    const Complex v{parse_double(f[5]), parse_double(f[6])};
    out.points.push_back(classify(v, out.params.omega, SpectrumSource::full));
  }
  if (!have_params) fail(ErrorCode::invalid_input, "spectrum CSV has no rows");
  return out;
}

LoadedSpectrum load_spectrum(const std::filesystem::path& path) {
  try {
    return parse_spectrum(read_text(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::io) throw;
    fail(e.code(), path.string() + ": " + e.what());
  }
}

Json to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const auto& b : r.rows)
    rows.push_back({{"m", b.m},
                    {"count", b.count},
                    {"min_abs_re", b.min_abs_re},
                    {"bound", b.bound},
                    {"margin", b.margin},
                    {"max_re", b.max_re},
                    {"violation", b.violation},
                    {"subradiant", b.subradiant}});
  Json unclassified = Json::array();
  for (const auto& u : r.unclassified)
    unclassified.push_back({{"re", u.re}, {"im", u.im}, {"residue", u.residue}});
  return Json{{"params", to_json(r.params)},
              {"tolerance", r.tolerance},
              {"rows", std::move(rows)},
              {"unclassified", std::move(unclassified)},
              {"worst_margin", r.worst_margin},
              {"violations", r.violations},
              {"passed", r.passed()}};
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  try {
    r.params = params_echo_from_json(j.at("params"));
    r.tolerance = j.at("tolerance").get<double>();
    for (const auto& b : j.at("rows"))
      r.rows.push_back({b.at("m").get<int>(), b.at("count").get<std::size_t>(),
                        b.at("min_abs_re").get<double>(), b.at("bound").get<double>(),
                        b.at("margin").get<double>(), b.at("max_re").get<double>(),
                        b.at("violation").get<bool>(), b.at("subradiant").get<bool>()});
    for (const auto& u : j.at("unclassified"))
      r.unclassified.push_back(
          {u.at("re").get<double>(), u.at("im").get<double>(), u.at("residue").get<double>()});
    r.worst_margin = j.at("worst_margin").get<double>();
    r.violations = j.at("violations").get<std::size_t>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::invalid_input, std::string("malformed bound report: ") + e.what());
  }
  return r;
}

std::string scan_csv(const ScanResult& scan) {
  std::string out = "n_atoms,omega,gamma,phi,m,hii,extra_j,mode,min_abs_re\n";
  const std::string prefix = std::to_string(scan.params.n_atoms) + "," +
                             format_number(scan.params.omega) + "," +
                             format_number(scan.params.gamma) + ",";
  const std::string extra = scan.params.extra_j ? format_number(*scan.params.extra_j) : "0";
  const std::string mode(to_string(scan.mode));
  for (const auto& c : scan.cells)
    out += prefix + format_number(c.phi) + "," + std::to_string(c.m) + "," +
           (c.interaction ? "1" : "0") + "," + extra + "," + mode + "," +
           format_number(c.min_abs_re) + "\n";
  return out;
}

Json to_json(const DecompositionReport& r) {
  return Json{{"n_atoms", r.n_atoms},
              {"m", r.rank},
              {"class_size", r.class_size},
              {"max_abs_a_minus_btb", r.max_a_minus_gram},
              {"max_abs_q_plus_f_plus_btb", r.max_q_plus_f_plus_gram},
              {"min_eig_btb", r.min_gram_eigenvalue},
              {"max_eig_q", r.max_q_eigenvalue},
              {"bound_minus_m_over_2", -0.5 * r.rank},
              {"identity_ok", r.identity_ok},
              {"trace_ok", r.trace_ok},
              {"psd_ok", r.psd_ok},
              {"bound_ok", r.bound_ok},
              {"passed", r.passed()}};
}

Json to_json(const BendixsonReport& r) {
  return Json{{"m", r.rank},
              {"max_re_eigenvalue", r.max_re_eigenvalue},
              {"max_hermitian_eigenvalue", r.max_hermitian_eigenvalue},
              {"gap", r.gap},
              {"holds", r.holds}};
}

Json to_json(const TildeReport& r) {
  return Json{{"n_atoms", r.n_atoms},
              {"s", r.sector},
              {"max_abs_residual", r.max_residual},
              {"max_btb_diag_error", r.max_gram_diag_error},
              {"min_f", r.min_f},
              {"min_eig_q", r.min_q_eigenvalue},
              {"lower_bound", r.lower_bound},
              {"decomposition_ok", r.decomposition_ok},
              {"diag_ok", r.diag_ok},
              {"bound_ok", r.bound_ok},
              {"passed", r.passed()}};
}

Json to_json(const KernelAudit& a) {
  return Json{{"n_atoms", a.n_atoms},
              {"s", a.sector},
              {"kernel_dimension", a.kernel_dimension},
              {"smallest_singular_value", a.smallest_singular_value},
              {"largest_singular_value", a.largest_singular_value},
              {"psi0_norm", a.psi0_norm},
              {"residual", a.residual},
              {"non_generic", a.non_generic},
              {"verdict", std::string(to_string(a.verdict))},
              {"consistent", a.consistent}};
}

Json block_matrices_json(const ReducedBlock& block) {
  Json cls = Json::array();
  for (const auto& p : block.cls.pairs()) cls.push_back({p.left.str(), p.right.str()});
  Json j{{"n_atoms", block.cls.n_atoms()},
         {"m", block.rank()},
         {"class", std::move(cls)},
         {"Q", matrix_json(block.q_trace)},
         {"F", std::vector<double>(block.f_diag.data(), block.f_diag.data() + block.f_diag.size())},
         {"A", matrix_json(block.a_analytic)}};
  if (block.incidence) {
    j["B"] = matrix_json(block.incidence->dense);
    j["BtB"] = matrix_json(block.incidence->rows() ? block.incidence->gram()
                                                   : RMatrix::Zero(block.size(), block.size()));
  }
  return j;
}

}  // namespace wgspec
