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

#include "doctest.h"

#include <filesystem>
#include <regex>
#include <sstream>

#include "wgspec/error.hpp"
#include "wgspec/io.hpp"

using namespace wgspec;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wgspec_test_" + name);
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 12345.678901234567}) {
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("spectrum csv") {
  const ModelParams p = ModelParams::equidistant(2, 100.0, 1.0, 0.5);
  const auto pts = compute_spectrum(p, SpectrumMode::full);
  const std::string csv = spectrum_csv(pts, ParamsEcho::of(p));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n_atoms,omega,gamma,phi,m,re,im");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind("2,100,1,0.5,", 0) == 0);
  }
  CHECK(rows == 16);

  const auto back = parse_spectrum(csv);
  REQUIRE(back.points.size() == pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(back.points[i].value == pts[i].value);
    CHECK(back.points[i].branch == pts[i].branch);
  }
  CHECK(back.params.n_atoms == 2);
  CHECK(back.params.period == 0.5);
}

TEST_CASE("spectrum json round trip keeps the bound verdict") {
  const ModelParams p(3, 100.0, 1.0, {0.2, 1.9, 2.4});
  const auto pts = compute_spectrum(p, SpectrumMode::projected);
  const auto echo = ParamsEcho::of(p);
  const Json j = spectrum_json(pts, echo);
  CHECK(j.at("points").size() == pts.size());
  const auto back = parse_spectrum(j.dump());
  CHECK(back.params == echo);
  CHECK(verify_bound(back.points, back.params, 1e-9) == verify_bound(pts, p, 1e-9));
  CHECK(spectrum_json(back.points, back.params).dump() == j.dump());
}

TEST_CASE("bound report json round trip") {
  const ModelParams p = ModelParams::equidistant(2, 100.0, 1.0, 1.1);
  const auto rep = verify_bound(compute_spectrum(p, SpectrumMode::full), p);
  const Json j = to_json(rep);
  CHECK(j.at("violations") == 0);
  CHECK(bound_report_from_json(Json::parse(j.dump())) == rep);
}

TEST_CASE("svg for a large spectrum") {
  ParamsEcho echo;
  echo.n_atoms = 6;
  echo.omega = 100.0;
  echo.phases.assign(6, 0.0);
  std::vector<SpectrumPoint> pts;
  for (int i = 0; i < 4096; ++i) {
    const int m = i % 13 - 6;
    pts.push_back({{-0.5 * std::abs(m) - 0.001 * (i % 97), 2.0 * m * echo.omega}, m, 0.0,
                   SpectrumSource::full});
  }
  const std::string svg = spectrum_svg(pts, echo);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<circle") == 4096);
  CHECK(count(svg, "stroke-dasharray") == 13);
  CHECK(count(svg, "class=\"bound\"") == 13);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(export_spectrum(pts, echo, ExportFormat::svg) == svg);
}

TEST_CASE("scan csv") {
  const ModelParams tmpl = ModelParams::equidistant(2, 100.0, 1.0, 0.0);
  ScanSpec spec;
  spec.phi_end = 1.0;
  spec.steps = 3;
  const auto scan = phase_scan(tmpl, spec);
  const std::string csv = scan_csv(scan);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n_atoms,omega,gamma,phi,m,hii,extra_j,mode,min_abs_re");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3 * 2 * 3);
  CHECK(csv.find(",full,") != std::string::npos);
}

TEST_CASE("format names and file errors") {
  CHECK(parse_format("csv") == ExportFormat::csv);
  CHECK(parse_format("svg") == ExportFormat::svg);
  CHECK_THROWS_AS(parse_format("png"), Error);

  const auto missing = temp_path("does_not_exist/spectrum.csv");
  try {
    read_text(missing);
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io);
    CHECK(std::string(e.what()).find(missing.string()) != std::string::npos);
  }
  CHECK_THROWS_AS(write_text(missing, "x"), Error);

  const auto ok = temp_path("roundtrip.txt");
  write_text(ok, "abc\n");
  CHECK(read_text(ok) == "abc\n");
  std::filesystem::remove(ok);

  CHECK_THROWS_AS(parse_spectrum("not,a,spectrum\n1,2\n"), Error);
  CHECK_THROWS_AS(parse_spectrum("{\"points\": 3}"), Error);
}

TEST_CASE("report json shapes") {
  const ModelParams p(3, 100.0, 1.0, {0.1, 0.8, 2.0});
  const auto block = build_reduced_block(enumerate_rank_class(3, 1), p);
  const Json d = to_json(verify_decomposition(block));
  CHECK(d.contains("passed"));
  const Json m = block_matrices_json(block);
  CHECK(m.at("class").size() == block.cls.size());
  CHECK(m.at("Q").size() == block.cls.size());
  const Json k = to_json(kernel_audit(p, 2));
  CHECK(k.at("verdict") == "refutes");
  const Json t = to_json(tilde_decomposition(build_tilde_block(p, 2)));
  CHECK(t.at("passed") == true);
}
