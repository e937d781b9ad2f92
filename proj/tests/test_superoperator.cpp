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

#include <algorithm>

#include "oracles.hpp"
#include "wgspec/error.hpp"
#include "wgspec/superoperator.hpp"

using namespace wgspec;

namespace {

double hermitian_defect(const CMatrix& m) { return max_abs(CMatrix(m - m.adjoint())); }

// Literal right-hand side of the master equation for one density matrix.
CMatrix apply_master_equation(const ModelParams& p, const CMatrix& rho) {
  const int n = p.n_atoms();
  const auto s = oracle::sigma2();
  const std::vector<double> ph(p.phases().begin(), p.phases().end());
  CMatrix h = CMatrix::Zero(1 << n, 1 << n);
  for (int j = 0; j < n; ++j) {
    const CMatrix sj = oracle::embed(s, n, j);
    h -= p.rabi() * (sj + CMatrix(sj.adjoint()));
  }
  if (p.include_interaction())
    for (int j = 0; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        const CMatrix t = oracle::embed(s, n, j).adjoint() * oracle::embed(s, n, l);
        h += p.gamma() * std::sin(std::abs(ph[j] - ph[l])) * (t + CMatrix(t.adjoint()));
      }
  const Complex i1{0.0, 1.0};
  return -i1 * (h * rho - rho * h) +
         p.gamma() * oracle::dissipate(oracle::jump(n, ph, +1), rho) +
         p.gamma() * oracle::dissipate(oracle::jump(n, ph, -1), rho);
}

std::vector<Complex> values_of(const std::vector<SpectrumPoint>& pts) {
  std::vector<Complex> v;
  for (const auto& p : pts) v.push_back(p.value);
  return v;
}

}  // namespace

TEST_CASE("single-atom drive matrix") {
  const ModelParams p(1, 3.0, 1.0, {0.4});
  const auto ops = build_operators(p);
  CHECK(std::abs(ops.drive(0, 0)) == 0.0);
  CHECK(std::abs(ops.drive(1, 1)) == 0.0);
  CHECK(ops.drive(0, 1) == Complex(-3.0, 0.0));
  CHECK(ops.drive(1, 0) == Complex(-3.0, 0.0));
  CHECK(max_abs(ops.coupling) == 0.0);
}

TEST_CASE("operator set invariants") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 4; ++n) {
    const auto ph = oracle::random_phases(n, rng);
    const auto p = ModelParams(n, 7.0, 1.3, ph).with_extra_coupling(2.5);
    const auto ops = build_operators(p);
    CHECK(hermitian_defect(ops.drive) <= 1e-13);
    CHECK(hermitian_defect(ops.coupling) <= 1e-13);
    REQUIRE(ops.extra);
    CHECK(hermitian_defect(*ops.extra) <= 1e-13);
    CHECK(max_abs(CMatrix(ops.jump_left - ops.jump_right.conjugate())) <= 1e-15);
    CHECK(max_abs(CMatrix(ops.jump_left - oracle::jump(n, ph, +1))) <= 1e-14);

    // The exponential form collapses to gamma sum_{j<l} sin|dphi| (s_j^+ s_l + h.c.).
    CMatrix expect = CMatrix::Zero(1 << n, 1 << n);
    for (int j = 0; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        const CMatrix t =
            oracle::embed(oracle::sigma2(), n, j).adjoint() * oracle::embed(oracle::sigma2(), n, l);
        expect += 1.3 * std::sin(std::abs(ph[j] - ph[l])) * (t + CMatrix(t.adjoint()));
      }
    CHECK(max_abs(CMatrix(ops.coupling - expect)) <= 1e-13);
  }
}

TEST_CASE("coupling vanishes at phase gaps of pi") {
  for (const double gap : {0.0, M_PI, 2.0 * M_PI}) {
    const auto ops = build_operators(ModelParams(2, 1.0, 1.0, {0.0, gap}));
    CHECK(max_abs(ops.coupling) <= 1e-15);
  }
  const auto ops = build_operators(ModelParams::equidistant(4, 1.0, 1.0, M_PI));
  CHECK(max_abs(ops.coupling) <= 1e-14);
}

TEST_CASE("jump operator with quarter-wave spacing") {
  const auto ops = build_operators(ModelParams(2, 1.0, 1.0, {0.0, M_PI / 2}));
  const CMatrix expect = oracle::embed(oracle::sigma2(), 2, 0) +
                         Complex{0.0, 1.0} * oracle::embed(oracle::sigma2(), 2, 1);
  CHECK(max_abs(CMatrix(ops.jump_left - expect)) <= 1e-15);
}

TEST_CASE("capacity limits") {
  CHECK_THROWS_AS(build_operators(ModelParams::equidistant(8, 1.0, 1.0, 0.1)), Error);
  const auto p7 = ModelParams::equidistant(7, 1.0, 1.0, 0.1);
  const auto ops7 = build_operators(p7);
  try {
    build_liouvillian(ops7, p7);
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::capacity);
    CHECK(std::string(e.what()).find("projected") != std::string::npos);
  }
}

TEST_CASE("column-stacking convention matches the Hilbert-Schmidt pairing") {
  std::mt19937 rng(9);
  const CMatrix a = oracle::random_density_matrix(4, rng) * Complex(0.3, 1.1);
  const CMatrix x = oracle::random_density_matrix(4, rng);
  const Complex hs = (a.adjoint() * x).trace();
  const Complex via_vec = (vectorize(a).adjoint() * vectorize(x))(0, 0);
  CHECK(std::abs(hs - via_vec) < 1e-14);
  CHECK(max_abs(CMatrix(unvectorize(vectorize(x), 4) - x)) == 0.0);
}

TEST_CASE("liouvillian matches the literal master equation") {
  std::mt19937 rng(21);
  for (int n = 1; n <= 3; ++n) {
    const auto p = ModelParams(n, 4.0, 0.7, oracle::random_phases(n, rng));
    const auto l = build_liouvillian(build_operators(p), p);
    CHECK(l.dim() == (Eigen::Index{1} << (2 * n)));
    for (int t = 0; t < 5; ++t) {
      const CMatrix rho = oracle::random_density_matrix(1 << n, rng);
      const CMatrix got = unvectorize(l.entries * vectorize(rho), 1 << n);
      CHECK(max_abs(CMatrix(got - apply_master_equation(p, rho))) <= 1e-12);
    }
  }
}

TEST_CASE("trace preservation on random density matrices") {
  std::mt19937 rng(33);
  const auto p = ModelParams(3, 10.0, 1.0, oracle::random_phases(3, rng)).with_extra_coupling(1.0);
  const auto l = build_liouvillian(build_operators(p), p);
  for (int t = 0; t < 100; ++t) {
    const CMatrix rho = oracle::random_density_matrix(8, rng);
    CHECK(std::abs(unvectorize(l.entries * vectorize(rho), 8).trace()) <= 1e-11);
  }
}

TEST_CASE("commutator part is anti-Hermitian") {
  std::mt19937 rng(2);
  const auto p = ModelParams(3, 5.0, 1.0, oracle::random_phases(3, rng));
  const auto ops = build_operators(p);
  const CMatrix c = commutator_superoperator(ops.hamiltonian(p));
  CHECK(max_abs(CMatrix(c + c.adjoint())) <= 1e-12);
}

TEST_CASE("undriven single atom") {
  const ModelParams p(1, 0.0, 1.0, {0.3});
  auto pts = full_spectrum(build_liouvillian(build_operators(p), p));
  auto v = values_of(pts);
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) { return a.real() > b.real(); });
  REQUIRE(v.size() == 4);
  const double expect[] = {0.0, -1.0, -1.0, -2.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(v[i].real() == doctest::Approx(expect[i]).epsilon(1e-12));
    CHECK(std::abs(v[i].imag()) <= 1e-12);
  }
  for (const auto& pt : pts) CHECK(pt.branch == 0);
}

TEST_CASE("strongly driven single atom against an independent eigensolver") {
  const ModelParams p(1, 100.0, 1.0, {0.0});
  const auto l = build_liouvillian(build_operators(p), p);
  Eigen::ComplexEigenSolver<CMatrix> ref(l.entries, false);
  auto want = std::vector<Complex>(ref.eigenvalues().data(), ref.eigenvalues().data() + 4);
  auto pts = full_spectrum(l);
  auto got = values_of(pts);
  for (const auto& w : want) {
    double best = 1e300;
    for (const auto& g : got) best = std::min(best, std::abs(g - w));
    CHECK(best < 1e-9);
  }

  int zero = 0, real_negative = 0, pair = 0;
  for (const auto& v : got) {
    if (std::abs(v) < 1e-9) ++zero;
    else if (std::abs(v.imag()) < 1e-9 && v.real() < 0) ++real_negative;
    else if (std::abs(std::abs(v.imag()) - 200.0) < 2.0) ++pair;
  }
  CHECK(zero == 1);
  CHECK(real_negative == 1);
  CHECK(pair == 2);

  bool found = false;
  for (const auto& pt : pts)
    if (pt.branch == 1) {
      found = true;
      CHECK(pt.value.real() == doctest::Approx(-1.5).epsilon(0.01 / 1.5));
    }
  CHECK(found);
}

TEST_CASE("spectrum structure for small arrays") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 3; ++n) {
    const auto p = ModelParams(n, 100.0, 1.0, oracle::random_phases(n, rng));
    const auto pts = full_spectrum(build_liouvillian(build_operators(p), p));
    CHECK(pts.size() == (std::size_t{1} << (2 * n)));
    bool stationary = false;
    for (const auto& a : pts) {
      stationary |= std::abs(a.value) <= 1e-9;
      CHECK(a.residue <= kBranchResidueLimit);
      double best = 1e300;
      for (const auto& b : pts) best = std::min(best, std::abs(std::conj(a.value) - b.value));
      CHECK(best <= 1e-9);
    }
    CHECK(stationary);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const auto& a = pts[i - 1];
      const auto& b = pts[i];
      CHECK((a.branch < b.branch ||
             (a.branch == b.branch && a.value.real() >= b.value.real())));
    }
  }
  const auto p0 = ModelParams(2, 0.0, 1.0, {0.0, 1.0});
  for (const auto& pt : full_spectrum(build_liouvillian(build_operators(p0), p0)))
    CHECK(pt.branch == 0);
}

TEST_CASE("branch classification") {
  auto pt = classify({-1.0, 401.0}, 100.0, SpectrumSource::full);
  CHECK(pt.branch == 2);
  CHECK(pt.residue == doctest::Approx(0.005));
  pt = classify({-1.0, -199.0}, 100.0, SpectrumSource::full);
  CHECK(pt.branch == -1);
  pt = classify({-1.0, 5.0}, 0.0, SpectrumSource::full);
  CHECK(pt.branch == 0);
  CHECK(pt.residue == 0.0);

  std::vector<SpectrumPoint> v{{{-1.0, 2.0}, 0}, {{-1.0, -2.0}, 0}, {{-0.5, 0.0}, 0}, {{-3.0, 0}, -1}};
  sort_spectrum(v);
  CHECK(v[0].branch == -1);
  CHECK(v[1].value == Complex(-0.5, 0.0));
  CHECK(v[2].value == Complex(-1.0, -2.0));
  CHECK(v[3].value == Complex(-1.0, 2.0));
}
