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

#include "oracles.hpp"
#include "wgspec/effective_hamiltonian.hpp"
#include "wgspec/error.hpp"

using namespace wgspec;

namespace {

// <w'| c_L^dag c_L |w> over weight-s words, from explicit g/e operators.
RMatrix direct_quadratic_form(int n, int s, const std::vector<double>& phases) {
  const CMatrix u = oracle::x_rotation(n);
  const CMatrix c = oracle::jump(n, phases, +1);
  const CMatrix q = u.adjoint() * c.adjoint() * c * u;
  const auto words = words_of_weight(n, s);
  const auto size = static_cast<Eigen::Index>(words.size());
  RMatrix out(size, size);
  for (Eigen::Index a = 0; a < size; ++a)
    for (Eigen::Index b = 0; b < size; ++b) {
      const Complex v = q(words[b].mask(), words[a].mask());
      REQUIRE(std::abs(v.imag()) < 1e-12);
      out(a, b) = v.real();
    }
  return out;
}

}  // namespace

TEST_CASE("two-atom single-excitation sector") {
  const ModelParams p(2, 1.0, 1.0, {0.3, 1.4});
  const double c = std::cos(0.3 - 1.4);
  const RMatrix q = reduced_quadratic_form(p, 1);
  RMatrix want(2, 2);
  want << 1 - c / 2, c / 2, c / 2, 1 - c / 2;
  CHECK(max_abs(RMatrix(q - want)) <= 1e-15);
  const RVector e = symmetric_eigenvalues(q);
  CHECK(e(0) == doctest::Approx(std::min(1.0, 1.0 - c)));
  CHECK(e(1) == doctest::Approx(std::max(1.0, 1.0 - c)));

  const auto block = build_tilde_block(p, 1);
  CHECK(block.f_tilde(0) == doctest::Approx((1 - c) / 2));
  CHECK(block.f_tilde(1) == doctest::Approx((1 - c) / 2));
  const RMatrix gram = block.b_tilde.transpose() * block.b_tilde;
  RMatrix gwant(2, 2);
  gwant << 0.5, c / 2, c / 2, 0.5;
  CHECK(max_abs(RMatrix(gram - gwant)) <= 1e-15);
  const auto rep = tilde_decomposition(block);
  CHECK(rep.max_residual <= 1e-15);
  CHECK(rep.lower_bound == 0.0);
  CHECK(rep.min_q_eigenvalue >= -1e-12);
  CHECK(rep.passed());
}

TEST_CASE("fully flipped word at the Dicke point") {
  // 1/2 sum_{j>=k} (+1) over three index pairs
  const RMatrix q = reduced_quadratic_form(ModelParams(2, 1.0, 1.0, {0.0, 0.0}), 2);
  REQUIRE(q.size() == 1);
  CHECK(q(0, 0) == doctest::Approx(1.5));
  CHECK(direct_quadratic_form(2, 2, {0.0, 0.0})(0, 0) == doctest::Approx(1.5));
}

TEST_CASE("closed form matches the direct matrix for every sector") {
  std::mt19937 rng(6);
  for (int n = 1; n <= 8; ++n) {
    const auto ph = oracle::random_phases(n, rng);
    const ModelParams p(n, 1.0, 1.0, ph);
    for (int s = 0; s <= n; ++s)
      CHECK(max_abs(RMatrix(reduced_quadratic_form(p, s) - direct_quadratic_form(n, s, ph))) <=
            1e-12);
  }
}

TEST_CASE("tilde decomposition holds for all sectors") {
  std::mt19937 rng(61);
  for (int n = 1; n <= 8; ++n) {
    const ModelParams p(n, 1.0, 1.0, oracle::random_phases(n, rng));
    for (int s = 0; s <= n; ++s) {
      const auto block = build_tilde_block(p, s);
      const auto rep = tilde_decomposition(block);
      CHECK(rep.max_residual <= 1e-12);
      CHECK(rep.diag_ok);
      if (2 * s >= n) CHECK(rep.min_q_eigenvalue >= rep.lower_bound - 1e-10);
      if (s == n) CHECK(block.b_tilde.rows() == 0);
    }
  }
  CHECK_THROWS_AS(build_tilde_block(ModelParams(2, 1.0, 1.0, {0.0, 0.0}), 3), Error);
}

TEST_CASE("kernel vector examples") {
  const ModelParams p2(2, 1.0, 1.0, {0.4, 2.2});
  const RVector v2 = kernel_vector(p2, 1);
  CHECK(v2(0) == 1.0);
  CHECK(v2(1) == 1.0);

  const std::vector<double> ph{0.3, 1.1, 2.9};
  const RVector v3 = kernel_vector(ModelParams(3, 1.0, 1.0, ph), 2);
  // words in ascending order: 011, 101, 110
  CHECK(v3(2) == doctest::Approx(std::sin(ph[1] - ph[0])));
  CHECK(v3(1) == doctest::Approx(-std::sin(ph[2] - ph[0])));
  CHECK(v3(0) == doctest::Approx(std::sin(ph[2] - ph[1])));

  for (int n = 3; n <= 6; ++n) {
    const ModelParams dicke(n, 1.0, 1.0, std::vector<double>(n, 0.7));
    for (int s = 0; s <= n; ++s) CHECK(kernel_vector(dicke, s).norm() == 0.0);
  }
}

TEST_CASE("swap antisymmetry of the kernel vector") {
  // Swap atoms a, b together with their phases; psi0 should change sign up
  // to the matching permutation of words. Holds for the literal product
  // formula at odd N and in the s = 0, N sectors; even N mixed sectors are
  // recorded below rather than asserted.
  std::mt19937 rng(3);
  const auto permuted_deviation = [](int n, int s, const std::vector<double>& ph, int a, int b,
                                     double sign) {
    auto sw = ph;
    std::swap(sw[a], sw[b]);
    const RVector psi = kernel_vector(ModelParams(n, 1.0, 1.0, ph), s);
    const RVector psw = kernel_vector(ModelParams(n, 1.0, 1.0, sw), s);
    const auto words = words_of_weight(n, s);
    double dev = 0.0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto w = words[i];
      auto t = w;
      if (w.bit(a) != w.bit(b)) t = w.flipped(a).flipped(b);
      std::size_t j = 0;
      while (words[j] != t) ++j;
      dev = std::max(dev, std::abs(psw(j) - sign * psi(i)));
    }
    return dev;
  };
  for (int n : {3, 5})
    for (int s = 0; s <= n; ++s) {
      const auto ph = oracle::random_phases(n, rng);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) CHECK(permuted_deviation(n, s, ph, a, b, -1.0) <= 1e-12);
    }
  // Even N, single excitation: the empty products make psi0 symmetric.
  CHECK(permuted_deviation(2, 1, {0.2, 1.3}, 0, 1, +1.0) == 0.0);
  CHECK(permuted_deviation(4, 2, oracle::random_phases(4, rng), 0, 1, -1.0) > 1e-3);
}

TEST_CASE("kernel audit") {
  const auto a = kernel_audit(ModelParams(2, 1.0, 1.0, {0.4, 2.2}), 1);
  CHECK(a.kernel_dimension == 0);
  CHECK(a.residual == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.verdict == KernelVerdict::refutes);
  CHECK(a.consistent);

  std::mt19937 rng(10);
  for (int seed = 0; seed < 10; ++seed) {
    const auto r = kernel_audit(ModelParams(3, 1.0, 1.0, oracle::random_phases(3, rng)), 2);
    if (r.kernel_dimension == 1 && r.psi0_norm > 0) CHECK(r.residual <= 1e-8);
    CHECK(r.consistent);
  }

  const auto top = kernel_audit(ModelParams(3, 1.0, 1.0, {0.1, 0.9, 2.0}), 3);
  CHECK(top.kernel_dimension == 0);
  CHECK(top.smallest_singular_value > 0.0);

  const auto dicke = kernel_audit(ModelParams(4, 1.0, 1.0, std::vector<double>(4, 0.0)), 2);
  CHECK(dicke.non_generic);
  CHECK(dicke.verdict == KernelVerdict::inapplicable);
}
