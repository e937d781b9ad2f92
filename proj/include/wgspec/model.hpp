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

// Physical parameters and the binary-word combinatorics shared by every
// other module.
//
// Atoms are indexed 0..N-1 in code. A word bit for atom j is stored at mask
// position N-1-j, so atom 0 is the most significant bit and numeric order of
// masks equals lexicographic order of the bit strings ("0" < "1").
//
// The drive amplitude is stored real and nonnegative. A complex drive
// Omega*exp(i*alpha) is gauge-equivalent to |Omega| after rephasing the
// |g>/|e> basis of every atom, so it is not represented separately.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wgspec {

inline constexpr int kMaxWordAtoms = 16;

class ModelParams {
 public:
  /// Validates: n_atoms >= 1, gamma > 0, rabi >= 0, one phase per atom.
  ModelParams(int n_atoms, double rabi, double gamma,
              std::vector<double> phases);

  /// Equidistant array with phi_j = j * period (atom 0 at phase 0).
  static ModelParams equidistant(int n_atoms, double rabi, double gamma,
                                 double period);

  int n_atoms() const noexcept { return n_atoms_; }
  double rabi() const noexcept { return rabi_; }
  double gamma() const noexcept { return gamma_; }
  std::span<const double> phases() const noexcept { return phases_; }
  double phase(int atom) const { return phases_.at(atom); }
  bool include_interaction() const noexcept { return include_interaction_; }
  const std::optional<double>& extra_coupling() const noexcept {
    return extra_coupling_;
  }
  // Array period when built by equidistant(); empty for explicit phase lists.
  const std::optional<double>& period() const noexcept { return period_; }

  ModelParams with_rabi(double rabi) const;
  ModelParams with_interaction(bool include) const;
  ModelParams with_extra_coupling(std::optional<double> j) const;

 private:
  int n_atoms_;
  double rabi_;
  double gamma_;
  std::vector<double> phases_;
  bool include_interaction_ = true;
  std::optional<double> extra_coupling_;
  std::optional<double> period_;
};

/// Product eigenstate |w> of the drive Hamiltonian, one x-basis bit per atom.
class BinaryWord {
 public:
  BinaryWord(int n_atoms, std::uint32_t mask);
  static BinaryWord parse(std::string_view bits);

  int size() const noexcept { return n_; }
  std::uint32_t mask() const noexcept { return mask_; }
  bool bit(int atom) const;
  int weight() const noexcept;
  BinaryWord flipped(int atom) const;
  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  int n_;
  std::uint32_t mask_;
};

// Mask bit position of an atom in an n-atom word.
constexpr std::uint32_t atom_bit(int n_atoms, int atom) {
  return std::uint32_t{1} << (n_atoms - 1 - atom);
}

struct WordStats {
  int weight;                      // s_w
  std::complex<double> amplitude;  // a_w = sum_j (-1)^{w_j} e^{i phi_j}
};

WordStats word_stats(const BinaryWord& word, const ModelParams& params);

/// Density-matrix basis element |left><right|.
struct WordPair {
  BinaryWord left;
  BinaryWord right;

  int rank() const noexcept { return left.weight() - right.weight(); }
  WordPair adjoint() const { return {right, left}; }
  std::string str() const;

  friend bool operator==(const WordPair&, const WordPair&) = default;
};

/// (cos phi, sin phi) / sqrt(2)
struct ThetaVector {
  double x;
  double y;

  double dot(const ThetaVector& o) const noexcept { return x * o.x + y * o.y; }
  double squared_norm() const noexcept { return dot(*this); }
};

ThetaVector theta(int atom, const ModelParams& params);

/// All word pairs of a fixed rank m >= 0, sorted by (left, right) mask.
class RankClass {
 public:
  RankClass(int n_atoms, int rank, std::vector<WordPair> pairs);

  int n_atoms() const noexcept { return n_; }
  int rank() const noexcept { return m_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<WordPair>& pairs() const noexcept { return pairs_; }
  const WordPair& operator[](std::size_t i) const { return pairs_[i]; }

  std::optional<std::size_t> index_of(const WordPair& p) const;

 private:
  int n_;
  int m_;
  std::vector<WordPair> pairs_;
};

RankClass enumerate_rank_class(int n_atoms, int m);

/// sum_{s'=0}^{N-m} C(N, s'+m) C(N, s')
std::size_t rank_class_size(int n_atoms, int m);

/// Words of a given weight in ascending mask order.
std::vector<BinaryWord> words_of_weight(int n_atoms, int weight);

std::uint64_t binomial(int n, int k);

}  // namespace wgspec
