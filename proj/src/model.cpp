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

#include "wgspec/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "wgspec/error.hpp"

namespace wgspec {

ModelParams::ModelParams(int n_atoms, double rabi, double gamma,
                         std::vector<double> phases)
    : n_atoms_(n_atoms), rabi_(rabi), gamma_(gamma), phases_(std::move(phases)) {
  if (n_atoms_ < 1) fail(ErrorCode::invalid_input, "n_atoms must be >= 1");
  if (!(gamma_ > 0.0) || !std::isfinite(gamma_))
    fail(ErrorCode::invalid_input, "gamma must be finite and > 0");
  if (!(rabi_ >= 0.0) || !std::isfinite(rabi_))
    fail(ErrorCode::invalid_input, "rabi must be finite and >= 0");
  if (phases_.size() != static_cast<std::size_t>(n_atoms_))
    fail(ErrorCode::invalid_input,
         "expected " + std::to_string(n_atoms_) + " phases, got " +
             std::to_string(phases_.size()));
  for (double p : phases_)
    if (!std::isfinite(p)) fail(ErrorCode::invalid_input, "phase is not finite");
}

ModelParams ModelParams::equidistant(int n_atoms, double rabi, double gamma,
                                     double period) {
  if (n_atoms < 1) fail(ErrorCode::invalid_input, "n_atoms must be >= 1");
  std::vector<double> phases(n_atoms);
  for (int j = 0; j < n_atoms; ++j) phases[j] = j * period;
  ModelParams p(n_atoms, rabi, gamma, std::move(phases));
  p.period_ = period;
  return p;
}

ModelParams ModelParams::with_rabi(double rabi) const {
  ModelParams p = *this;
  if (!(rabi >= 0.0) || !std::isfinite(rabi))
    fail(ErrorCode::invalid_input, "rabi must be finite and >= 0");
  p.rabi_ = rabi;
  return p;
}

ModelParams ModelParams::with_interaction(bool include) const {
  ModelParams p = *this;
  p.include_interaction_ = include;
  return p;
}

ModelParams ModelParams::with_extra_coupling(std::optional<double> j) const {
  if (j && !std::isfinite(*j))
    fail(ErrorCode::invalid_input, "extra coupling is not finite");
  ModelParams p = *this;
  p.extra_coupling_ = j;
  return p;
}

BinaryWord::BinaryWord(int n_atoms, std::uint32_t mask) : n_(n_atoms), mask_(mask) {
  if (n_ < 1 || n_ > kMaxWordAtoms)
    fail(ErrorCode::capacity, "word length must be in [1, " +
                                  std::to_string(kMaxWordAtoms) + "]");
  if (mask_ >> n_) fail(ErrorCode::invalid_input, "mask has bits beyond word length");
}

BinaryWord BinaryWord::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > kMaxWordAtoms)
    fail(ErrorCode::invalid_input, "bad word length");
  std::uint32_t mask = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') fail(ErrorCode::invalid_input, "word must be over {0,1}");
    mask = (mask << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return {static_cast<int>(bits.size()), mask};
}

bool BinaryWord::bit(int atom) const {
  if (atom < 0 || atom >= n_) fail(ErrorCode::invalid_input, "atom index out of range");
  return (mask_ & atom_bit(n_, atom)) != 0;
}

int BinaryWord::weight() const noexcept { return std::popcount(mask_); }

BinaryWord BinaryWord::flipped(int atom) const {
  if (atom < 0 || atom >= n_) fail(ErrorCode::invalid_input, "atom index out of range");
  return {n_, mask_ ^ atom_bit(n_, atom)};
}

std::string BinaryWord::str() const {
  std::string s(n_, '0');
  for (int j = 0; j < n_; ++j)
    if (mask_ & atom_bit(n_, j)) s[j] = '1';
  return s;
}

WordStats word_stats(const BinaryWord& word, const ModelParams& params) {
  if (word.size() != params.n_atoms())
    fail(ErrorCode::invalid_input, "word length " + std::to_string(word.size()) +
                                       " does not match n_atoms " +
                                       std::to_string(params.n_atoms()));
  std::complex<double> a{0.0, 0.0};
  for (int j = 0; j < word.size(); ++j) {
    const double sign = word.bit(j) ? -1.0 : 1.0;
    a += sign * std::polar(1.0, params.phase(j));
  }
  return {word.weight(), a};
}

std::string WordPair::str() const { return "(" + left.str() + "," + right.str() + ")"; }

ThetaVector theta(int atom, const ModelParams& params) {
  if (atom < 0 || atom >= params.n_atoms())
    fail(ErrorCode::invalid_input, "atom index out of range");
  const double phi = params.phase(atom);
  return {std::cos(phi) * M_SQRT1_2, std::sin(phi) * M_SQRT1_2};
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

std::size_t rank_class_size(int n_atoms, int m) {
  if (m < 0) m = -m;
  std::size_t total = 0;
  for (int s = 0; s + m <= n_atoms; ++s)
    total += binomial(n_atoms, s + m) * binomial(n_atoms, s);
  return total;
}

std::vector<BinaryWord> words_of_weight(int n_atoms, int weight) {
  if (n_atoms < 1 || n_atoms > kMaxWordAtoms)
    fail(ErrorCode::capacity, "word length out of range");
  std::vector<BinaryWord> out;
  if (weight < 0 || weight > n_atoms) return out;
  out.reserve(binomial(n_atoms, weight));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n_atoms); ++mask)
    if (std::popcount(mask) == weight) out.emplace_back(n_atoms, mask);
  return out;
}

namespace {
std::uint64_t pair_key(const WordPair& p) {
  return (std::uint64_t{p.left.mask()} << 32) | p.right.mask();
}
}  // namespace

RankClass::RankClass(int n_atoms, int rank, std::vector<WordPair> pairs)
    : n_(n_atoms), m_(rank), pairs_(std::move(pairs)) {}

std::optional<std::size_t> RankClass::index_of(const WordPair& p) const {
  if (p.left.size() != n_ || p.right.size() != n_) return std::nullopt;
  const auto key = pair_key(p);
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), key,
      [](const WordPair& a, std::uint64_t k) { return pair_key(a) < k; });
  if (it == pairs_.end() || pair_key(*it) != key) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

RankClass enumerate_rank_class(int n_atoms, int m) {
  if (n_atoms < 1 || n_atoms > kMaxWordAtoms)
    fail(ErrorCode::capacity, "n_atoms out of word range");
  if (m < 0 || m > n_atoms)
    fail(ErrorCode::invalid_input,
         "rank must be in [0, n_atoms]; negative ranks are adjoints of |m|");
  std::vector<WordPair> pairs;
  pairs.reserve(rank_class_size(n_atoms, m));
  for (int s = 0; s + m <= n_atoms; ++s) {
    const auto lefts = words_of_weight(n_atoms, s + m);
    const auto rights = words_of_weight(n_atoms, s);
    for (const auto& l : lefts)
      for (const auto& r : rights) pairs.push_back({l, r});
  }
  std::sort(pairs.begin(), pairs.end(), [](const WordPair& a, const WordPair& b) {
    return pair_key(a) < pair_key(b);
  });
  return {n_atoms, m, std::move(pairs)};
}

}  // namespace wgspec
