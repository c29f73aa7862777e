// Copyright 2026 The Scribe Authors
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

#ifndef SCRIBE_ALIGNMENT_HPP_
#define SCRIBE_ALIGNMENT_HPP_

// Sandhi-aware alignment.
//
// Maximizes the total score over five transitions per cell:
//
//   dp[i][j] = max( dp[i-1][j-1] + S(r_i, h_j)          match / substitution
//                   dp[i-1][j]   + gap(cat r_i)         deletion
//                   dp[i][j-1]   + gap(cat h_j)         insertion
//                   dp[i-1][j-2] + sandhi(h_j-1, h_j -> r_i)   split
//                   dp[i-2][j-1] + sandhi(r_i-1, r_i -> h_j)   merge )
//
// with dp[0][0] = 0 and gap sums along the borders. Sandhi transitions only
// exist where validate_sandhi() accepts the triple.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scribe/edit_distance.hpp"
#include "scribe/error.hpp"
#include "scribe/token.hpp"

namespace scribe {

struct ScoringConfig {
  double alpha = 4.0;        // exact match
  double beta = -3.0;        // category clash
  double delta_base = -1.5;  // same-category substitution: base - slope * d
  double delta_slope = 0.2;
  double sigma = -0.5;       // sandhi penalty
  // Weight on the boundary term d_b / |fused| of the sandhi score. Scaling it
  // along with the other constants keeps the argmax scale-invariant.
  double sandhi_boundary_weight = 1.0;
  CategoryMap<double> gap_penalty{{-2.0, -2.0, -2.0, -2.0}};
  std::size_t near_miss_threshold = 2;
  std::size_t sandhi_boundary_threshold = 2;

  double gap(TokenCategory c) const { return gap_penalty[c]; }

  /// Every score constant multiplied by `factor`; thresholds untouched.
  ScoringConfig scaled(double factor) const {
    ScoringConfig out = *this;
    out.alpha *= factor;
    out.beta *= factor;
    out.delta_base *= factor;
    out.delta_slope *= factor;
    out.sigma *= factor;
    out.sandhi_boundary_weight *= factor;
    for (double& g : out.gap_penalty.values) g *= factor;
    return out;
  }

  void validate() const {
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(alpha) || alpha <= 0) throw ConfigError("alpha must be > 0");
    if (!finite(beta) || beta >= 0) throw ConfigError("beta must be < 0");
    if (!finite(delta_base) || delta_base >= 0) {
      throw ConfigError("delta_base must be < 0");
    }
    if (!finite(delta_slope) || delta_slope < 0) {
      throw ConfigError("delta_slope must be >= 0");
    }
    if (!finite(sigma) || sigma >= 0) throw ConfigError("sigma must be < 0");
    if (!finite(sandhi_boundary_weight) || sandhi_boundary_weight < 0) {
      throw ConfigError("sandhi_boundary_weight must be >= 0");
    }
    for (const TokenCategory c : kAllCategories) {
      if (!finite(gap_penalty[c]) || gap_penalty[c] >= 0) {
        throw ConfigError("gap_penalty." + std::string(to_string(c)) +
                          " must be < 0");
      }
    }
  }

  friend bool operator==(const ScoringConfig&, const ScoringConfig&) = default;
};

enum class OpKind : std::uint8_t {
  match,
  substitution,
  insertion,
  deletion,
  sandhi_merge,
  sandhi_split,
};

constexpr std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::match: return "match";
    case OpKind::substitution: return "substitution";
    case OpKind::insertion: return "insertion";
    case OpKind::deletion: return "deletion";
    case OpKind::sandhi_merge: return "sandhi_merge";
    case OpKind::sandhi_split: return "sandhi_split";
  }
  return "unknown";
}

struct AlignmentOp {
  OpKind kind = OpKind::match;
  std::vector<std::size_t> ref_indices;
  std::vector<std::size_t> hyp_indices;
  double score = 0.0;
  // Code-point distance for substitutions and boundary distance for sandhi
  // ops; 0 otherwise.
  std::size_t char_distance = 0;
  // Same-category substitution within near_miss_threshold.
  bool near_miss = false;

  friend bool operator==(const AlignmentOp&, const AlignmentOp&) = default;
};

struct Alignment {
  std::vector<AlignmentOp> ops;
  double total_score = 0.0;
};

struct PairScore {
  double score = 0.0;
  std::size_t char_distance = 0;
};

/// S(r, h): alpha on exact match, beta on category clash, otherwise the
/// distance-buffered substitution penalty.
inline PairScore score_pair(const Token& r, const Token& h,
                            const ScoringConfig& cfg) {
  if (r.category == h.category && r.text == h.text) return {cfg.alpha, 0};
  const std::size_t d = code_point_distance(r.text, h.text);
  if (r.category != h.category) return {cfg.beta, d};
  return {cfg.delta_base - cfg.delta_slope * static_cast<double>(d), d};
}

struct SandhiScore {
  double score = 0.0;
  std::size_t boundary_distance = 0;
};

/// Scores `first` + `second` fusing into `fused`. Valid only for three
/// lexemes where the fused form starts like `first`, ends like `second`, and
/// lies within sandhi_boundary_threshold edits of their concatenation.
inline std::optional<SandhiScore> validate_sandhi(const Token& first,
                                                  const Token& second,
                                                  const Token& fused,
                                                  const ScoringConfig& cfg) {
  constexpr auto lexeme = TokenCategory::lexeme;
  if (first.category != lexeme || second.category != lexeme ||
      fused.category != lexeme) {
    return std::nullopt;
  }
  if (first.text.empty() || second.text.empty() || fused.text.empty()) {
    return std::nullopt;
  }
  if (fused.text.front() != first.text.front() ||
      fused.text.back() != second.text.back()) {
    return std::nullopt;
  }
  // Length difference lower-bounds the distance; skip the DP when it cannot
  // pass.
  const std::size_t joined_len = first.text.size() + second.text.size();
  const std::size_t len_gap = joined_len > fused.text.size()
                                  ? joined_len - fused.text.size()
                                  : fused.text.size() - joined_len;
  if (len_gap > cfg.sandhi_boundary_threshold) return std::nullopt;

  const std::u32string joined = first.text + second.text;
  const std::size_t d = code_point_distance(joined, fused.text);
  if (d > cfg.sandhi_boundary_threshold) return std::nullopt;
  const double boundary = cfg.sandhi_boundary_weight * static_cast<double>(d) /
                          static_cast<double>(fused.text.size());
  return SandhiScore{cfg.alpha + cfg.sigma - boundary, d};
}

namespace detail {

enum class Move : std::uint8_t { none, diagonal, merge, split, deletion, insertion };

}  // namespace detail

/// Maximum-score alignment. Equal-scoring transitions are resolved in the
/// order match/substitution, merge, split, deletion, insertion.
inline Alignment align(std::span<const Token> ref, std::span<const Token> hyp,
                       const ScoringConfig& cfg = {}) {
  using detail::Move;
  const std::size_t rows = ref.size() + 1;
  const std::size_t cols = hyp.size() + 1;
  std::vector<double> dp(rows * cols, 0.0);
  std::vector<Move> back(rows * cols, Move::none);
  const auto at = [cols](std::size_t i, std::size_t j) { return i * cols + j; };

  for (std::size_t i = 1; i < rows; ++i) {
    dp[at(i, 0)] = dp[at(i - 1, 0)] + cfg.gap(ref[i - 1].category);
    back[at(i, 0)] = Move::deletion;
  }
  for (std::size_t j = 1; j < cols; ++j) {
    dp[at(0, j)] = dp[at(0, j - 1)] + cfg.gap(hyp[j - 1].category);
    back[at(0, j)] = Move::insertion;
  }

  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      double best = dp[at(i - 1, j - 1)] +
                    score_pair(ref[i - 1], hyp[j - 1], cfg).score;
      Move move = Move::diagonal;
      const auto consider = [&](double candidate, Move m) {
        if (candidate > best) {
          best = candidate;
          move = m;
        }
      };
      if (i >= 2) {
        if (auto s = validate_sandhi(ref[i - 2], ref[i - 1], hyp[j - 1], cfg)) {
          consider(dp[at(i - 2, j - 1)] + s->score, Move::merge);
        }
      }
      if (j >= 2) {
        if (auto s = validate_sandhi(hyp[j - 2], hyp[j - 1], ref[i - 1], cfg)) {
          consider(dp[at(i - 1, j - 2)] + s->score, Move::split);
        }
      }
      consider(dp[at(i - 1, j)] + cfg.gap(ref[i - 1].category), Move::deletion);
      consider(dp[at(i, j - 1)] + cfg.gap(hyp[j - 1].category), Move::insertion);
      dp[at(i, j)] = best;
      back[at(i, j)] = move;
    }
  }

  Alignment result;
  result.total_score = dp[at(rows - 1, cols - 1)];
  std::size_t i = rows - 1;
  std::size_t j = cols - 1;
  while (i > 0 || j > 0) {
    AlignmentOp op;
    switch (back[at(i, j)]) {
      case Move::diagonal: {
        const Token& r = ref[i - 1];
        const Token& h = hyp[j - 1];
        const PairScore s = score_pair(r, h, cfg);
        const bool exact = r.category == h.category && r.text == h.text;
        op.kind = exact ? OpKind::match : OpKind::substitution;
        op.ref_indices = {i - 1};
        op.hyp_indices = {j - 1};
        op.score = s.score;
        op.char_distance = s.char_distance;
        op.near_miss = !exact && r.category == h.category &&
                       s.char_distance <= cfg.near_miss_threshold;
        --i;
        --j;
        break;
      }
      case Move::merge: {
        const auto s = validate_sandhi(ref[i - 2], ref[i - 1], hyp[j - 1], cfg);
        op.kind = OpKind::sandhi_merge;
        op.ref_indices = {i - 2, i - 1};
        op.hyp_indices = {j - 1};
        op.score = s->score;
        op.char_distance = s->boundary_distance;
        i -= 2;
        --j;
        break;
      }
      case Move::split: {
        const auto s = validate_sandhi(hyp[j - 2], hyp[j - 1], ref[i - 1], cfg);
        op.kind = OpKind::sandhi_split;
        op.ref_indices = {i - 1};
        op.hyp_indices = {j - 2, j - 1};
        op.score = s->score;
        op.char_distance = s->boundary_distance;
        --i;
        j -= 2;
        break;
      }
      case Move::deletion:
        op.kind = OpKind::deletion;
        op.ref_indices = {i - 1};
        op.score = cfg.gap(ref[i - 1].category);
        --i;
        break;
      case Move::insertion:
        op.kind = OpKind::insertion;
        op.hyp_indices = {j - 1};
        op.score = cfg.gap(hyp[j - 1].category);
        --j;
        break;
      case Move::none:
        throw std::logic_error("alignment backtrace reached an unset cell");
    }
    result.ops.push_back(std::move(op));
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

}  // namespace scribe

#endif  // SCRIBE_ALIGNMENT_HPP_
