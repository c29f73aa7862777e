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

#ifndef SCRIBE_AGGREGATION_HPP_
#define SCRIBE_AGGREGATION_HPP_

// Categorical error aggregation. Every category rate shares the same
// denominator, the total reference token count, so rates add up to the
// overall token error rate.

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>

#include "scribe/alignment.hpp"
#include "scribe/token.hpp"

namespace scribe {

struct CategoryTally {
  std::size_t total = 0;  // reference tokens of this category
  std::size_t sub = 0;
  std::size_t ins = 0;
  std::size_t del = 0;
  std::size_t near_miss_subs = 0;  // subset of sub

  std::size_t errors() const { return sub + ins + del; }

  CategoryTally& operator+=(const CategoryTally& o) {
    total += o.total;
    sub += o.sub;
    ins += o.ins;
    del += o.del;
    near_miss_subs += o.near_miss_subs;
    return *this;
  }
  friend bool operator==(const CategoryTally&, const CategoryTally&) = default;
};

struct CategoryCounts {
  CategoryMap<CategoryTally> by_category;
  std::size_t sandhi_merges = 0;
  std::size_t sandhi_splits = 0;

  CategoryTally& operator[](TokenCategory c) { return by_category[c]; }
  const CategoryTally& operator[](TokenCategory c) const { return by_category[c]; }

  /// Combined denominator: all reference tokens.
  std::size_t n_comb() const {
    std::size_t n = 0;
    for (const auto& t : by_category.values) n += t.total;
    return n;
  }

  std::size_t error_ops() const {
    std::size_t n = 0;
    for (const auto& t : by_category.values) n += t.errors();
    return n;
  }

  CategoryCounts& operator+=(const CategoryCounts& o) {
    for (const TokenCategory c : kAllCategories) by_category[c] += o[c];
    sandhi_merges += o.sandhi_merges;
    sandhi_splits += o.sandhi_splits;
    return *this;
  }
  friend bool operator==(const CategoryCounts&, const CategoryCounts&) = default;
};

enum class RateStatus {
  ok,
  // No reference tokens but some hypothesis tokens: rates hold raw counts.
  undefined_denominator,
  // Nothing on either side.
  empty,
};

constexpr std::string_view to_string(RateStatus s) {
  switch (s) {
    case RateStatus::ok: return "ok";
    case RateStatus::undefined_denominator: return "undefined_denominator";
    case RateStatus::empty: return "empty";
  }
  return "unknown";
}

/// Per-category error numerators over the shared denominator n_comb.
struct ErrorVector {
  CategoryMap<std::size_t> errors;
  std::size_t n_comb = 0;
  RateStatus status = RateStatus::empty;

  double rate(TokenCategory c) const {
    const auto numerator = static_cast<double>(errors[c]);
    if (status == RateStatus::ok) {
      return numerator / static_cast<double>(n_comb);
    }
    return numerator;
  }
  double er_lex() const { return rate(TokenCategory::lexeme); }
  double er_num() const { return rate(TokenCategory::numeral); }
  double er_punc() const { return rate(TokenCategory::punctuation); }
  double er_ent() const { return rate(TokenCategory::domain_entity); }

  friend bool operator==(const ErrorVector&, const ErrorVector&) = default;
};

inline ErrorVector error_vector(const CategoryCounts& counts) {
  ErrorVector e;
  e.n_comb = counts.n_comb();
  std::size_t total_errors = 0;
  for (const TokenCategory c : kAllCategories) {
    e.errors[c] = counts[c].errors();
    total_errors += e.errors[c];
  }
  if (e.n_comb > 0) {
    e.status = RateStatus::ok;
  } else {
    e.status = total_errors > 0 ? RateStatus::undefined_denominator
                                : RateStatus::empty;
  }
  return e;
}

/// Substitutions and deletions are charged to the reference token's category,
/// insertions to the hypothesis token's. Sandhi ops cost nothing.
inline CategoryCounts count_errors(const Alignment& alignment,
                                   std::span<const Token> ref,
                                   std::span<const Token> hyp) {
  CategoryCounts counts;
  for (const Token& t : ref) ++counts[t.category].total;
  for (const AlignmentOp& op : alignment.ops) {
    switch (op.kind) {
      case OpKind::match:
        break;
      case OpKind::substitution: {
        CategoryTally& tally = counts[ref[op.ref_indices.front()].category];
        ++tally.sub;
        if (op.near_miss) ++tally.near_miss_subs;
        break;
      }
      case OpKind::deletion:
        ++counts[ref[op.ref_indices.front()].category].del;
        break;
      case OpKind::insertion:
        ++counts[hyp[op.hyp_indices.front()].category].ins;
        break;
      case OpKind::sandhi_merge:
        ++counts.sandhi_merges;
        break;
      case OpKind::sandhi_split:
        ++counts.sandhi_splits;
        break;
    }
  }
  return counts;
}

inline std::pair<ErrorVector, CategoryCounts> aggregate(
    const Alignment& alignment, std::span<const Token> ref,
    std::span<const Token> hyp) {
  CategoryCounts counts = count_errors(alignment, ref, hyp);
  return {error_vector(counts), counts};
}

}  // namespace scribe

#endif  // SCRIBE_AGGREGATION_HPP_
