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

#ifndef SCRIBE_BASELINE_HPP_
#define SCRIBE_BASELINE_HPP_

// Conventional 1:1 word and character error rates, kept alongside the
// categorical vector so the two can be compared on the same input.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scribe/aggregation.hpp"
#include "scribe/edit_distance.hpp"
#include "scribe/token.hpp"
#include "scribe/unicode.hpp"

namespace scribe {

struct WordErrors {
  std::size_t sub = 0;
  std::size_t ins = 0;
  std::size_t del = 0;
  std::size_t ref_len = 0;

  std::size_t edits() const { return sub + ins + del; }
  RateStatus status() const {
    if (ref_len > 0) return RateStatus::ok;
    return edits() > 0 ? RateStatus::undefined_denominator : RateStatus::empty;
  }
  /// Only meaningful when status() is ok.
  double wer() const {
    return ref_len == 0 ? 0.0
                        : static_cast<double>(edits()) /
                              static_cast<double>(ref_len);
  }
  WordErrors& operator+=(const WordErrors& o) {
    sub += o.sub;
    ins += o.ins;
    del += o.del;
    ref_len += o.ref_len;
    return *this;
  }
  friend bool operator==(const WordErrors&, const WordErrors&) = default;
};

struct CharErrors {
  std::size_t edits = 0;
  std::size_t ref_len = 0;

  RateStatus status() const {
    if (ref_len > 0) return RateStatus::ok;
    return edits > 0 ? RateStatus::undefined_denominator : RateStatus::empty;
  }
  double cer() const {
    return ref_len == 0 ? 0.0
                        : static_cast<double>(edits) /
                              static_cast<double>(ref_len);
  }
  CharErrors& operator+=(const CharErrors& o) {
    edits += o.edits;
    ref_len += o.ref_len;
    return *this;
  }
  friend bool operator==(const CharErrors&, const CharErrors&) = default;
};

struct BaselineResult {
  WordErrors words;
  CharErrors chars;

  double wer() const { return words.wer(); }
  double cer() const { return chars.cer(); }

  BaselineResult& operator+=(const BaselineResult& o) {
    words += o.words;
    chars += o.chars;
    return *this;
  }
  friend bool operator==(const BaselineResult&, const BaselineResult&) = default;
};

/// Minimum unit-cost edit script over word strings. On ties the backtrace
/// prefers substitution, then deletion, then insertion.
inline WordErrors word_errors(std::span<const std::u32string> ref,
                              std::span<const std::u32string> hyp) {
  const std::size_t rows = ref.size() + 1;
  const std::size_t cols = hyp.size() + 1;
  std::vector<std::size_t> dist(rows * cols);
  const auto at = [cols](std::size_t i, std::size_t j) { return i * cols + j; };
  for (std::size_t i = 0; i < rows; ++i) dist[at(i, 0)] = i;
  for (std::size_t j = 0; j < cols; ++j) dist[at(0, j)] = j;
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      const std::size_t diag =
          dist[at(i - 1, j - 1)] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      dist[at(i, j)] =
          std::min({diag, dist[at(i - 1, j)] + 1, dist[at(i, j - 1)] + 1});
    }
  }

  WordErrors out;
  out.ref_len = ref.size();
  std::size_t i = ref.size();
  std::size_t j = hyp.size();
  while (i > 0 || j > 0) {
    const std::size_t here = dist[at(i, j)];
    if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (here == dist[at(i - 1, j - 1)] + (same ? 0 : 1)) {
        if (!same) ++out.sub;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && here == dist[at(i - 1, j)] + 1) {
      ++out.del;
      --i;
    } else {
      ++out.ins;
      --j;
    }
  }
  return out;
}

/// WER over token texts; categories are ignored.
inline WordErrors word_error_rate(std::span<const Token> ref,
                                  std::span<const Token> hyp) {
  std::vector<std::u32string> r;
  std::vector<std::u32string> h;
  r.reserve(ref.size());
  h.reserve(hyp.size());
  for (const Token& t : ref) r.push_back(t.text);
  for (const Token& t : hyp) h.push_back(t.text);
  return word_errors(r, h);
}

/// Plain whitespace words, for parity with external scorers.
inline std::vector<std::u32string> whitespace_words(std::u32string_view text) {
  std::vector<std::u32string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && unicode::is_whitespace(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !unicode::is_whitespace(text[i])) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

inline CharErrors char_error_rate(std::u32string_view ref,
                                  std::u32string_view hyp) {
  return {code_point_distance(ref, hyp), ref.size()};
}

}  // namespace scribe

#endif  // SCRIBE_BASELINE_HPP_
