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

#ifndef SCRIBE_NORMALIZATION_HPP_
#define SCRIBE_NORMALIZATION_HPP_

// Diacritic-preserving normalization. Nothing here removes or decomposes a
// combining mark: canonical composition only ever fuses a base and a mark
// into their canonical equivalent.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/uscript.h>

#include "scribe/unicode.hpp"

namespace scribe {

struct NormalizationOptions {
  bool canonical_compose = true;
  bool collapse_whitespace = true;
  bool normalize_delimiters = false;
  bool latin_case_fold = false;
  // ZWJ/ZWNJ are kept unless this is set.
  bool strip_zero_width = false;

  friend bool operator==(const NormalizationOptions&,
                         const NormalizationOptions&) = default;
};

namespace detail {

constexpr bool is_number_delimiter(char32_t c) {
  return c == U'.' || c == U',' || c == U'/' || c == U'-' || c == U':';
}

constexpr bool is_date_delimiter(char32_t c) {
  return c == U'.' || c == U'/' || c == U'-';
}

// A maximal digit-delimiter-digit run: digit groups separated by single
// delimiters. `groups` holds [begin, end) offsets of each digit group.
struct DigitRun {
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  std::size_t end = 0;
};

inline DigitRun scan_digit_run(std::u32string_view text, std::size_t start) {
  DigitRun run;
  std::size_t i = start;
  while (true) {
    const std::size_t group_begin = i;
    while (i < text.size() && unicode::is_digit(text[i])) ++i;
    run.groups.emplace_back(group_begin, i);
    if (i + 1 < text.size() && is_number_delimiter(text[i]) &&
        unicode::is_digit(text[i + 1])) {
      ++i;
      continue;
    }
    break;
  }
  run.end = i;
  return run;
}

inline bool looks_like_date(std::u32string_view text, const DigitRun& run) {
  if (run.groups.size() != 3) return false;
  const auto len = [&](std::size_t g) {
    return run.groups[g].second - run.groups[g].first;
  };
  const char32_t d1 = text[run.groups[0].second];
  const char32_t d2 = text[run.groups[1].second];
  return len(0) >= 1 && len(0) <= 2 && len(1) >= 1 && len(1) <= 2 &&
         (len(2) == 2 || len(2) == 4) && d1 == d2 && is_date_delimiter(d1);
}

// Comma-grouped integer, optionally followed by one '.' fraction:
// 1,00,000  1,234,567  12,345.50
inline bool looks_like_grouped_number(std::u32string_view text,
                                      const DigitRun& run) {
  const std::size_t n = run.groups.size();
  if (n < 2) return false;
  const bool has_fraction = text[run.groups[n - 2].second] == U'.';
  const std::size_t integer_groups = has_fraction ? n - 1 : n;
  if (integer_groups < 2) return false;
  const std::size_t lead = run.groups[0].second - run.groups[0].first;
  if (lead < 1 || lead > 3) return false;
  for (std::size_t g = 1; g < integer_groups; ++g) {
    if (text[run.groups[g - 1].second] != U',') return false;
    const std::size_t len = run.groups[g].second - run.groups[g].first;
    if (len != 2 && len != 3) return false;
  }
  return true;
}

inline std::u32string fold_latin_case(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (const char32_t c : text) {
    UErrorCode status = U_ZERO_ERROR;
    const UScriptCode script = uscript_getScript(static_cast<UChar32>(c), &status);
    if (U_SUCCESS(status) && script == USCRIPT_LATIN) {
      out.push_back(static_cast<char32_t>(
          u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT)));
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline std::u32string compose(std::u32string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU NFC unavailable: ") +
                             u_errorName(status));
  }
  const icu::UnicodeString composed = nfc->normalize(unicode::to_icu(text), status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU NFC failed: ") +
                             u_errorName(status));
  }
  return unicode::from_icu(composed);
}

inline std::u32string collapse_whitespace(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (const char32_t c : text) {
    if (unicode::is_whitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Rewrites delimiters inside digit-delimiter-digit runs. Date-like runs
/// (d[d] S d[d] S dd|dddd with one repeated separator from ". / -") take "."
/// as separator; comma-grouped numbers lose their grouping commas. Every
/// other code point is left alone.
inline std::u32string normalize_delimiters(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (!unicode::is_digit(text[i])) {
      out.push_back(text[i++]);
      continue;
    }
    const detail::DigitRun run = detail::scan_digit_run(text, i);
    const std::u32string_view slice = text.substr(i, run.end - i);
    if (detail::looks_like_date(text, run)) {
      for (const char32_t c : slice) {
        out.push_back(detail::is_date_delimiter(c) ? U'.' : c);
      }
    } else if (detail::looks_like_grouped_number(text, run)) {
      for (const char32_t c : slice) {
        if (c != U',') out.push_back(c);
      }
    } else {
      out.append(slice);
    }
    i = run.end;
  }
  return out;
}

inline std::u32string normalize(std::u32string_view text,
                                const NormalizationOptions& opts = {}) {
  std::u32string out(text);
  if (opts.strip_zero_width) {
    std::erase_if(out, unicode::is_zero_width_joiner);
  }
  if (opts.latin_case_fold) out = detail::fold_latin_case(out);
  if (opts.canonical_compose) out = detail::compose(out);
  if (opts.normalize_delimiters) out = normalize_delimiters(out);
  if (opts.collapse_whitespace) out = detail::collapse_whitespace(out);
  return out;
}

inline std::string normalize_utf8(std::string_view text,
                                  const NormalizationOptions& opts = {}) {
  return unicode::to_utf8(normalize(unicode::from_utf8(text), opts));
}

}  // namespace scribe

#endif  // SCRIBE_NORMALIZATION_HPP_
