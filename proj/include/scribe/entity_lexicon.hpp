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

#ifndef SCRIBE_ENTITY_LEXICON_HPP_
#define SCRIBE_ENTITY_LEXICON_HPP_

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/parseerr.h>
#include <unicode/regex.h>

#include "scribe/error.hpp"
#include "scribe/normalization.hpp"
#include "scribe/token.hpp"
#include "scribe/unicode.hpp"

namespace scribe {

/// Ordered list of compiled domain-entity patterns. Earlier patterns win
/// when matches overlap. Immutable once built; copies share the compiled
/// patterns, which ICU allows to be used from several threads at once.
class EntityLexicon {
 public:
  struct Pattern {
    std::string id;
    std::string source;  // UTF-8 regular expression
  };

  EntityLexicon() = default;

  explicit EntityLexicon(std::vector<Pattern> patterns)
      : patterns_(std::move(patterns)) {
    compiled_.reserve(patterns_.size());
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      compiled_.push_back(compile(patterns_[i], i));
    }
  }

  /// Patterns numbered by their position in `sources` (0-based).
  static EntityLexicon from_patterns(const std::vector<std::string>& sources) {
    std::vector<Pattern> patterns;
    patterns.reserve(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
      patterns.push_back({std::to_string(i), sources[i]});
    }
    return EntityLexicon(std::move(patterns));
  }

  /// One pattern per line; blank lines and lines starting with '#' are
  /// skipped. The 1-based line number is the pattern id.
  static EntityLexicon parse(std::istream& in) {
    std::vector<Pattern> patterns;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      patterns.push_back(
          {std::to_string(line_no), line.substr(first, last - first + 1)});
    }
    return EntityLexicon(std::move(patterns));
  }

  static EntityLexicon load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("cannot open entity lexicon '" + path.string() + "'");
    }
    return parse(in);
  }

  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const icu::RegexPattern& compiled(std::size_t i) const { return *compiled_[i]; }

 private:
  static std::shared_ptr<const icu::RegexPattern> compile(const Pattern& p,
                                                          std::size_t index) {
    // Patterns see composed text, so compose their literals the same way.
    const std::u32string source = normalize(
        unicode::from_utf8(p.source),
        NormalizationOptions{.canonical_compose = true,
                             .collapse_whitespace = false});
    UParseError parse_error{};
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::RegexPattern> compiled(icu::RegexPattern::compile(
        unicode::to_icu(source), 0, parse_error, status));
    if (U_FAILURE(status) || !compiled) {
      throw LexiconError(p.id, index,
                         std::string(u_errorName(status)) + " at offset " +
                             std::to_string(parse_error.offset));
    }
    return compiled;
  }

  std::vector<Pattern> patterns_;
  std::vector<std::shared_ptr<const icu::RegexPattern>> compiled_;
};

struct EntityMatch {
  Span span;
  std::size_t pattern_index = 0;
  std::string pattern_id;
};

namespace detail {

// UTF-16 offset of every code-point boundary, size n + 1.
inline std::vector<int32_t> utf16_offsets(std::u32string_view text) {
  std::vector<int32_t> offsets(text.size() + 1);
  int32_t off = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    offsets[i] = off;
    off += text[i] > 0xFFFF ? 2 : 1;
  }
  offsets[text.size()] = off;
  return offsets;
}

// Matcher over the whole text whose regions see surrounding context for
// lookaround and \b, and whose ^/$ anchor at the true text ends.
inline std::unique_ptr<icu::RegexMatcher> make_matcher(
    const icu::RegexPattern& pattern, const icu::UnicodeString& text) {
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::RegexMatcher> m(pattern.matcher(status));
  if (U_FAILURE(status) || !m) {
    throw std::runtime_error(std::string("ICU matcher: ") + u_errorName(status));
  }
  m->reset(text);
  m->useTransparentBounds(true);
  m->useAnchoringBounds(false);
  return m;
}

inline bool matches_exactly(icu::RegexMatcher& m,
                            const std::vector<int32_t>& offsets,
                            std::size_t begin, std::size_t end) {
  UErrorCode status = U_ZERO_ERROR;
  m.region(offsets[begin], offsets[end], status);
  return U_SUCCESS(status) && m.matches(status) && U_SUCCESS(status);
}

}  // namespace detail

/// Finds non-overlapping entity spans. Candidates are taken pattern by
/// pattern in lexicon order; within a pattern, leftmost start first, then the
/// longest extent that does not collide with an already accepted span.
/// Result is sorted by start offset.
inline std::vector<EntityMatch> shield_entities(std::u32string_view text,
                                                const EntityLexicon& lexicon) {
  std::vector<EntityMatch> accepted;
  if (lexicon.empty() || text.empty()) return accepted;

  const icu::UnicodeString u16 = unicode::to_icu(text);
  const std::vector<int32_t> offsets = detail::utf16_offsets(text);
  const std::size_t n = text.size();
  const auto to_code_point = [&](int32_t u16_index) {
    return static_cast<std::size_t>(
        std::lower_bound(offsets.begin(), offsets.end(), u16_index) -
        offsets.begin());
  };

  for (std::size_t k = 0; k < lexicon.size(); ++k) {
    auto m = detail::make_matcher(lexicon.compiled(k), u16);
    std::size_t p = 0;
    while (p < n) {
      UErrorCode status = U_ZERO_ERROR;
      m->region(offsets[p], offsets[n], status);
      if (U_FAILURE(status) || !m->find()) break;
      const std::size_t start = to_code_point(m->start(status));
      if (start >= n) break;

      std::size_t limit = n;
      bool blocked = false;
      for (const EntityMatch& a : accepted) {
        if (start >= a.span.start && start < a.span.end) {
          blocked = true;
          p = a.span.end;
          break;
        }
        if (a.span.start > start) limit = std::min(limit, a.span.start);
      }
      if (blocked) continue;

      std::size_t end = limit;
      while (end > start && !detail::matches_exactly(*m, offsets, start, end)) {
        --end;
      }
      if (end > start) {
        accepted.push_back({{start, end}, k, lexicon.patterns()[k].id});
        p = end;
      } else {
        p = start + 1;
      }
    }
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const EntityMatch& a, const EntityMatch& b) {
              return a.span.start < b.span.start;
            });
  return accepted;
}

}  // namespace scribe

#endif  // SCRIBE_ENTITY_LEXICON_HPP_
