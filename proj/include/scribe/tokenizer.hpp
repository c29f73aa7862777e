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

#ifndef SCRIBE_TOKENIZER_HPP_
#define SCRIBE_TOKENIZER_HPP_

// Typed tokenization of normalized text.
//
//  1. Entity spans from the lexicon become single domain_entity tokens,
//     whitespace and punctuation inside them included.
//  2. The rest is split on whitespace.
//  3. Punctuation marks are split off one mark per token, except a
//     . , / - : between two digits (22.05.2023, 1,500) and a hyphen between
//     two letters (ice-cream), which stay inside the word.
//  4. A word with any digit is a numeral (302A too), otherwise a lexeme.

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

#include "scribe/entity_lexicon.hpp"
#include "scribe/normalization.hpp"
#include "scribe/token.hpp"
#include "scribe/unicode.hpp"

namespace scribe {

namespace detail {

inline bool is_bound_punctuation(std::u32string_view word, std::size_t i) {
  if (i == 0 || i + 1 >= word.size()) return false;
  const char32_t c = word[i];
  const char32_t before = word[i - 1];
  const char32_t after = word[i + 1];
  if (is_number_delimiter(c) && unicode::is_digit(before) &&
      unicode::is_digit(after)) {
    return true;
  }
  return unicode::is_hyphen(c) && unicode::is_letter_or_mark(before) &&
         unicode::is_letter_or_mark(after);
}

inline TokenCategory classify_word(std::u32string_view word) {
  return std::ranges::any_of(word, unicode::is_digit) ? TokenCategory::numeral
                                                      : TokenCategory::lexeme;
}

// Splits one whitespace-free chunk starting at `offset` in the source.
inline void split_chunk(std::u32string_view chunk, std::size_t offset,
                        std::vector<Token>& out) {
  std::size_t word_start = 0;
  const auto flush_word = [&](std::size_t end) {
    if (end > word_start) {
      const std::u32string_view word = chunk.substr(word_start, end - word_start);
      out.push_back({std::u32string(word), classify_word(word),
                     {offset + word_start, offset + end}});
    }
  };
  for (std::size_t i = 0; i < chunk.size(); ++i) {
    if (!unicode::is_punctuation(chunk[i]) || is_bound_punctuation(chunk, i)) {
      continue;
    }
    flush_word(i);
    out.push_back({std::u32string(1, chunk[i]), TokenCategory::punctuation,
                   {offset + i, offset + i + 1}});
    word_start = i + 1;
  }
  flush_word(chunk.size());
}

inline void split_plain(std::u32string_view text, std::size_t begin,
                        std::size_t end, std::vector<Token>& out) {
  std::size_t i = begin;
  while (i < end) {
    while (i < end && unicode::is_whitespace(text[i])) ++i;
    const std::size_t chunk_start = i;
    while (i < end && !unicode::is_whitespace(text[i])) ++i;
    if (i > chunk_start) {
      split_chunk(text.substr(chunk_start, i - chunk_start), chunk_start, out);
    }
  }
}

}  // namespace detail

/// `text` must already be normalized; spans index into it.
inline std::vector<Token> tokenize(std::u32string_view text,
                                   const EntityLexicon& lexicon = {}) {
  std::vector<Token> tokens;
  std::size_t cursor = 0;
  for (const EntityMatch& entity : shield_entities(text, lexicon)) {
    detail::split_plain(text, cursor, entity.span.start, tokens);
    tokens.push_back(
        {std::u32string(text.substr(entity.span.start, entity.span.size())),
         TokenCategory::domain_entity, entity.span});
    cursor = entity.span.end;
  }
  detail::split_plain(text, cursor, text.size(), tokens);
  return tokens;
}

/// Space-joined token texts, the form the reconstruction property compares
/// against collapsed-whitespace input.
inline std::u32string reconstruct(std::u32string_view source,
                                  const std::vector<Token>& tokens) {
  std::u32string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) {
      const Span gap{tokens[i - 1].span.end, tokens[i].span.start};
      if (std::ranges::any_of(source.substr(gap.start, gap.size()),
                              unicode::is_whitespace)) {
        out.push_back(U' ');
      }
    }
    out += tokens[i].text;
  }
  return out;
}

}  // namespace scribe

#endif  // SCRIBE_TOKENIZER_HPP_
