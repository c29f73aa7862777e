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

#ifndef SCRIBE_TOKEN_HPP_
#define SCRIBE_TOKEN_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace scribe {

enum class TokenCategory : std::size_t {
  lexeme = 0,
  numeral = 1,
  punctuation = 2,
  domain_entity = 3,
};

inline constexpr std::size_t kCategoryCount = 4;

inline constexpr std::array<TokenCategory, kCategoryCount> kAllCategories = {
    TokenCategory::lexeme, TokenCategory::numeral, TokenCategory::punctuation,
    TokenCategory::domain_entity};

constexpr std::string_view to_string(TokenCategory c) {
  switch (c) {
    case TokenCategory::lexeme: return "lexeme";
    case TokenCategory::numeral: return "numeral";
    case TokenCategory::punctuation: return "punctuation";
    case TokenCategory::domain_entity: return "domain_entity";
  }
  return "unknown";
}

inline std::optional<TokenCategory> category_from_string(std::string_view s) {
  for (const TokenCategory c : kAllCategories) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

/// Fixed-size map keyed by TokenCategory.
template <typename T>
struct CategoryMap {
  std::array<T, kCategoryCount> values{};

  constexpr T& operator[](TokenCategory c) {
    return values[static_cast<std::size_t>(c)];
  }
  constexpr const T& operator[](TokenCategory c) const {
    return values[static_cast<std::size_t>(c)];
  }

  friend bool operator==(const CategoryMap&, const CategoryMap&) = default;
};

/// Half-open code-point range into the normalized source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  constexpr std::size_t size() const { return end - start; }
  constexpr bool overlaps(const Span& o) const {
    return start < o.end && o.start < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::u32string text;
  TokenCategory category = TokenCategory::lexeme;
  Span span;

  friend bool operator==(const Token&, const Token&) = default;
};

}  // namespace scribe

#endif  // SCRIBE_TOKEN_HPP_
