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

#ifndef SCRIBE_UNICODE_HPP_
#define SCRIBE_UNICODE_HPP_

// Code-point level helpers. All text inside the library is held as UTF-32
// (std::u32string) so that offsets and distances are in code points.

#include <string>
#include <string_view>

#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace scribe::unicode {

inline std::u32string from_utf8(std::string_view utf8) {
  const icu::UnicodeString u16 = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  std::u32string out(static_cast<std::size_t>(u16.countChar32()), U'\0');
  UErrorCode status = U_ZERO_ERROR;
  const int32_t n = u16.toUTF32(reinterpret_cast<UChar32*>(out.data()),
                                static_cast<int32_t>(out.size()), status);
  out.resize(static_cast<std::size_t>(n));
  return out;
}

inline std::string to_utf8(std::u32string_view text) {
  const icu::UnicodeString u16 = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
  std::string out;
  u16.toUTF8String(out);
  return out;
}

inline icu::UnicodeString to_icu(std::u32string_view text) {
  return icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
}

inline std::u32string from_icu(const icu::UnicodeString& u16) {
  std::u32string out(static_cast<std::size_t>(u16.countChar32()), U'\0');
  UErrorCode status = U_ZERO_ERROR;
  const int32_t n = u16.toUTF32(reinterpret_cast<UChar32*>(out.data()),
                                static_cast<int32_t>(out.size()), status);
  out.resize(static_cast<std::size_t>(n));
  return out;
}

inline constexpr char32_t kDanda = U'\u0964';
inline constexpr char32_t kDoubleDanda = U'\u0965';
inline constexpr char32_t kZeroWidthNonJoiner = U'\u200C';
inline constexpr char32_t kZeroWidthJoiner = U'\u200D';

// ASCII, Devanagari, Kannada and Malayalam decimal digits.
constexpr bool is_digit(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= 0x0966 && c <= 0x096F) ||
         (c >= 0x0CE6 && c <= 0x0CEF) || (c >= 0x0D66 && c <= 0x0D6F);
}

inline bool is_whitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0;
}

// General category P* plus the two Indic sentence marks.
inline bool is_punctuation(char32_t c) {
  if (c == kDanda || c == kDoubleDanda) return true;
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & U_GC_P_MASK) != 0;
}

inline bool is_combining_mark(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & U_GC_M_MASK) != 0;
}

// Letters and the dependent signs (matras, virama, nukta) that attach to them.
inline bool is_letter_or_mark(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) &
          (U_GC_L_MASK | U_GC_M_MASK)) != 0;
}

constexpr bool is_zero_width_joiner(char32_t c) {
  return c == kZeroWidthNonJoiner || c == kZeroWidthJoiner;
}

constexpr bool is_hyphen(char32_t c) {
  return c == U'-' || c == U'\u2010' || c == U'\u2011';
}

}  // namespace scribe::unicode

#endif  // SCRIBE_UNICODE_HPP_
