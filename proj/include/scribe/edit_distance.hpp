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

#ifndef SCRIBE_EDIT_DISTANCE_HPP_
#define SCRIBE_EDIT_DISTANCE_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ranges>
#include <string_view>
#include <vector>

namespace scribe {

/// Unit-cost Levenshtein distance between two random-access ranges. Two-row
/// formulation, O(|a|*|b|) time and O(|b|) space.
template <std::ranges::random_access_range A, std::ranges::random_access_range B,
          typename Eq = std::equal_to<>>
std::size_t levenshtein(const A& a, const B& b, Eq eq = {}) {
  const auto n = static_cast<std::size_t>(std::ranges::size(a));
  const auto m = static_cast<std::size_t>(std::ranges::size(b));
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> cur(m + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  auto ai = std::ranges::begin(a);
  for (std::size_t i = 1; i <= n; ++i, ++ai) {
    cur[0] = i;
    auto bj = std::ranges::begin(b);
    for (std::size_t j = 1; j <= m; ++j, ++bj) {
      const std::size_t diag = prev[j - 1] + (eq(*ai, *bj) ? 0 : 1);
      cur[j] = std::min({diag, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

/// Code-point distance; the only distance the scoring functions use.
inline std::size_t code_point_distance(std::u32string_view a,
                                       std::u32string_view b) {
  return levenshtein(a, b);
}

}  // namespace scribe

#endif  // SCRIBE_EDIT_DISTANCE_HPP_
