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

#ifndef SCRIBE_CONFIG_HPP_
#define SCRIBE_CONFIG_HPP_

// Evaluation configuration and its text file form, a small TOML subset:
//
//   # comment
//   [scoring]
//   alpha = 4.0
//   near_miss_threshold = 2
//   [scoring.gap_penalty]
//   punctuation = -2.5
//   [normalization]
//   normalize_delimiters = true
//   [evaluation]
//   macro_average = false
//
// Keys may also be written unsectioned or dotted (gap_penalty.numeral = -2).
// Key names are the ScoringConfig / NormalizationOptions field names.

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <string>
#include <string_view>

#include "scribe/alignment.hpp"
#include "scribe/error.hpp"
#include "scribe/normalization.hpp"
#include "scribe/token.hpp"

namespace scribe {

struct EvaluationConfig {
  ScoringConfig scoring;
  NormalizationOptions normalization;
  // Baseline WER over raw whitespace words instead of the typed tokens.
  bool baseline_raw_whitespace = false;
  // Corpus rates as the mean of utterance rates rather than pooled counts.
  bool macro_average = false;

  friend bool operator==(const EvaluationConfig&,
                         const EvaluationConfig&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view key, std::string_view v) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("'" + std::string(key) + "': expected a number, got '" +
                      std::string(v) + "'");
  }
  return out;
}

inline std::size_t parse_count(std::string_view key, std::string_view v) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("'" + std::string(key) +
                      "': expected a non-negative integer, got '" +
                      std::string(v) + "'");
  }
  return out;
}

inline bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError("'" + std::string(key) + "': expected true or false, got '" +
                    std::string(v) + "'");
}

}  // namespace detail

/// Sets one field by name. `key` may carry a section prefix
/// ("scoring.alpha", "scoring.gap_penalty.lexeme"). Unknown keys throw.
inline void apply_setting(EvaluationConfig& cfg, std::string_view key,
                          std::string_view raw_value) {
  std::string_view value = detail::trim(raw_value);
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
    value = value.substr(1, value.size() - 2);
  }
  for (std::string_view prefix : {"scoring.", "normalization.", "evaluation."}) {
    if (key.starts_with(prefix)) {
      key.remove_prefix(prefix.size());
      break;
    }
  }

  ScoringConfig& s = cfg.scoring;
  NormalizationOptions& n = cfg.normalization;
  if (key == "alpha") s.alpha = detail::parse_double(key, value);
  else if (key == "beta") s.beta = detail::parse_double(key, value);
  else if (key == "delta_base") s.delta_base = detail::parse_double(key, value);
  else if (key == "delta_slope") s.delta_slope = detail::parse_double(key, value);
  else if (key == "sigma") s.sigma = detail::parse_double(key, value);
  else if (key == "sandhi_boundary_weight")
    s.sandhi_boundary_weight = detail::parse_double(key, value);
  else if (key == "near_miss_threshold")
    s.near_miss_threshold = detail::parse_count(key, value);
  else if (key == "sandhi_boundary_threshold")
    s.sandhi_boundary_threshold = detail::parse_count(key, value);
  else if (key == "canonical_compose") n.canonical_compose = detail::parse_bool(key, value);
  else if (key == "collapse_whitespace") n.collapse_whitespace = detail::parse_bool(key, value);
  else if (key == "normalize_delimiters") n.normalize_delimiters = detail::parse_bool(key, value);
  else if (key == "latin_case_fold") n.latin_case_fold = detail::parse_bool(key, value);
  else if (key == "strip_zero_width") n.strip_zero_width = detail::parse_bool(key, value);
  else if (key == "baseline_raw_whitespace")
    cfg.baseline_raw_whitespace = detail::parse_bool(key, value);
  else if (key == "macro_average") cfg.macro_average = detail::parse_bool(key, value);
  else if (key.starts_with("gap_penalty.")) {
    const std::string_view name = key.substr(std::string_view("gap_penalty.").size());
    const auto category = category_from_string(name);
    if (!category) {
      throw ConfigError("unknown token category '" + std::string(name) + "'");
    }
    s.gap_penalty[*category] = detail::parse_double(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

/// Builds a validated config from name/value pairs over the defaults.
inline EvaluationConfig config_from_map(
    const std::map<std::string, std::string>& settings) {
  EvaluationConfig cfg;
  for (const auto& [key, value] : settings) apply_setting(cfg, key, value);
  cfg.scoring.validate();
  return cfg;
}

/// Applies a config file on top of `cfg`. Does not validate, so that command
/// line overrides can still follow.
inline void parse_config(std::istream& in, EvaluationConfig& cfg) {
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = detail::trim(text);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') {
        throw ConfigError("config line " + std::to_string(line_no) +
                          ": unterminated section header");
      }
      section = std::string(detail::trim(text.substr(1, text.size() - 2)));
      if (section == "scoring.gap_penalty") section = "gap_penalty";
      if (section != "scoring" && section != "normalization" &&
          section != "evaluation" && section != "gap_penalty") {
        throw ConfigError("config line " + std::to_string(line_no) +
                          ": unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string key(detail::trim(text.substr(0, eq)));
    const std::string_view value = text.substr(eq + 1);
    const std::string qualified =
        section == "gap_penalty" ? "gap_penalty." + key : key;
    try {
      apply_setting(cfg, qualified, value);
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
}

inline void load_config(const std::filesystem::path& path,
                        EvaluationConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  parse_config(in, cfg);
}

}  // namespace scribe

#endif  // SCRIBE_CONFIG_HPP_
