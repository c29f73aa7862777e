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

#ifndef SCRIBE_ERROR_HPP_
#define SCRIBE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace scribe {

/// Bad scoring/normalization configuration or an entity pattern that does not
/// compile.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entity pattern compile failure; carries the pattern identifier and its
/// position in the lexicon.
class LexiconError : public ConfigError {
 public:
  LexiconError(std::string pattern_id, std::size_t index,
               const std::string& what)
      : ConfigError("entity pattern '" + pattern_id + "': " + what),
        pattern_id_(std::move(pattern_id)),
        index_(index) {}

  const std::string& pattern_id() const noexcept { return pattern_id_; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::string pattern_id_;
  std::size_t index_;
};

/// Malformed corpus input.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, std::string id, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) +
                           (id.empty() ? std::string() : " (id '" + id + "')") +
                           ": " + what),
        line_(line),
        id_(std::move(id)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& id() const noexcept { return id_; }

 private:
  std::size_t line_;
  std::string id_;
};

}  // namespace scribe

#endif  // SCRIBE_ERROR_HPP_
