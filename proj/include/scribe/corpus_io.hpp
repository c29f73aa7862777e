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

#ifndef SCRIBE_CORPUS_IO_HPP_
#define SCRIBE_CORPUS_IO_HPP_

// Corpus readers. Both pull one utterance at a time so a corpus never has to
// fit in memory.
//
//   JSONL:      {"id": "...", "reference": "...", "hypothesis": "..."}
//   two-file:   line N of the reference file pairs with line N of the
//               hypothesis file; the id is the line number.

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>

#include "json.hpp"
#include "scribe/error.hpp"
#include "scribe/evaluation.hpp"

namespace scribe {

/// One input item: a pair, or the parse error for that line.
using CorpusItem = std::variant<UtterancePair, InputError>;

class JsonlCorpusReader {
 public:
  explicit JsonlCorpusReader(std::istream& in) : in_(in) {}

  /// Next non-blank line, or nullopt at end of input.
  std::optional<CorpusItem> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      return parse(line);
    }
    return std::nullopt;
  }

  std::size_t line() const { return line_no_; }

 private:
  CorpusItem parse(const std::string& line) {
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      return InputError(line_no_, "", std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) {
      return InputError(line_no_, "", "record is not a JSON object");
    }
    std::string id;
    if (const auto it = record.find("id"); it != record.end() && it->is_string()) {
      id = it->get<std::string>();
    } else {
      return InputError(line_no_, "", "missing string field 'id'");
    }
    UtterancePair pair{id, {}, {}};
    for (const auto& [field, target] :
         {std::pair{"reference", &pair.reference},
          std::pair{"hypothesis", &pair.hypothesis}}) {
      const auto it = record.find(field);
      if (it == record.end() || !it->is_string()) {
        return InputError(line_no_, id,
                          std::string("missing string field '") + field + "'");
      }
      *target = it->get<std::string>();
    }
    if (!seen_.insert(id).second) {
      return InputError(line_no_, id, "duplicate id");
    }
    return pair;
  }

  std::istream& in_;
  std::size_t line_no_ = 0;
  std::unordered_set<std::string> seen_;
};

class ParallelCorpusReader {
 public:
  ParallelCorpusReader(std::istream& reference, std::istream& hypothesis)
      : ref_(reference), hyp_(hypothesis) {}

  std::optional<CorpusItem> next() {
    if (done_) return std::nullopt;
    std::string r;
    std::string h;
    const bool has_ref = static_cast<bool>(std::getline(ref_, r));
    const bool has_hyp = static_cast<bool>(std::getline(hyp_, h));
    if (!has_ref && !has_hyp) {
      done_ = true;
      return std::nullopt;
    }
    ++line_no_;
    const std::string id = std::to_string(line_no_);
    if (has_ref != has_hyp) {
      done_ = true;
      return InputError(line_no_, id,
                        has_ref ? "hypothesis file ended before reference file"
                                : "reference file ended before hypothesis file");
    }
    if (!r.empty() && r.back() == '\r') r.pop_back();
    if (!h.empty() && h.back() == '\r') h.pop_back();
    return UtterancePair{id, std::move(r), std::move(h)};
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& ref_;
  std::istream& hyp_;
  std::size_t line_no_ = 0;
  bool done_ = false;
};

}  // namespace scribe

#endif  // SCRIBE_CORPUS_IO_HPP_
