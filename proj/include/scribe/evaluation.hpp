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

#ifndef SCRIBE_EVALUATION_HPP_
#define SCRIBE_EVALUATION_HPP_

// Pair and corpus evaluation: normalize -> tokenize -> align -> aggregate,
// with the 1:1 baseline computed on the side.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "scribe/aggregation.hpp"
#include "scribe/alignment.hpp"
#include "scribe/baseline.hpp"
#include "scribe/config.hpp"
#include "scribe/entity_lexicon.hpp"
#include "scribe/normalization.hpp"
#include "scribe/tokenizer.hpp"
#include "scribe/unicode.hpp"

namespace scribe {

struct UtterancePair {
  std::string id;
  std::string reference;   // UTF-8
  std::string hypothesis;  // UTF-8
};

struct UtteranceRecord {
  std::string id;
  // Input failures are carried as records so the corpus keeps going.
  bool failed = false;
  std::string error;

  std::u32string reference;   // normalized
  std::u32string hypothesis;  // normalized
  std::vector<Token> ref_tokens;
  std::vector<Token> hyp_tokens;
  Alignment alignment;
  CategoryCounts counts;
  ErrorVector errors;
  BaselineResult baseline;

  static UtteranceRecord failure(std::string id, std::string message) {
    UtteranceRecord r;
    r.id = std::move(id);
    r.failed = true;
    r.error = std::move(message);
    return r;
  }
};

/// Baseline WER minus the lexical error rate, when both are defined.
inline std::optional<double> inflation_gap(const ErrorVector& errors,
                                           const BaselineResult& baseline) {
  if (errors.status != RateStatus::ok ||
      baseline.words.status() != RateStatus::ok) {
    return std::nullopt;
  }
  return baseline.wer() - errors.er_lex();
}

inline UtteranceRecord evaluate_pair(const UtterancePair& pair,
                                     const EntityLexicon& lexicon,
                                     const EvaluationConfig& cfg = {}) {
  UtteranceRecord rec;
  rec.id = pair.id;
  rec.reference = normalize(unicode::from_utf8(pair.reference), cfg.normalization);
  rec.hypothesis = normalize(unicode::from_utf8(pair.hypothesis), cfg.normalization);
  rec.ref_tokens = tokenize(rec.reference, lexicon);
  rec.hyp_tokens = tokenize(rec.hypothesis, lexicon);
  rec.alignment = align(rec.ref_tokens, rec.hyp_tokens, cfg.scoring);
  std::tie(rec.errors, rec.counts) =
      aggregate(rec.alignment, rec.ref_tokens, rec.hyp_tokens);
  if (cfg.baseline_raw_whitespace) {
    rec.baseline.words = word_errors(whitespace_words(rec.reference),
                                     whitespace_words(rec.hypothesis));
  } else {
    rec.baseline.words = word_error_rate(rec.ref_tokens, rec.hyp_tokens);
  }
  rec.baseline.chars = char_error_rate(rec.reference, rec.hypothesis);
  return rec;
}

/// Running corpus totals. Pooled (micro) rates come from summed counts, so
/// the result does not depend on the order utterances are added in.
struct CorpusSummary {
  std::size_t utterances = 0;
  std::size_t failed = 0;
  CategoryCounts counts;
  BaselineResult baseline;

  // Macro averaging state: sums of per-utterance rates over utterances whose
  // rate is defined.
  CategoryMap<double> rate_sums;
  std::size_t rate_count = 0;
  double wer_sum = 0.0;
  std::size_t wer_count = 0;
  double cer_sum = 0.0;
  std::size_t cer_count = 0;

  void add(const UtteranceRecord& rec) {
    ++utterances;
    if (rec.failed) {
      ++failed;
      return;
    }
    counts += rec.counts;
    baseline += rec.baseline;
    if (rec.errors.status == RateStatus::ok) {
      for (const TokenCategory c : kAllCategories) rate_sums[c] += rec.errors.rate(c);
      ++rate_count;
    }
    if (rec.baseline.words.status() == RateStatus::ok) {
      wer_sum += rec.baseline.wer();
      ++wer_count;
    }
    if (rec.baseline.chars.status() == RateStatus::ok) {
      cer_sum += rec.baseline.cer();
      ++cer_count;
    }
  }

  std::size_t evaluated() const { return utterances - failed; }

  ErrorVector pooled() const { return error_vector(counts); }

  /// Mean of per-utterance rates; nullopt when no utterance had a defined
  /// rate.
  std::optional<CategoryMap<double>> macro_rates() const {
    if (rate_count == 0) return std::nullopt;
    CategoryMap<double> out;
    for (const TokenCategory c : kAllCategories) {
      out[c] = rate_sums[c] / static_cast<double>(rate_count);
    }
    return out;
  }
  std::optional<double> macro_wer() const {
    if (wer_count == 0) return std::nullopt;
    return wer_sum / static_cast<double>(wer_count);
  }
  std::optional<double> macro_cer() const {
    if (cer_count == 0) return std::nullopt;
    return cer_sum / static_cast<double>(cer_count);
  }
};

/// Evaluates `pairs` on up to `jobs` threads. Results are returned in input
/// order regardless of scheduling.
inline std::vector<UtteranceRecord> evaluate_batch(
    std::span<const UtterancePair> pairs, const EntityLexicon& lexicon,
    const EvaluationConfig& cfg, unsigned jobs = 1) {
  std::vector<UtteranceRecord> out(pairs.size());
  const auto work = [&](std::size_t i) {
    try {
      out[i] = evaluate_pair(pairs[i], lexicon, cfg);
    } catch (const std::exception& e) {
      out[i] = UtteranceRecord::failure(pairs[i].id, e.what());
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(pairs.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) work(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) work(i);
      });
    }
  }
  return out;
}

/// Whole-corpus convenience wrapper: records in input order plus the pooled
/// summary.
inline std::pair<std::vector<UtteranceRecord>, CorpusSummary> evaluate_corpus(
    std::span<const UtterancePair> pairs, const EntityLexicon& lexicon,
    const EvaluationConfig& cfg = {}, unsigned jobs = 1) {
  std::vector<UtteranceRecord> records = evaluate_batch(pairs, lexicon, cfg, jobs);
  CorpusSummary summary;
  for (const UtteranceRecord& r : records) summary.add(r);
  return {std::move(records), std::move(summary)};
}

}  // namespace scribe

#endif  // SCRIBE_EVALUATION_HPP_
