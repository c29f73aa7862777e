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

#ifndef SCRIBE_REPORT_HPP_
#define SCRIBE_REPORT_HPP_

// Report serialization. The JSON report is written incrementally: header and
// config first, then one line per utterance as records arrive, then the
// corpus record. Rates are printed with exactly six fractional digits.
//
//   {
//   "version": "...",
//   "config": {...},
//   "utterances": [
//   {...},
//   {...}
//   ],
//   "corpus": {...}
//   }

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scribe/aggregation.hpp"
#include "scribe/alignment.hpp"
#include "scribe/baseline.hpp"
#include "scribe/config.hpp"
#include "scribe/evaluation.hpp"
#include "scribe/unicode.hpp"
#include "scribe/version.hpp"

namespace scribe {

enum class ReportFormat { json, text };

namespace report {

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

inline std::string fixed6(const std::optional<double>& v) {
  return v ? fixed6(*v) : "null";
}

inline std::string quote(std::string_view s) {
  return nlohmann::json(std::string(s))
      .dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

inline std::string quote(std::u32string_view s) { return quote(unicode::to_utf8(s)); }

// Shortest round-trip form, for echoing configuration values.
inline std::string exact(double v) { return nlohmann::json(v).dump(); }

inline std::string boolean(bool b) { return b ? "true" : "false"; }

/// Builds one JSON object from already-serialized member values.
class Object {
 public:
  Object& add(std::string_view key, std::string_view raw) {
    if (!body_.empty()) body_ += ',';
    body_ += quote(key);
    body_ += ':';
    body_ += raw;
    return *this;
  }
  Object& add(std::string_view key, std::size_t n) {
    return add(key, std::to_string(n));
  }
  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

template <typename T, typename F>
std::string array(const std::vector<T>& items, F&& render) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += render(items[i]);
  }
  return out + "]";
}

inline std::string rate_vector(const CategoryMap<double>& rates) {
  return Object()
      .add("er_lex", fixed6(rates[TokenCategory::lexeme]))
      .add("er_punc", fixed6(rates[TokenCategory::punctuation]))
      .add("er_num", fixed6(rates[TokenCategory::numeral]))
      .add("er_ent", fixed6(rates[TokenCategory::domain_entity]))
      .str();
}

inline CategoryMap<double> rates_of(const ErrorVector& e) {
  CategoryMap<double> out;
  for (const TokenCategory c : kAllCategories) out[c] = e.rate(c);
  return out;
}

inline std::string counts(const CategoryCounts& counts) {
  Object o;
  for (const TokenCategory c : kAllCategories) {
    const CategoryTally& t = counts[c];
    o.add(to_string(c), Object()
                            .add("total", t.total)
                            .add("sub", t.sub)
                            .add("ins", t.ins)
                            .add("del", t.del)
                            .add("near_miss_subs", t.near_miss_subs)
                            .str());
  }
  return o.str();
}

inline std::string sandhi(const CategoryCounts& counts) {
  return Object()
      .add("merges", counts.sandhi_merges)
      .add("splits", counts.sandhi_splits)
      .str();
}

inline std::string baseline(const BaselineResult& b, std::optional<double> wer,
                            std::optional<double> cer) {
  return Object()
      .add("status", quote(to_string(b.words.status())))
      .add("wer", fixed6(wer))
      .add("sub", b.words.sub)
      .add("ins", b.words.ins)
      .add("del", b.words.del)
      .add("ref_len", b.words.ref_len)
      .add("cer_status", quote(to_string(b.chars.status())))
      .add("cer", fixed6(cer))
      .add("char_edits", b.chars.edits)
      .add("char_ref_len", b.chars.ref_len)
      .str();
}

inline std::optional<double> defined_wer(const BaselineResult& b) {
  if (b.words.status() != RateStatus::ok) return std::nullopt;
  return b.wer();
}

inline std::optional<double> defined_cer(const BaselineResult& b) {
  if (b.chars.status() != RateStatus::ok) return std::nullopt;
  return b.cer();
}

inline std::string token(const Token& t) {
  return Object()
      .add("text", quote(t.text))
      .add("category", quote(to_string(t.category)))
      .add("span", "[" + std::to_string(t.span.start) + "," +
                       std::to_string(t.span.end) + "]")
      .str();
}

inline std::string op(const AlignmentOp& op) {
  const auto indices = [](const std::vector<std::size_t>& v) {
    return array(v, [](std::size_t i) { return std::to_string(i); });
  };
  return Object()
      .add("kind", quote(to_string(op.kind)))
      .add("ref", indices(op.ref_indices))
      .add("hyp", indices(op.hyp_indices))
      .add("score", fixed6(op.score))
      .add("char_distance", op.char_distance)
      .add("near_miss", boolean(op.near_miss))
      .str();
}

inline std::string alignment(const UtteranceRecord& rec) {
  return Object()
      .add("total_score", fixed6(rec.alignment.total_score))
      .add("ref_tokens", array(rec.ref_tokens, token))
      .add("hyp_tokens", array(rec.hyp_tokens, token))
      .add("ops", array(rec.alignment.ops, op))
      .str();
}

inline std::string config(const EvaluationConfig& cfg) {
  const ScoringConfig& s = cfg.scoring;
  Object gaps;
  for (const TokenCategory c : kAllCategories) {
    gaps.add(to_string(c), exact(s.gap_penalty[c]));
  }
  const NormalizationOptions& n = cfg.normalization;
  return Object()
      .add("scoring", Object()
                          .add("alpha", exact(s.alpha))
                          .add("beta", exact(s.beta))
                          .add("delta_base", exact(s.delta_base))
                          .add("delta_slope", exact(s.delta_slope))
                          .add("sigma", exact(s.sigma))
                          .add("sandhi_boundary_weight",
                               exact(s.sandhi_boundary_weight))
                          .add("gap_penalty", gaps.str())
                          .add("near_miss_threshold", s.near_miss_threshold)
                          .add("sandhi_boundary_threshold",
                               s.sandhi_boundary_threshold)
                          .str())
      .add("normalization",
           Object()
               .add("canonical_compose", boolean(n.canonical_compose))
               .add("collapse_whitespace", boolean(n.collapse_whitespace))
               .add("normalize_delimiters", boolean(n.normalize_delimiters))
               .add("latin_case_fold", boolean(n.latin_case_fold))
               .add("strip_zero_width", boolean(n.strip_zero_width))
               .str())
      .add("evaluation",
           Object()
               .add("baseline_raw_whitespace",
                    boolean(cfg.baseline_raw_whitespace))
               .add("macro_average", boolean(cfg.macro_average))
               .str())
      .str();
}

/// One utterance record as a single-line JSON object.
inline std::string utterance(const UtteranceRecord& rec, bool with_alignment) {
  Object o;
  o.add("id", quote(rec.id));
  if (rec.failed) {
    return o.add("status", quote("failed")).add("error", quote(rec.error)).str();
  }
  o.add("status", quote("ok"))
      .add("n_comb", rec.errors.n_comb)
      .add("rate_status", quote(to_string(rec.errors.status)))
      .add("error_vector", rate_vector(rates_of(rec.errors)))
      .add("counts", counts(rec.counts))
      .add("sandhi", sandhi(rec.counts))
      .add("baseline", baseline(rec.baseline, defined_wer(rec.baseline),
                                defined_cer(rec.baseline)))
      .add("inflation_gap", fixed6(inflation_gap(rec.errors, rec.baseline)));
  if (with_alignment) o.add("alignment", alignment(rec));
  return o.str();
}

/// Corpus-level rates under the configured pooling.
struct CorpusRates {
  std::optional<CategoryMap<double>> rates;
  RateStatus status = RateStatus::empty;
  std::optional<double> wer;
  std::optional<double> cer;
  std::optional<double> inflation_gap;
};

inline CorpusRates corpus_rates(const CorpusSummary& summary, bool macro) {
  CorpusRates out;
  if (macro) {
    out.rates = summary.macro_rates();
    out.status = out.rates ? RateStatus::ok : RateStatus::empty;
    out.wer = summary.macro_wer();
    out.cer = summary.macro_cer();
  } else {
    const ErrorVector pooled = summary.pooled();
    out.status = pooled.status;
    if (summary.evaluated() > 0) out.rates = rates_of(pooled);
    out.wer = defined_wer(summary.baseline);
    out.cer = defined_cer(summary.baseline);
  }
  if (out.status == RateStatus::ok && out.rates && out.wer) {
    out.inflation_gap = *out.wer - (*out.rates)[TokenCategory::lexeme];
  }
  return out;
}

inline std::string corpus(const CorpusSummary& summary, bool macro) {
  const CorpusRates r = corpus_rates(summary, macro);
  const RateStatus status =
      summary.evaluated() == 0 ? RateStatus::empty : r.status;
  return Object()
      .add("utterances", summary.utterances)
      .add("evaluated", summary.evaluated())
      .add("failed", summary.failed)
      .add("pooling", quote(macro ? "macro" : "micro"))
      .add("n_comb", summary.counts.n_comb())
      .add("rate_status", quote(to_string(status)))
      .add("error_vector", r.rates ? rate_vector(*r.rates) : "null")
      .add("counts", counts(summary.counts))
      .add("sandhi", sandhi(summary.counts))
      .add("baseline", baseline(summary.baseline, r.wer, r.cer))
      .add("inflation_gap", fixed6(r.inflation_gap))
      .str();
}

inline std::string cell(const std::optional<double>& v) {
  return v ? fixed6(*v) : std::string("-");
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline std::string text_row(const std::string& label, std::size_t n_comb,
                            const std::optional<CategoryMap<double>>& rates,
                            std::optional<double> wer, std::optional<double> cer,
                            std::optional<double> gap) {
  std::string row = pad(label, 24) + " " + pad(std::to_string(n_comb), 7);
  for (const TokenCategory c :
       {TokenCategory::lexeme, TokenCategory::punctuation,
        TokenCategory::numeral, TokenCategory::domain_entity}) {
    row += " " + pad(rates ? fixed6((*rates)[c]) : "-", 9);
  }
  row += " " + pad(cell(wer), 9) + " " + pad(cell(cer), 9) + " " + cell(gap);
  return row;
}

inline std::string text_header() {
  return pad("id", 24) + " " + pad("n_comb", 7) + " " + pad("ER_lex", 9) + " " +
         pad("ER_punc", 9) + " " + pad("ER_num", 9) + " " + pad("ER_ent", 9) +
         " " + pad("WER", 9) + " " + pad("CER", 9) + " gap";
}

inline std::string joined_text(const std::vector<Token>& tokens,
                               const std::vector<std::size_t>& indices) {
  std::string out;
  for (const std::size_t i : indices) {
    if (!out.empty()) out += ' ';
    out += unicode::to_utf8(tokens[i].text);
  }
  return out.empty() ? "-" : out;
}

}  // namespace report

/// Streams a report to `out` as utterances arrive.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format, bool emit_alignments,
               bool macro_average)
      : out_(out),
        format_(format),
        emit_alignments_(emit_alignments),
        macro_(macro_average) {}

  void begin(const EvaluationConfig& cfg) {
    if (format_ == ReportFormat::json) {
      out_ << "{\n\"version\":" << report::quote(kVersion) << ",\n"
           << "\"config\":" << report::config(cfg) << ",\n"
           << "\"utterances\":[";
    } else {
      out_ << "scribe " << kVersion << "  pooling="
           << (macro_ ? "macro" : "micro") << "  baseline="
           << (cfg.baseline_raw_whitespace ? "whitespace" : "tokens") << "\n"
           << report::text_header() << "\n";
    }
  }

  void utterance(const UtteranceRecord& rec) {
    if (format_ == ReportFormat::json) {
      out_ << (count_ == 0 ? "\n" : ",\n")
           << report::utterance(rec, emit_alignments_);
    } else if (rec.failed) {
      out_ << report::pad(rec.id, 24) << " FAILED: " << rec.error << "\n";
    } else {
      std::optional<CategoryMap<double>> rates;
      if (rec.errors.status != RateStatus::empty) rates = report::rates_of(rec.errors);
      out_ << report::text_row(rec.id, rec.errors.n_comb, rates,
                               report::defined_wer(rec.baseline),
                               report::defined_cer(rec.baseline),
                               inflation_gap(rec.errors, rec.baseline));
      if (rec.errors.status == RateStatus::undefined_denominator) {
        out_ << "  (no reference tokens: raw counts)";
      }
      out_ << "\n";
      if (emit_alignments_) {
        for (const AlignmentOp& op : rec.alignment.ops) {
          out_ << "    " << report::pad(std::string(to_string(op.kind)), 13)
               << " " << report::joined_text(rec.ref_tokens, op.ref_indices)
               << " => " << report::joined_text(rec.hyp_tokens, op.hyp_indices)
               << "  score=" << report::fixed6(op.score);
          if (op.char_distance > 0) out_ << " d=" << op.char_distance;
          if (op.near_miss) out_ << " near_miss";
          out_ << "\n";
        }
      }
    }
    ++count_;
  }

  void finish(const CorpusSummary& summary) {
    if (format_ == ReportFormat::json) {
      out_ << (count_ == 0 ? "],\n" : "\n],\n")
           << "\"corpus\":" << report::corpus(summary, macro_) << "\n}\n";
    } else {
      const report::CorpusRates r = report::corpus_rates(summary, macro_);
      out_ << report::text_row("[corpus]", summary.counts.n_comb(), r.rates,
                               r.wer, r.cer, r.inflation_gap)
           << "\n"
           << summary.utterances << " utterances, " << summary.failed
           << " failed";
      if (summary.evaluated() == 0) out_ << ", no pooled rates";
      out_ << "\n";
    }
    out_.flush();
  }

 private:
  std::ostream& out_;
  ReportFormat format_;
  bool emit_alignments_;
  bool macro_;
  std::size_t count_ = 0;
};

}  // namespace scribe

#endif  // SCRIBE_REPORT_HPP_
