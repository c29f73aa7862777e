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

// Batch evaluation front end.
//
// Sample usage:
//   scribe eval --input corpus.jsonl --entities lexicon.txt --out report.json
//   scribe eval --ref ref.txt --hyp hyp.txt --format text --emit-alignments
//
// Exit codes: 0 success, 1 usage or configuration error, 2 malformed input
// under --strict.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "scribe/scribe.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kInputError = 2;

struct EvalArgs {
  std::string input;
  std::string ref;
  std::string hyp;
  std::string entities;
  std::string config;
  std::string out;
  std::string format = "json";
  std::vector<std::string> settings;
  bool normalize_delimiters = false;
  bool emit_alignments = false;
  bool strict = false;
  bool macro_average = false;
  bool baseline_raw_whitespace = false;
  unsigned jobs = 1;
};

using ItemSource = std::function<std::optional<scribe::CorpusItem>()>;

int run_eval(const EvalArgs& args) {
  scribe::EvaluationConfig cfg;
  scribe::EntityLexicon lexicon;
  try {
    if (!args.config.empty()) scribe::load_config(args.config, cfg);
    if (args.normalize_delimiters) cfg.normalization.normalize_delimiters = true;
    if (args.macro_average) cfg.macro_average = true;
    if (args.baseline_raw_whitespace) cfg.baseline_raw_whitespace = true;
    for (const std::string& s : args.settings) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) {
        throw scribe::ConfigError("--set expects key=value, got '" + s + "'");
      }
      scribe::apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
    cfg.scoring.validate();
    if (!args.entities.empty()) lexicon = scribe::EntityLexicon::load(args.entities);
  } catch (const scribe::ConfigError& e) {
    std::cerr << "scribe: " << e.what() << "\n";
    return kUsageError;
  }

  const bool two_file = !args.ref.empty() || !args.hyp.empty();
  if (two_file == !args.input.empty() ||
      (two_file && (args.ref.empty() || args.hyp.empty()))) {
    std::cerr << "scribe: give either --input or both --ref and --hyp\n";
    return kUsageError;
  }

  std::vector<std::unique_ptr<std::ifstream>> files;
  const auto open = [&](const std::string& path) -> std::ifstream* {
    files.push_back(std::make_unique<std::ifstream>(path));
    return *files.back() ? files.back().get() : nullptr;
  };
  ItemSource next;
  std::unique_ptr<scribe::JsonlCorpusReader> jsonl;
  std::unique_ptr<scribe::ParallelCorpusReader> parallel;
  if (two_file) {
    std::ifstream* ref = open(args.ref);
    std::ifstream* hyp = open(args.hyp);
    if (!ref || !hyp) {
      std::cerr << "scribe: cannot open '" << (!ref ? args.ref : args.hyp) << "'\n";
      return kUsageError;
    }
    parallel = std::make_unique<scribe::ParallelCorpusReader>(*ref, *hyp);
    next = [&] { return parallel->next(); };
  } else {
    std::ifstream* in = open(args.input);
    if (!in) {
      std::cerr << "scribe: cannot open '" << args.input << "'\n";
      return kUsageError;
    }
    jsonl = std::make_unique<scribe::JsonlCorpusReader>(*in);
    next = [&] { return jsonl->next(); };
  }

  std::ofstream out_file;
  if (!args.out.empty()) {
    out_file.open(args.out, std::ios::binary);
    if (!out_file) {
      std::cerr << "scribe: cannot write '" << args.out << "'\n";
      return kUsageError;
    }
  }
  std::ostream& out = args.out.empty() ? std::cout : out_file;
  const scribe::ReportFormat format = args.format == "text"
                                          ? scribe::ReportFormat::text
                                          : scribe::ReportFormat::json;
  scribe::ReportWriter writer(out, format, args.emit_alignments, cfg.macro_average);
  scribe::CorpusSummary summary;
  writer.begin(cfg);

  // Utterances are evaluated in bounded batches: memory stays proportional
  // to the batch, and records are emitted in input order.
  const std::size_t batch_size = 64 * std::max(1u, args.jobs);
  std::vector<scribe::CorpusItem> batch;
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (batch.size() < batch_size) {
      std::optional<scribe::CorpusItem> item = next();
      if (!item) {
        exhausted = true;
        break;
      }
      if (const auto* err = std::get_if<scribe::InputError>(&*item)) {
        std::cerr << "scribe: " << err->what() << "\n";
        if (args.strict) return kInputError;
      }
      batch.push_back(std::move(*item));
    }

    std::vector<scribe::UtterancePair> pairs;
    for (const auto& item : batch) {
      if (const auto* p = std::get_if<scribe::UtterancePair>(&item)) pairs.push_back(*p);
    }
    std::vector<scribe::UtteranceRecord> records =
        scribe::evaluate_batch(pairs, lexicon, cfg, args.jobs);
    std::size_t k = 0;
    for (const auto& item : batch) {
      scribe::UtteranceRecord rec;
      if (const auto* err = std::get_if<scribe::InputError>(&item)) {
        const std::string id =
            err->id().empty() ? "line:" + std::to_string(err->line()) : err->id();
        rec = scribe::UtteranceRecord::failure(id, err->what());
      } else {
        rec = std::move(records[k++]);
      }
      summary.add(rec);
      writer.utterance(rec);
    }
  }
  writer.finish(summary);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categorical, sandhi-aware evaluation of rich ASR transcripts"};
  app.set_version_flag("--version", std::string(scribe::kVersion));
  app.require_subcommand(1);

  EvalArgs args;
  CLI::App* eval = app.add_subcommand("eval", "Score a reference/hypothesis corpus");
  eval->add_option("--input", args.input, "JSONL corpus with id/reference/hypothesis");
  eval->add_option("--ref", args.ref, "Reference text file, one utterance per line");
  eval->add_option("--hyp", args.hyp, "Hypothesis text file, line-aligned with --ref");
  eval->add_option("--entities", args.entities, "Entity lexicon, one regex per line");
  eval->add_option("--config", args.config, "Scoring/normalization config file");
  eval->add_option("--set", args.settings, "Override one config key (key=value)");
  eval->add_option("--out", args.out, "Report path (default: stdout)");
  eval->add_option("--format", args.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  eval->add_option("--jobs", args.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  eval->add_flag("--normalize-delimiters", args.normalize_delimiters,
                 "Canonicalize date and number delimiters");
  eval->add_flag("--emit-alignments", args.emit_alignments,
                 "Include full alignment op lists");
  eval->add_flag("--strict", args.strict, "Abort on the first malformed input line");
  eval->add_flag("--macro-average", args.macro_average,
                 "Average per-utterance rates instead of pooling counts");
  eval->add_flag("--baseline-raw-whitespace", args.baseline_raw_whitespace,
                 "Baseline WER over plain whitespace words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }
  return run_eval(args);
}
