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

// Scores one Malayalam utterance whose word boundaries moved because of
// sandhi, and prints the alignment next to the plain WER.

#include <cstdio>

#include "scribe/scribe.hpp"

int main() {
  const scribe::UtterancePair pair{"golden", "ഇന്ന് അല്ലെങ്കിൽ നാളെയാകട്ടെ",
                                   "ഇന്നല്ലെങ്കിൽ നാളെ ആകട്ടെ"};
  const scribe::UtteranceRecord rec = scribe::evaluate_pair(pair, {});

  for (const scribe::AlignmentOp& op : rec.alignment.ops) {
    std::printf("%-13s %s => %s  (%.6f)\n",
                std::string(scribe::to_string(op.kind)).c_str(),
                scribe::report::joined_text(rec.ref_tokens, op.ref_indices).c_str(),
                scribe::report::joined_text(rec.hyp_tokens, op.hyp_indices).c_str(),
                op.score);
  }
  std::printf("WER     %.6f\n", rec.baseline.wer());
  std::printf("ER_lex  %.6f\n", rec.errors.er_lex());
  std::printf("gap     %.6f\n", *scribe::inflation_gap(rec.errors, rec.baseline));
  return 0;
}
