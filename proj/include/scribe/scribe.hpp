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

#ifndef SCRIBE_SCRIBE_HPP_
#define SCRIBE_SCRIBE_HPP_

#include "scribe/aggregation.hpp"
#include "scribe/alignment.hpp"
#include "scribe/baseline.hpp"
#include "scribe/config.hpp"
#include "scribe/corpus_io.hpp"
#include "scribe/edit_distance.hpp"
#include "scribe/entity_lexicon.hpp"
#include "scribe/error.hpp"
#include "scribe/evaluation.hpp"
#include "scribe/normalization.hpp"
#include "scribe/report.hpp"
#include "scribe/token.hpp"
#include "scribe/tokenizer.hpp"
#include "scribe/unicode.hpp"
#include "scribe/version.hpp"

#endif  // SCRIBE_SCRIBE_HPP_
