//
// Copyright 2026 The privleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef PRIVLEAK_RECOGNITION_HPP
#define PRIVLEAK_RECOGNITION_HPP

#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "privleak/classifier.hpp"
#include "privleak/corpus.hpp"
#include "privleak/entities.hpp"

namespace privleak {

// Validates a corpus record's spans against its text and returns the message
// with typed spans (origin External). Offsets are checked as Unicode scalar
// positions; a provided surface must equal the text slice exactly. When a
// model is given, gold subclass names must exist under the span's class.
// Throws Error: span_out_of_bounds, surface_mismatch, unknown_label,
// unknown_subclass.
Message ingest_annotations(const CorpusRecord& record,
                           const OntologyModel* model = nullptr);

// Dictionary recognizer over the ontology keywords: scans the token stream
// left to right, longest keyword token sequence wins at each position,
// matches never overlap. Matching is case-insensitive on whole tokens.
class Gazetteer {
 public:
  explicit Gazetteer(const OntologyModel& model);

  std::vector<EntitySpan> recognize(std::string_view text) const;

 private:
  struct Entry {
    std::vector<std::string> tokens;
    EntityClass cls;
  };
  // first token -> candidate keyword sequences, longest first
  std::unordered_map<std::string, std::vector<Entry>> entries_;
};

std::vector<EntitySpan> gazetteer_recognize(std::string_view text,
                                            const OntologyModel& model);

// Message-level privacy rule: a message leaks when its findings contain a
// PERSON entity and at least one substantive (TRAIT/PREF/EVENT) entity.
PrivacyVerdict privacy_verdict(std::span<const Finding> findings);

}  // namespace privleak

#endif  // PRIVLEAK_RECOGNITION_HPP
