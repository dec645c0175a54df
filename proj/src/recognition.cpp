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

#include "privleak/recognition.hpp"

#include <algorithm>

#include "privleak/error.hpp"
#include "privleak/text.hpp"

namespace privleak {

std::string_view to_string(SpanOrigin origin) {
  switch (origin) {
    case SpanOrigin::External:
      return "external";
    case SpanOrigin::Gazetteer:
      return "gazetteer";
    case SpanOrigin::Gold:
      return "gold";
  }
  return "?";
}

Message ingest_annotations(const CorpusRecord& record,
                           const OntologyModel* model) {
  Message message{record.id, record.text, {}};
  const std::size_t text_len = text::codepoint_length(record.text);

  for (const RawSpan& raw : record.spans) {
    if (raw.start < 0 || raw.end < 0 ||
        static_cast<std::size_t>(raw.end) > text_len || raw.start >= raw.end) {
      throw Error(errc::span_out_of_bounds,
                  "message '" + record.id + "': span [" +
                      std::to_string(raw.start) + ", " +
                      std::to_string(raw.end) + ") out of bounds for text of " +
                      std::to_string(text_len) + " characters");
    }
    const std::optional<EntityClass> cls = entity_class_from(raw.label);
    if (!cls) {
      throw Error(errc::unknown_label, "message '" + record.id +
                                           "': unknown entity label '" +
                                           raw.label + "'");
    }
    std::string surface =
        text::slice(record.text, static_cast<std::size_t>(raw.start),
                    static_cast<std::size_t>(raw.end));
    if (raw.surface && *raw.surface != surface) {
      throw Error(errc::surface_mismatch,
                  "message '" + record.id + "': span [" +
                      std::to_string(raw.start) + ", " +
                      std::to_string(raw.end) + ") reads '" + surface +
                      "' but the record says '" + *raw.surface + "'");
    }
    if (model != nullptr && raw.subclass &&
        model->find_subclass(*cls, *raw.subclass) == nullptr) {
      throw Error(errc::unknown_subclass,
                  "message '" + record.id + "': subclass '" + *raw.subclass +
                      "' does not exist under " + std::string(to_string(*cls)));
    }
    message.annotations.push_back(
        EntitySpan{static_cast<std::size_t>(raw.start),
                   static_cast<std::size_t>(raw.end), std::move(surface), *cls,
                   SpanOrigin::External});
  }
  return message;
}

Gazetteer::Gazetteer(const OntologyModel& model) {
  for (const EntityClass cls : kAllEntityClasses) {
    for (const KeywordTerm& term : model.terms(cls)) {
      entries_[term.tokens.front()].push_back(Entry{term.tokens, cls});
    }
  }
  // Longest sequence first; insertion order (class then term order) breaks
  // length ties deterministically because stable_sort preserves it.
  for (auto& [first, candidates] : entries_) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Entry& a, const Entry& b) {
                       return a.tokens.size() > b.tokens.size();
                     });
  }
}

std::vector<EntitySpan> Gazetteer::recognize(std::string_view text) const {
  const std::vector<text::LocatedToken> tokens =
      text::tokenize_with_offsets(text);
  const std::vector<std::size_t> offsets = text::codepoint_offsets(text);
  const auto slice = [&](std::size_t a, std::size_t b) {
    return std::string(text.substr(offsets[a], offsets[b] - offsets[a]));
  };
  // Tokens of a multi-token keyword may only be separated by whitespace or
  // hyphens ("years-old", "new york"), never by other punctuation.
  const auto joinable = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = offsets[a]; i < offsets[b]; ++i) {
      const char c = text[i];
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\f' &&
          c != '\v' && c != '-') {
        return false;
      }
    }
    return true;
  };

  std::vector<EntitySpan> spans;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    const auto it = entries_.find(tokens[pos].value);
    if (it == entries_.end()) {
      ++pos;
      continue;
    }
    const Entry* match = nullptr;
    for (const Entry& candidate : it->second) {
      if (pos + candidate.tokens.size() > tokens.size()) {
        continue;
      }
      bool ok = true;
      for (std::size_t k = 1; k < candidate.tokens.size(); ++k) {
        if (tokens[pos + k].value != candidate.tokens[k] ||
            !joinable(tokens[pos + k - 1].end_cp, tokens[pos + k].start_cp)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        match = &candidate;
        break;  // candidates are longest-first
      }
    }
    if (match == nullptr) {
      ++pos;
      continue;
    }
    const std::size_t start = tokens[pos].start_cp;
    const std::size_t end = tokens[pos + match->tokens.size() - 1].end_cp;
    spans.push_back(EntitySpan{start, end, slice(start, end), match->cls,
                               SpanOrigin::Gazetteer});
    pos += match->tokens.size();
  }
  return spans;
}

std::vector<EntitySpan> gazetteer_recognize(std::string_view text,
                                            const OntologyModel& model) {
  return Gazetteer(model).recognize(text);
}

PrivacyVerdict privacy_verdict(std::span<const Finding> findings) {
  PrivacyVerdict verdict;
  bool has_person = false;
  bool has_substantive = false;
  for (const Finding& finding : findings) {
    if (finding.span.label == EntityClass::Person) {
      has_person = true;
    } else {
      has_substantive = true;
    }
    if (finding.decision.status == DecisionStatus::Classified) {
      verdict.reasons.emplace_back(finding.span.label,
                                   finding.decision.subclass);
    }
  }
  verdict.leaking = has_person && has_substantive;
  return verdict;
}

}  // namespace privleak
