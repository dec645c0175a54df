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

#ifndef PRIVLEAK_PIPELINE_HPP
#define PRIVLEAK_PIPELINE_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "privleak/classifier.hpp"
#include "privleak/corpus.hpp"
#include "privleak/entities.hpp"
#include "privleak/recognition.hpp"

namespace privleak {

enum class RecognizerMode { ExternalAnnotations, Gazetteer };

// Outcome for one message. A message that failed validation carries `error`
// and nothing else; failures never affect neighbouring messages.
struct MessageResult {
  std::string id;
  std::vector<Finding> findings;
  PrivacyVerdict verdict;
  std::optional<std::string> error;
};

// Classifies every recognized span of every record, in input order.
std::vector<MessageResult> run_classification(
    std::span<const CorpusRecord> corpus, const OntologyModel& model,
    const EmbeddingTable& table, RecognizerMode mode);

struct SubclassKey {
  EntityClass cls;
  std::string name;
  auto operator<=>(const SubclassKey&) const = default;
};

// A ratio whose denominator may be empty; such metrics report 0 with the
// undefined flag set instead of NaN.
struct MetricValue {
  double value = 0.0;
  bool undefined = false;
};

struct SubclassMetrics {
  std::size_t support = 0;  // gold spans labeled with this subclass
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  MetricValue precision;
  MetricValue recall;
  MetricValue f1;
};

// Predicted side of a confusion cell: a subclass name, or this marker when
// the classifier abstained.
inline constexpr const char* kUnclassifiableLabel = "(unclassifiable)";

struct EvaluationReport {
  std::map<SubclassKey, SubclassMetrics> per_subclass;
  std::map<std::pair<SubclassKey, std::string>, std::size_t> confusion;
  std::size_t total_gold = 0;       // gold spans carrying a subclass label
  std::size_t matched = 0;          // of those, spans with an aligned prediction
  std::size_t correct = 0;
  std::size_t unmatched_gold = 0;
  std::size_t unmatched_predicted = 0;
  std::size_t gold_class_only = 0;  // gold spans without a subclass (not evaluated)
  // Classification accuracy over matched spans, and the coupled figure that
  // also charges recognition misses (unmatched gold counts as wrong).
  MetricValue accuracy;
  MetricValue coupled_accuracy;
};

// Aligns predictions to gold spans by exact (start, end, class) and scores
// subclass assignment. Recognition errors surface as unmatched counts, not as
// confusion cells.
EvaluationReport evaluate(std::span<const MessageResult> results,
                          std::span<const CorpusRecord> gold,
                          const OntologyModel& model);

// Share of classified non-PERSON findings per subclass. PERSON findings and
// abstentions are excluded; percentages sum to 100 when total > 0.
struct DistributionReport {
  struct Row {
    EntityClass cls;
    std::string subclass;
    std::size_t count = 0;
    double percent = 0.0;
  };
  std::vector<Row> rows;
  std::size_t total = 0;
};

DistributionReport distribution(std::span<const MessageResult> results,
                                const OntologyModel& model);

// Term-frequency keyword candidates per entity class, for ontology curation.
// Tokens shorter than two characters are dropped; ties order lexically.
struct KeywordCandidateList {
  std::array<std::vector<std::pair<std::string, std::size_t>>, 4> per_class;

  const std::vector<std::pair<std::string, std::size_t>>& for_class(
      EntityClass cls) const {
    return per_class[static_cast<std::size_t>(cls)];
  }
};

KeywordCandidateList extract_keywords(
    std::span<const std::pair<EntityClass, std::string>> values,
    std::size_t top_k);

}  // namespace privleak

#endif  // PRIVLEAK_PIPELINE_HPP
