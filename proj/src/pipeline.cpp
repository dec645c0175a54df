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

#include "privleak/pipeline.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "privleak/error.hpp"
#include "privleak/text.hpp"

namespace privleak {

std::vector<MessageResult> run_classification(
    std::span<const CorpusRecord> corpus, const OntologyModel& model,
    const EmbeddingTable& table, RecognizerMode mode) {
  const TermVectorSet term_vectors(model, table);
  const Gazetteer gazetteer(model);

  std::vector<MessageResult> results;
  results.reserve(corpus.size());
  for (const CorpusRecord& record : corpus) {
    MessageResult result;
    result.id = record.id;
    try {
      std::vector<EntitySpan> spans;
      if (mode == RecognizerMode::ExternalAnnotations) {
        spans = ingest_annotations(record, &model).annotations;
      } else {
        spans = gazetteer.recognize(record.text);
      }
      for (EntitySpan& span : spans) {
        const TokenizedEntity entity = tokenize_entity(span);
        SubclassDecision decision =
            classify_entity(entity, model, table, term_vectors);
        result.findings.push_back(
            Finding{std::move(span), std::move(decision)});
      }
      result.verdict = privacy_verdict(result.findings);
    } catch (const Error& e) {
      // One bad message never poisons the batch.
      result.findings.clear();
      result.verdict = PrivacyVerdict{};
      result.error = std::string(errc_name(e.code())) + ": " + e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

namespace {

MetricValue ratio(std::size_t numerator, std::size_t denominator) {
  if (denominator == 0) {
    return MetricValue{0.0, true};
  }
  return MetricValue{static_cast<double>(numerator) /
                         static_cast<double>(denominator),
                     false};
}

struct SpanKeyHash {
  std::size_t operator()(const std::tuple<std::size_t, std::size_t, int>& k) const {
    const auto [a, b, c] = k;
    std::size_t h = a * 1000003u + b;
    return h * 31u + static_cast<std::size_t>(c);
  }
};

}  // namespace

EvaluationReport evaluate(std::span<const MessageResult> results,
                          std::span<const CorpusRecord> gold,
                          const OntologyModel& model) {
  EvaluationReport report;

  // Every subclass of the model appears in the report, even with no traffic.
  for (const EntityClass cls : kAllEntityClasses) {
    for (const Subclass& sub : model.subclasses(cls)) {
      report.per_subclass.emplace(SubclassKey{cls, sub.name}, SubclassMetrics{});
    }
  }

  std::unordered_map<std::string, const MessageResult*> by_id;
  for (const MessageResult& result : results) {
    by_id.emplace(result.id, &result);
  }

  using SpanKey = std::tuple<std::size_t, std::size_t, int>;
  for (const CorpusRecord& record : gold) {
    const auto it = by_id.find(record.id);
    const MessageResult* result = it == by_id.end() ? nullptr : it->second;

    std::unordered_map<SpanKey, const Finding*, SpanKeyHash> predicted;
    if (result != nullptr) {
      for (const Finding& finding : result->findings) {
        predicted.emplace(SpanKey{finding.span.start, finding.span.end,
                                  static_cast<int>(finding.span.label)},
                          &finding);
      }
    }

    for (const RawSpan& raw : record.spans) {
      const std::optional<EntityClass> cls = entity_class_from(raw.label);
      if (!cls) {
        continue;  // malformed gold is a load-time concern
      }
      if (!raw.subclass) {
        ++report.gold_class_only;
        // Recognition-level match only; nothing to score, nothing unmatched.
        predicted.erase(SpanKey{static_cast<std::size_t>(raw.start),
                                static_cast<std::size_t>(raw.end),
                                static_cast<int>(*cls)});
        continue;
      }
      ++report.total_gold;
      const SubclassKey gold_key{*cls, *raw.subclass};
      SubclassMetrics& gold_metrics = report.per_subclass[gold_key];
      ++gold_metrics.support;

      const auto match =
          predicted.find(SpanKey{static_cast<std::size_t>(raw.start),
                                 static_cast<std::size_t>(raw.end),
                                 static_cast<int>(*cls)});
      if (match == predicted.end()) {
        ++report.unmatched_gold;
        ++gold_metrics.fn;  // a miss for recall
        continue;
      }
      ++report.matched;
      const SubclassDecision& decision = match->second->decision;
      predicted.erase(match);

      if (decision.status == DecisionStatus::Classified) {
        ++report.confusion[{gold_key, decision.subclass}];
        if (decision.subclass == *raw.subclass) {
          ++report.correct;
          ++gold_metrics.tp;
        } else {
          ++gold_metrics.fn;
          ++report.per_subclass[SubclassKey{*cls, decision.subclass}].fp;
        }
      } else {
        ++report.confusion[{gold_key, kUnclassifiableLabel}];
        ++gold_metrics.fn;
      }
    }
    // Predictions left over had no gold counterpart (recognition noise).
    report.unmatched_predicted += predicted.size();
  }

  // Results for messages absent from the gold corpus are all noise.
  std::unordered_set<std::string> gold_ids;
  for (const CorpusRecord& record : gold) {
    gold_ids.insert(record.id);
  }
  for (const MessageResult& result : results) {
    if (!gold_ids.contains(result.id)) {
      report.unmatched_predicted += result.findings.size();
    }
  }

  for (auto& [key, metrics] : report.per_subclass) {
    metrics.precision = ratio(metrics.tp, metrics.tp + metrics.fp);
    metrics.recall = ratio(metrics.tp, metrics.tp + metrics.fn);
    const double p = metrics.precision.value;
    const double r = metrics.recall.value;
    if (p + r == 0.0) {
      metrics.f1 = MetricValue{0.0, true};
    } else {
      metrics.f1 = MetricValue{2.0 * p * r / (p + r), false};
    }
  }
  report.accuracy = ratio(report.correct, report.matched);
  report.coupled_accuracy = ratio(report.correct, report.total_gold);
  return report;
}

DistributionReport distribution(std::span<const MessageResult> results,
                                const OntologyModel& model) {
  DistributionReport report;
  std::map<SubclassKey, std::size_t> counts;

  for (const MessageResult& result : results) {
    for (const Finding& finding : result.findings) {
      if (finding.span.label == EntityClass::Person ||
          finding.decision.status != DecisionStatus::Classified) {
        continue;
      }
      ++counts[SubclassKey{finding.span.label, finding.decision.subclass}];
      ++report.total;
    }
  }

  // Model order first so the eight built-in rows always show, then any
  // subclass that appears in the results but not in the model.
  for (const EntityClass cls : kAllEntityClasses) {
    if (cls == EntityClass::Person) {
      continue;
    }
    for (const Subclass& sub : model.subclasses(cls)) {
      const SubclassKey key{cls, sub.name};
      const auto it = counts.find(key);
      const std::size_t count = it == counts.end() ? 0 : it->second;
      if (it != counts.end()) {
        counts.erase(it);
      }
      report.rows.push_back(DistributionReport::Row{cls, sub.name, count, 0.0});
    }
  }
  for (const auto& [key, count] : counts) {
    report.rows.push_back(DistributionReport::Row{key.cls, key.name, count, 0.0});
  }

  if (report.total > 0) {
    for (DistributionReport::Row& row : report.rows) {
      row.percent = 100.0 * static_cast<double>(row.count) /
                    static_cast<double>(report.total);
    }
  }
  return report;
}

KeywordCandidateList extract_keywords(
    std::span<const std::pair<EntityClass, std::string>> values,
    std::size_t top_k) {
  std::array<std::map<std::string, std::size_t>, 4> counts;
  for (const auto& [cls, surface] : values) {
    for (const std::string& token : text::tokenize(surface)) {
      if (text::codepoint_length(token) < 2) {
        continue;
      }
      ++counts[static_cast<std::size_t>(cls)][token];
    }
  }

  KeywordCandidateList list;
  for (const EntityClass cls : kAllEntityClasses) {
    auto& ranked = list.per_class[static_cast<std::size_t>(cls)];
    for (const auto& [token, count] : counts[static_cast<std::size_t>(cls)]) {
      ranked.emplace_back(token, count);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) {
        return a.second > b.second;
      }
      return a.first < b.first;
    });
    if (ranked.size() > top_k) {
      ranked.resize(top_k);
    }
  }
  return list;
}

}  // namespace privleak
