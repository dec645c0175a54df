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

#include "privleak/reporting.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "privleak/error.hpp"

namespace privleak {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_metric(const MetricValue& metric) {
  if (metric.undefined) {
    return "0.0000*";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", metric.value);
  return buf;
}

ordered_json metric_json(const MetricValue& metric) {
  return ordered_json{{"value", metric.value}, {"undefined", metric.undefined}};
}

ordered_json finding_json(const Finding& finding) {
  ordered_json doc{
      {"start", finding.span.start},
      {"end", finding.span.end},
      {"surface", finding.span.surface},
      {"class", std::string(to_string(finding.span.label))},
      {"origin", std::string(to_string(finding.span.origin))},
      {"status", std::string(to_string(finding.decision.status))},
  };
  if (finding.decision.status == DecisionStatus::Classified) {
    doc["subclass"] = finding.decision.subclass;
    doc["winning_term"] = finding.decision.winning_term;
    doc["winning_index"] = finding.decision.winning_index;
    doc["score"] = finding.decision.winning_score;
  } else {
    doc["diagnostic"] = finding.decision.diagnostic;
  }
  doc["contributing_tokens"] = finding.decision.scores.contributing_tokens;
  doc["skipped_tokens"] = finding.decision.scores.skipped_tokens;
  return doc;
}

SpanOrigin origin_from(const std::string& name) {
  if (name == "gazetteer") {
    return SpanOrigin::Gazetteer;
  }
  if (name == "gold") {
    return SpanOrigin::Gold;
  }
  return SpanOrigin::External;
}

}  // namespace

void write_results(std::ostream& out, std::span<const MessageResult> results) {
  for (const MessageResult& result : results) {
    ordered_json doc{{"schema", kResultsSchema}, {"id", result.id}};
    if (result.error) {
      doc["error"] = *result.error;
    } else {
      doc["leaking"] = result.verdict.leaking;
      ordered_json findings = ordered_json::array();
      for (const Finding& finding : result.findings) {
        findings.push_back(finding_json(finding));
      }
      doc["findings"] = std::move(findings);
    }
    out << doc.dump() << '\n';
  }
}

std::vector<MessageResult> read_results(std::istream& in) {
  std::vector<MessageResult> results;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const auto fail = [&](const std::string& what) -> Error {
      return Error(errc::malformed_results,
                   "results line " + std::to_string(line_no) + ": " + what)
          .at_line(line_no);
    };
    ordered_json doc;
    try {
      doc = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw fail(std::string("invalid JSON (") + e.what() + ")");
    }
    if (!doc.is_object() || !doc.contains("schema") ||
        doc["schema"] != kResultsSchema) {
      throw fail(std::string("expected schema ") + kResultsSchema);
    }
    if (!doc.contains("id") || !doc["id"].is_string()) {
      throw fail("missing 'id'");
    }

    MessageResult result;
    result.id = doc["id"].get<std::string>();
    if (doc.contains("error")) {
      result.error = doc["error"].get<std::string>();
      results.push_back(std::move(result));
      continue;
    }
    result.verdict.leaking =
        doc.contains("leaking") && doc["leaking"].get<bool>();
    if (doc.contains("findings")) {
      for (const auto& entry : doc["findings"]) {
        Finding finding;
        finding.span.start = entry.at("start").get<std::size_t>();
        finding.span.end = entry.at("end").get<std::size_t>();
        finding.span.surface = entry.value("surface", std::string{});
        const std::optional<EntityClass> cls =
            entity_class_from(entry.at("class").get<std::string>());
        if (!cls) {
          throw fail("unknown entity class in finding");
        }
        finding.span.label = *cls;
        finding.span.origin = origin_from(entry.value("origin", "external"));
        const std::string status = entry.at("status").get<std::string>();
        if (status == "classified") {
          finding.decision.status = DecisionStatus::Classified;
          finding.decision.subclass = entry.at("subclass").get<std::string>();
          finding.decision.winning_term =
              entry.value("winning_term", std::string{});
          finding.decision.winning_index = entry.value("winning_index", 0u);
          finding.decision.winning_score = entry.value("score", 0.0);
        } else {
          finding.decision.status = DecisionStatus::Unclassifiable;
          finding.decision.diagnostic =
              entry.value("diagnostic", std::string{});
        }
        finding.decision.cls = *cls;
        result.findings.push_back(std::move(finding));
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

std::vector<MessageResult> read_results_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::io_error, "cannot open results file: " + path);
  }
  return read_results(in);
}

void write_evaluation(std::ostream& out, const EvaluationReport& report) {
  ordered_json doc{{"schema", kEvaluationSchema}};
  doc["total_gold_spans"] = report.total_gold;
  doc["matched_spans"] = report.matched;
  doc["correct"] = report.correct;
  doc["unmatched_gold"] = report.unmatched_gold;
  doc["unmatched_predicted"] = report.unmatched_predicted;
  doc["gold_class_only"] = report.gold_class_only;
  doc["accuracy"] = metric_json(report.accuracy);
  doc["coupled_accuracy"] = metric_json(report.coupled_accuracy);

  ordered_json per_subclass = ordered_json::array();
  for (const auto& [key, metrics] : report.per_subclass) {
    per_subclass.push_back(ordered_json{
        {"class", std::string(to_string(key.cls))},
        {"subclass", key.name},
        {"support", metrics.support},
        {"tp", metrics.tp},
        {"fp", metrics.fp},
        {"fn", metrics.fn},
        {"precision", metric_json(metrics.precision)},
        {"recall", metric_json(metrics.recall)},
        {"f1", metric_json(metrics.f1)},
    });
  }
  doc["per_subclass"] = std::move(per_subclass);

  ordered_json confusion = ordered_json::array();
  for (const auto& [cell, count] : report.confusion) {
    confusion.push_back(ordered_json{
        {"gold_class", std::string(to_string(cell.first.cls))},
        {"gold", cell.first.name},
        {"predicted", cell.second},
        {"count", count},
    });
  }
  doc["confusion"] = std::move(confusion);
  out << doc.dump(2) << '\n';
}

void write_distribution(std::ostream& out, const DistributionReport& report) {
  ordered_json doc{{"schema", kDistributionSchema}};
  doc["total_findings"] = report.total;
  ordered_json rows = ordered_json::array();
  for (const DistributionReport::Row& row : report.rows) {
    ordered_json entry{
        {"class", std::string(to_string(row.cls))},
        {"subclass", row.subclass},
        {"count", row.count},
    };
    if (report.total > 0) {
      entry["percent"] = row.percent;
    }
    rows.push_back(std::move(entry));
  }
  doc["per_subclass"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void print_results_summary(std::ostream& out,
                           std::span<const MessageResult> results) {
  std::size_t leaking = 0;
  std::size_t findings = 0;
  std::size_t unclassifiable = 0;
  std::size_t errors = 0;
  for (const MessageResult& result : results) {
    if (result.error) {
      ++errors;
      continue;
    }
    if (result.verdict.leaking) {
      ++leaking;
    }
    findings += result.findings.size();
    for (const Finding& finding : result.findings) {
      if (finding.decision.status == DecisionStatus::Unclassifiable) {
        ++unclassifiable;
      }
    }
  }
  out << "messages:        " << results.size() << "\n"
      << "leaking:         " << leaking << "\n"
      << "findings:        " << findings << "\n"
      << "unclassifiable:  " << unclassifiable << "\n"
      << "message errors:  " << errors << "\n";
}

void print_evaluation(std::ostream& out, const EvaluationReport& report) {
  out << "class      subclass              support  P        R        F1\n";
  out << "---------- --------------------- -------- -------- -------- --------\n";
  for (const auto& [key, metrics] : report.per_subclass) {
    out << std::left << std::setw(11) << to_string(key.cls) << std::setw(22)
        << key.name << std::setw(9) << metrics.support << std::setw(9)
        << format_metric(metrics.precision) << std::setw(9)
        << format_metric(metrics.recall) << std::setw(9)
        << format_metric(metrics.f1) << "\n";
  }
  out << "\ngold spans: " << report.total_gold << " (matched " << report.matched
      << ", unmatched " << report.unmatched_gold << ", class-only "
      << report.gold_class_only << ")\n"
      << "stray predictions: " << report.unmatched_predicted << "\n"
      << "accuracy (matched spans): " << format_metric(report.accuracy) << "\n"
      << "accuracy (all gold):      " << format_metric(report.coupled_accuracy)
      << "\n"
      << "(* marks metrics with an empty denominator)\n";
}

void print_distribution(std::ostream& out, const DistributionReport& report) {
  if (report.total == 0) {
    out << "no classified non-PERSON findings\n";
    return;
  }
  out << "class      subclass              count    percent\n";
  out << "---------- --------------------- -------- --------\n";
  char buf[32];
  for (const DistributionReport::Row& row : report.rows) {
    std::snprintf(buf, sizeof(buf), "%.2f%%", row.percent);
    out << std::left << std::setw(11) << to_string(row.cls) << std::setw(22)
        << row.subclass << std::setw(9) << row.count << buf << "\n";
  }
  out << "total findings: " << report.total << "\n";
}

void print_coverage(std::ostream& out, const CoverageReport& report) {
  out << "class      subclass              in-vocab  total  fraction\n";
  out << "---------- --------------------- --------- ------ --------\n";
  char buf[32];
  for (const CoverageReport::SubclassCoverage& row : report.per_subclass) {
    std::snprintf(buf, sizeof(buf), "%.3f", row.fraction);
    out << std::left << std::setw(11) << to_string(row.cls) << std::setw(22)
        << row.subclass << std::setw(10) << row.in_vocab << std::setw(7)
        << row.total << buf << "\n";
  }
  if (report.oov_terms.empty()) {
    out << "all keywords are in vocabulary\n";
  } else {
    out << "out-of-vocabulary keywords:\n";
    for (const CoverageReport::OovTerm& term : report.oov_terms) {
      out << "  " << to_string(term.cls) << " / " << term.subclass << " / "
          << term.keyword << "\n";
    }
  }
}

void print_keywords(std::ostream& out, const KeywordCandidateList& list) {
  for (const EntityClass cls : kAllEntityClasses) {
    const auto& ranked = list.for_class(cls);
    out << to_string(cls) << ":\n";
    if (ranked.empty()) {
      out << "  (no candidates)\n";
      continue;
    }
    for (const auto& [token, count] : ranked) {
      out << "  " << std::left << std::setw(24) << token << count << "\n";
    }
  }
}

}  // namespace privleak
