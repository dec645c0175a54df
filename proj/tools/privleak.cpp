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

// privleak: batch privacy-leak recognition, classification and reporting for
// short social-media messages.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "privleak/corpus.hpp"
#include "privleak/embeddings.hpp"
#include "privleak/error.hpp"
#include "privleak/ontology.hpp"
#include "privleak/pipeline.hpp"
#include "privleak/recognition.hpp"
#include "privleak/reporting.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct GlobalOptions {
  bool strict = false;
  bool quiet = false;
};

privleak::OntologyModel load_model(const std::string& path) {
  if (path.empty()) {
    return privleak::OntologyModel::defaults();
  }
  return privleak::OntologyModel::parse_file(path);
}

void report_warnings(const privleak::CorpusLoadResult& loaded,
                     const GlobalOptions& global) {
  if (global.quiet) {
    return;
  }
  for (const std::string& warning : loaded.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
}

void warn_oov_keywords(const privleak::OntologyModel& model,
                       const privleak::EmbeddingTable& table,
                       const GlobalOptions& global) {
  if (global.quiet) {
    return;
  }
  const privleak::CoverageReport coverage =
      privleak::vocabulary_coverage(model, table);
  if (!coverage.oov_terms.empty()) {
    std::cerr << "warning: " << coverage.oov_terms.size()
              << " ontology keyword(s) have no vector in " << table.source_id()
              << "; they are excluded from classification (run `privleak "
                 "coverage` for the list)\n";
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw privleak::Error(privleak::errc::io_error,
                          "cannot open output file: " + path);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "privacy-leak entity classification over short social-media messages"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_flag("--strict", global.strict,
               "treat malformed corpus lines as fatal");
  app.add_flag("--quiet", global.quiet, "suppress tables and warnings");

  // classify
  auto* classify = app.add_subcommand(
      "classify", "classify a corpus and write per-message results");
  std::string classify_corpus;
  std::string classify_embeddings;
  std::string classify_ontology;
  std::string classify_recognizer = "external";
  std::string classify_out;
  classify->add_option("--corpus", classify_corpus, "corpus JSONL file")
      ->required();
  classify->add_option("--embeddings", classify_embeddings,
                       "embedding text file")
      ->required();
  classify->add_option("--ontology", classify_ontology,
                       "ontology config (default: built-in)");
  classify
      ->add_option("--recognizer", classify_recognizer,
                   "span source: external|gazetteer")
      ->check(CLI::IsMember({"external", "gazetteer"}));
  classify->add_option("--out", classify_out, "results JSONL output file")
      ->required();

  // evaluate
  auto* evaluate = app.add_subcommand(
      "evaluate", "classify annotated spans and score them against gold");
  std::string eval_corpus;
  std::string eval_embeddings;
  std::string eval_ontology;
  std::string eval_report;
  evaluate->add_option("--corpus", eval_corpus, "gold-annotated corpus JSONL")
      ->required();
  evaluate->add_option("--embeddings", eval_embeddings, "embedding text file")
      ->required();
  evaluate->add_option("--ontology", eval_ontology,
                       "ontology config (default: built-in)");
  evaluate->add_option("--report", eval_report, "evaluation report JSON file")
      ->required();

  // report
  auto* report = app.add_subcommand(
      "report", "leak-type distribution from a results file");
  std::string report_results;
  std::string report_out;
  std::string report_ontology;
  report->add_option("--results", report_results, "results JSONL file")
      ->required();
  report->add_option("--out", report_out, "distribution JSON output file")
      ->required();
  report->add_option("--ontology", report_ontology,
                     "ontology config (default: built-in)");

  // keywords
  auto* keywords = app.add_subcommand(
      "keywords", "rank keyword candidates from annotated entity values");
  std::string keywords_corpus;
  std::size_t keywords_top_k = 10;
  keywords->add_option("--corpus", keywords_corpus, "corpus JSONL file")
      ->required();
  keywords->add_option("--top-k", keywords_top_k, "candidates per class")
      ->check(CLI::PositiveNumber);

  // coverage
  auto* coverage = app.add_subcommand(
      "coverage", "check ontology keywords against an embedding vocabulary");
  std::string coverage_ontology;
  std::string coverage_embeddings;
  coverage->add_option("--ontology", coverage_ontology,
                       "ontology config (default: built-in)");
  coverage->add_option("--embeddings", coverage_embeddings,
                       "embedding text file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) {
      const privleak::OntologyModel model = load_model(classify_ontology);
      const privleak::EmbeddingTable table =
          privleak::EmbeddingTable::parse_file(classify_embeddings);
      const privleak::CorpusLoadResult loaded = privleak::load_corpus_file(
          classify_corpus, {.strict = global.strict, .model = &model});
      report_warnings(loaded, global);
      warn_oov_keywords(model, table, global);

      const auto mode = classify_recognizer == "gazetteer"
                            ? privleak::RecognizerMode::Gazetteer
                            : privleak::RecognizerMode::ExternalAnnotations;
      const std::vector<privleak::MessageResult> results =
          privleak::run_classification(loaded.records, model, table, mode);

      std::ofstream out = open_output(classify_out);
      privleak::write_results(out, results);
      if (!global.quiet) {
        privleak::print_results_summary(std::cout, results);
      }
    } else if (evaluate->parsed()) {
      const privleak::OntologyModel model = load_model(eval_ontology);
      const privleak::EmbeddingTable table =
          privleak::EmbeddingTable::parse_file(eval_embeddings);
      const privleak::CorpusLoadResult loaded = privleak::load_corpus_file(
          eval_corpus, {.strict = global.strict, .model = &model});
      report_warnings(loaded, global);
      warn_oov_keywords(model, table, global);

      const std::vector<privleak::MessageResult> results =
          privleak::run_classification(
              loaded.records, model, table,
              privleak::RecognizerMode::ExternalAnnotations);
      const privleak::EvaluationReport evaluation =
          privleak::evaluate(results, loaded.records, model);

      std::ofstream out = open_output(eval_report);
      privleak::write_evaluation(out, evaluation);
      if (!global.quiet) {
        privleak::print_evaluation(std::cout, evaluation);
      }
    } else if (report->parsed()) {
      const privleak::OntologyModel model = load_model(report_ontology);
      const std::vector<privleak::MessageResult> results =
          privleak::read_results_file(report_results);
      const privleak::DistributionReport dist =
          privleak::distribution(results, model);

      std::ofstream out = open_output(report_out);
      privleak::write_distribution(out, dist);
      if (!global.quiet) {
        privleak::print_distribution(std::cout, dist);
      }
    } else if (keywords->parsed()) {
      const privleak::CorpusLoadResult loaded = privleak::load_corpus_file(
          keywords_corpus, {.strict = global.strict});
      report_warnings(loaded, global);

      std::vector<std::pair<privleak::EntityClass, std::string>> values;
      for (const privleak::CorpusRecord& record : loaded.records) {
        const privleak::Message message = privleak::ingest_annotations(record);
        for (const privleak::EntitySpan& span : message.annotations) {
          values.emplace_back(span.label, span.surface);
        }
      }
      const privleak::KeywordCandidateList list =
          privleak::extract_keywords(values, keywords_top_k);
      privleak::print_keywords(std::cout, list);
    } else if (coverage->parsed()) {
      const privleak::OntologyModel model = load_model(coverage_ontology);
      const privleak::EmbeddingTable table =
          privleak::EmbeddingTable::parse_file(coverage_embeddings);
      const privleak::CoverageReport cov =
          privleak::vocabulary_coverage(model, table);
      privleak::print_coverage(std::cout, cov);
    }
  } catch (const privleak::Error& e) {
    std::cerr << "error [" << privleak::errc_name(e.code()) << "]: " << e.what()
              << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
