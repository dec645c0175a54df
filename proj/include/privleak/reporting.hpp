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

#ifndef PRIVLEAK_REPORTING_HPP
#define PRIVLEAK_REPORTING_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "privleak/ontology.hpp"
#include "privleak/pipeline.hpp"

namespace privleak {

// Schema ids carried by every structured output so downstream readers can
// reject files from a different format generation.
inline constexpr const char* kResultsSchema = "privleak.results.v1";
inline constexpr const char* kEvaluationSchema = "privleak.evaluation.v1";
inline constexpr const char* kDistributionSchema = "privleak.distribution.v1";

// Classification results as line-delimited JSON, one message per line.
void write_results(std::ostream& out, std::span<const MessageResult> results);

// Reads a results file back. Carries enough of each finding (span, class,
// status, subclass, score) to rebuild distribution reports. Throws
// Error(errc::malformed_results) on schema or shape problems.
std::vector<MessageResult> read_results(std::istream& in);
std::vector<MessageResult> read_results_file(const std::string& path);

void write_evaluation(std::ostream& out, const EvaluationReport& report);
void write_distribution(std::ostream& out, const DistributionReport& report);

// Human-readable tables for the CLI.
void print_results_summary(std::ostream& out,
                           std::span<const MessageResult> results);
void print_evaluation(std::ostream& out, const EvaluationReport& report);
void print_distribution(std::ostream& out, const DistributionReport& report);
void print_coverage(std::ostream& out, const CoverageReport& report);
void print_keywords(std::ostream& out, const KeywordCandidateList& list);

}  // namespace privleak

#endif  // PRIVLEAK_REPORTING_HPP
