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

#include "privleak/corpus.hpp"

#include <fstream>
#include <istream>
#include <unordered_set>

#include <json.hpp>

#include "privleak/error.hpp"
#include "privleak/recognition.hpp"

namespace privleak {

namespace {

using nlohmann::json;

RawSpan parse_span(const json& element, std::size_t line_no) {
  const auto fail = [&](const std::string& what) -> Error {
    return Error(errc::malformed_record,
                 "line " + std::to_string(line_no) + ": " + what)
        .at_line(line_no);
  };
  if (!element.is_array() || element.size() < 3 || element.size() > 5) {
    throw fail("span must be [start, end, class, subclass?, surface?]");
  }
  if (!element[0].is_number_integer() || !element[1].is_number_integer()) {
    throw fail("span offsets must be integers");
  }
  if (!element[2].is_string()) {
    throw fail("span class must be a string");
  }
  RawSpan span;
  span.start = element[0].get<std::int64_t>();
  span.end = element[1].get<std::int64_t>();
  span.label = element[2].get<std::string>();
  if (element.size() >= 4 && !element[3].is_null()) {
    if (!element[3].is_string()) {
      throw fail("span subclass must be a string or null");
    }
    span.subclass = element[3].get<std::string>();
  }
  if (element.size() == 5) {
    if (!element[4].is_string()) {
      throw fail("span surface must be a string");
    }
    span.surface = element[4].get<std::string>();
  }
  return span;
}

CorpusRecord parse_record(const std::string& line, std::size_t line_no) {
  const auto fail = [&](const std::string& what) -> Error {
    return Error(errc::malformed_record,
                 "line " + std::to_string(line_no) + ": " + what)
        .at_line(line_no);
  };

  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::exception& e) {
    throw fail(std::string("invalid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) {
    throw fail("record must be a JSON object");
  }
  if (!doc.contains("id") || !doc["id"].is_string() ||
      doc["id"].get<std::string>().empty()) {
    throw fail("missing or empty 'id'");
  }
  if (!doc.contains("text") || !doc["text"].is_string() ||
      doc["text"].get<std::string>().empty()) {
    throw fail("missing or empty 'text'");
  }

  CorpusRecord record;
  record.id = doc["id"].get<std::string>();
  record.text = doc["text"].get<std::string>();
  if (doc.contains("spans")) {
    if (!doc["spans"].is_array()) {
      throw fail("'spans' must be an array");
    }
    for (const json& element : doc["spans"]) {
      record.spans.push_back(parse_span(element, line_no));
    }
  }
  return record;
}

}  // namespace

CorpusLoadResult load_corpus(std::istream& in,
                             const CorpusLoadOptions& options) {
  CorpusLoadResult result;
  std::unordered_set<std::string> seen_ids;
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
    try {
      CorpusRecord record = parse_record(line, line_no);
      if (seen_ids.contains(record.id)) {
        throw Error(errc::duplicate_id, "line " + std::to_string(line_no) +
                                            ": duplicate id '" + record.id +
                                            "'")
            .at_line(line_no);
      }
      // Semantic validation of the spans against the text (and model, if any).
      ingest_annotations(record, options.model);
      seen_ids.insert(record.id);
      result.records.push_back(std::move(record));
    } catch (const Error& e) {
      if (options.strict) {
        if (e.line() != 0) {
          throw;
        }
        throw Error(e.code(),
                    "line " + std::to_string(line_no) + ": " + e.what())
            .at_line(line_no);
      }
      result.warnings.push_back("line " + std::to_string(line_no) +
                                " skipped [" + errc_name(e.code()) +
                                "]: " + e.what());
    }
  }
  return result;
}

CorpusLoadResult load_corpus_file(const std::string& path,
                                  const CorpusLoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::io_error, "cannot open corpus file: " + path);
  }
  return load_corpus(in, options);
}

}  // namespace privleak
