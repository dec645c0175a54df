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

#ifndef PRIVLEAK_CORPUS_HPP
#define PRIVLEAK_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace privleak {

class OntologyModel;

// One annotated span as it appears on disk, before semantic validation.
// The wire shape is [start, end, class] with optional subclass (or null) and
// optional surface elements.
struct RawSpan {
  std::int64_t start = 0;
  std::int64_t end = 0;
  std::string label;
  std::optional<std::string> subclass;
  std::optional<std::string> surface;

  bool operator==(const RawSpan&) const = default;
};

// One corpus line: {"id": ..., "text": ..., "spans": [...]}. Gold subclass
// null means the annotation carries only the entity class.
struct CorpusRecord {
  std::string id;
  std::string text;
  std::vector<RawSpan> spans;

  bool operator==(const CorpusRecord&) const = default;
};

struct CorpusLoadOptions {
  bool strict = false;  // strict: malformed lines abort; lenient: skip + warn
  // When set, gold subclass names are validated against this model.
  const OntologyModel* model = nullptr;
};

struct CorpusLoadResult {
  std::vector<CorpusRecord> records;
  std::vector<std::string> warnings;  // one entry per skipped line
};

// Line-delimited JSON corpus reader. Always throws on duplicate ids and
// malformed lines in strict mode; in lenient mode offending lines are
// skipped and reported in `warnings`.
CorpusLoadResult load_corpus(std::istream& in, const CorpusLoadOptions& options = {});
CorpusLoadResult load_corpus_file(const std::string& path,
                                  const CorpusLoadOptions& options = {});

}  // namespace privleak

#endif  // PRIVLEAK_CORPUS_HPP
