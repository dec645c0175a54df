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

#ifndef PRIVLEAK_ONTOLOGY_HPP
#define PRIVLEAK_ONTOLOGY_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace privleak {

class EmbeddingTable;

// The four privacy-related entity classes. The set is closed; anything else
// in input data is an UnknownLabel error.
enum class EntityClass { Person, Trait, Pref, Event };

inline constexpr std::array<EntityClass, 4> kAllEntityClasses = {
    EntityClass::Person, EntityClass::Trait, EntityClass::Pref,
    EntityClass::Event};

std::string_view to_string(EntityClass cls);
std::optional<EntityClass> entity_class_from(std::string_view label);

// One representative keyword attached to a subclass. `index` is the keyword's
// position in its class's flat term list; indices are contiguous from 0 in
// declaration order. Multi-word and hyphenated keywords keep their written
// surface but also carry their split tokens.
struct KeywordTerm {
  std::string surface;
  std::vector<std::string> tokens;
  std::size_t subclass;  // ordinal within the class's subclass list
  std::size_t index;

  bool operator==(const KeywordTerm&) const = default;
};

struct Subclass {
  std::string name;
  EntityClass parent;
  std::size_t first_term;  // terms occupy [first_term, first_term + term_count)
  std::size_t term_count;

  bool operator==(const Subclass&) const = default;
};

// Per-subclass keyword coverage against an embedding table. A term counts as
// in-vocabulary when at least one of its tokens has a vector; it is listed as
// OOV only when every token is missing.
struct CoverageReport {
  struct SubclassCoverage {
    EntityClass cls;
    std::string subclass;
    std::size_t in_vocab;
    std::size_t total;
    double fraction;
  };
  struct OovTerm {
    EntityClass cls;
    std::string subclass;
    std::string keyword;
  };
  std::vector<SubclassCoverage> per_subclass;
  std::vector<OovTerm> oov_terms;
};

// The privacy class/subclass/keyword hierarchy. Immutable after construction;
// safe for concurrent readers.
class OntologyModel {
 public:
  // An empty model; populate through parse() or use defaults().
  OntologyModel() = default;

  // Built-in model: two PERSON subclasses, two TRAIT subclasses, three under
  // PREF and three under EVENT, with their curated keyword lists.
  static const OntologyModel& defaults();

  // Config format: `# comment` lines, `[CLASS Subclass Name]` section headers
  // with CLASS in {PERSON,TRAIT,PREF,EVENT}, then comma-separated keyword
  // lines. File order defines subclass and term order.
  static OntologyModel parse(std::istream& in);
  static OntologyModel parse_string(std::string_view config);
  static OntologyModel parse_file(const std::string& path);

  void serialize(std::ostream& out) const;
  std::string serialize() const;

  const std::vector<Subclass>& subclasses(EntityClass cls) const;
  const std::vector<KeywordTerm>& terms(EntityClass cls) const;

  // Subclass owning term `index` of `cls`; throws errc::index_out_of_range.
  const Subclass& subclass_of(EntityClass cls, std::size_t index) const;

  const Subclass* find_subclass(EntityClass cls, std::string_view name) const;

  std::size_t term_count(EntityClass cls) const { return terms(cls).size(); }

  bool operator==(const OntologyModel& other) const;

 private:
  friend class OntologyBuilder;

  std::array<std::vector<Subclass>, 4> subclasses_;
  std::array<std::vector<KeywordTerm>, 4> terms_;
};

CoverageReport vocabulary_coverage(const OntologyModel& model,
                                   const EmbeddingTable& table);

}  // namespace privleak

#endif  // PRIVLEAK_ONTOLOGY_HPP
