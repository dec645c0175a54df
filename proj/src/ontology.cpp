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

#include "privleak/ontology.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <fstream>

#include "privleak/embeddings.hpp"
#include "privleak/error.hpp"
#include "privleak/text.hpp"

namespace privleak {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

constexpr std::size_t slot(EntityClass cls) {
  return static_cast<std::size_t>(cls);
}

// The curated keyword hierarchy shipped with the tool.
constexpr std::string_view kDefaultConfig = R"(# privleak built-in privacy ontology
[PERSON Individual]
i
[PERSON Third Party]
you, we, they, he, she, classmate, uncle
[TRAIT Individual Identity]
years-old, auckland
[TRAIT Linked Information]
lawyer, female, gay, christian, married, white, disable
[PREF Item]
book, chocolate, keyboard, tea
[PREF Hobby]
cosplay, paint, fishing, dancing, reading
[PREF Specific Person]
girlfriend, teacher
[EVENT Private Event]
eat, shopping, concert, movie, exercise, spa
[EVENT Corporate Event]
wedding, interview, meeting, conference, festival, party, parade, salon
[EVENT Journey]
fly, holiday, travel, island, hotel, airport
)";

}  // namespace

std::string_view to_string(EntityClass cls) {
  switch (cls) {
    case EntityClass::Person:
      return "PERSON";
    case EntityClass::Trait:
      return "TRAIT";
    case EntityClass::Pref:
      return "PREF";
    case EntityClass::Event:
      return "EVENT";
  }
  return "?";
}

std::optional<EntityClass> entity_class_from(std::string_view label) {
  for (const EntityClass cls : kAllEntityClasses) {
    if (label == to_string(cls)) {
      return cls;
    }
  }
  return std::nullopt;
}

// Accumulates sections as the parser walks the file; indices are assigned in
// file order per class.
class OntologyBuilder {
 public:
  void open_subclass(EntityClass cls, std::string name, std::size_t line_no) {
    if (model_.find_subclass(cls, name) != nullptr) {
      throw Error(errc::duplicate_subclass,
                  "line " + std::to_string(line_no) + ": subclass '" + name +
                      "' declared twice under " + std::string(to_string(cls)))
          .at_line(line_no);
    }
    auto& subs = model_.subclasses_[slot(cls)];
    subs.push_back(Subclass{std::move(name), cls,
                            model_.terms_[slot(cls)].size(), 0});
    current_ = {cls, subs.size() - 1};
    have_section_ = true;
  }

  void add_keyword(std::string_view raw, std::size_t line_no) {
    if (!have_section_) {
      throw Error(errc::malformed_ontology,
                  "line " + std::to_string(line_no) +
                      ": keyword list before any [CLASS Subclass] header")
          .at_line(line_no);
    }
    const auto [cls, sub_ord] = current_;
    std::string keyword = text::to_lower(trim(raw));
    if (keyword.empty()) {
      return;
    }
    auto& terms = model_.terms_[slot(cls)];
    for (const KeywordTerm& existing : terms) {
      if (existing.surface == keyword) {
        throw Error(errc::duplicate_keyword,
                    "line " + std::to_string(line_no) + ": keyword '" +
                        keyword + "' appears under both '" +
                        model_.subclasses_[slot(cls)][existing.subclass].name +
                        "' and '" + model_.subclasses_[slot(cls)][sub_ord].name +
                        "' of " + std::string(to_string(cls)))
            .at_line(line_no);
      }
    }
    std::vector<std::string> tokens = text::tokenize(keyword);
    if (tokens.empty()) {
      throw Error(errc::malformed_ontology,
                  "line " + std::to_string(line_no) + ": keyword '" + keyword +
                      "' has no usable tokens")
          .at_line(line_no);
    }
    terms.push_back(
        KeywordTerm{std::move(keyword), std::move(tokens), sub_ord, terms.size()});
    ++model_.subclasses_[slot(cls)][sub_ord].term_count;
  }

  OntologyModel finish() {
    for (const EntityClass cls : kAllEntityClasses) {
      for (const Subclass& sub : model_.subclasses_[slot(cls)]) {
        if (sub.term_count == 0) {
          throw Error(errc::empty_subclass,
                      "subclass '" + sub.name + "' of " +
                          std::string(to_string(cls)) + " has no keywords");
        }
      }
    }
    return std::move(model_);
  }

 private:
  OntologyModel model_;
  std::pair<EntityClass, std::size_t> current_{EntityClass::Person, 0};
  bool have_section_ = false;
};

const OntologyModel& OntologyModel::defaults() {
  static const OntologyModel model = parse_string(kDefaultConfig);
  return model;
}

OntologyModel OntologyModel::parse(std::istream& in) {
  OntologyBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') {
      continue;
    }
    if (stripped.front() == '[') {
      if (stripped.back() != ']') {
        throw Error(errc::malformed_ontology,
                    "line " + std::to_string(line_no) +
                        ": unterminated section header")
            .at_line(line_no);
      }
      const std::string_view inside = trim(stripped.substr(1, stripped.size() - 2));
      const std::size_t space = inside.find(' ');
      const std::string_view class_label =
          space == std::string_view::npos ? inside : inside.substr(0, space);
      const std::string_view sub_name =
          space == std::string_view::npos ? std::string_view{}
                                          : trim(inside.substr(space + 1));
      const std::optional<EntityClass> cls = entity_class_from(class_label);
      if (!cls) {
        throw Error(errc::unknown_class,
                    "line " + std::to_string(line_no) + ": unknown class '" +
                        std::string(class_label) + "'")
            .at_line(line_no);
      }
      if (sub_name.empty()) {
        throw Error(errc::empty_subclass,
                    "line " + std::to_string(line_no) +
                        ": section header has no subclass name")
            .at_line(line_no);
      }
      builder.open_subclass(*cls, std::string(sub_name), line_no);
      continue;
    }
    // comma-separated keyword list
    std::size_t pos = 0;
    const std::string_view body = stripped;
    while (pos <= body.size()) {
      const std::size_t comma = body.find(',', pos);
      const std::string_view item = comma == std::string_view::npos
                                        ? body.substr(pos)
                                        : body.substr(pos, comma - pos);
      builder.add_keyword(item, line_no);
      if (comma == std::string_view::npos) {
        break;
      }
      pos = comma + 1;
    }
  }
  return builder.finish();
}

OntologyModel OntologyModel::parse_string(std::string_view config) {
  std::istringstream in{std::string(config)};
  return parse(in);
}

OntologyModel OntologyModel::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::io_error, "cannot open ontology file: " + path);
  }
  return parse(in);
}

void OntologyModel::serialize(std::ostream& out) const {
  for (const EntityClass cls : kAllEntityClasses) {
    for (const Subclass& sub : subclasses(cls)) {
      out << '[' << to_string(cls) << ' ' << sub.name << "]\n";
      bool first = true;
      for (std::size_t i = sub.first_term; i < sub.first_term + sub.term_count;
           ++i) {
        out << (first ? "" : ", ") << terms(cls)[i].surface;
        first = false;
      }
      out << '\n';
    }
  }
}

std::string OntologyModel::serialize() const {
  std::ostringstream out;
  serialize(out);
  return out.str();
}

const std::vector<Subclass>& OntologyModel::subclasses(EntityClass cls) const {
  return subclasses_[slot(cls)];
}

const std::vector<KeywordTerm>& OntologyModel::terms(EntityClass cls) const {
  return terms_[slot(cls)];
}

const Subclass& OntologyModel::subclass_of(EntityClass cls,
                                           std::size_t index) const {
  const auto& class_terms = terms(cls);
  if (index >= class_terms.size()) {
    throw Error(errc::index_out_of_range,
                "term index " + std::to_string(index) + " out of range for " +
                    std::string(to_string(cls)) + " (" +
                    std::to_string(class_terms.size()) + " terms)");
  }
  return subclasses(cls)[class_terms[index].subclass];
}

const Subclass* OntologyModel::find_subclass(EntityClass cls,
                                             std::string_view name) const {
  for (const Subclass& sub : subclasses(cls)) {
    if (sub.name == name) {
      return &sub;
    }
  }
  return nullptr;
}

bool OntologyModel::operator==(const OntologyModel& other) const {
  return subclasses_ == other.subclasses_ && terms_ == other.terms_;
}

CoverageReport vocabulary_coverage(const OntologyModel& model,
                                   const EmbeddingTable& table) {
  CoverageReport report;
  for (const EntityClass cls : kAllEntityClasses) {
    for (const Subclass& sub : model.subclasses(cls)) {
      std::size_t in_vocab = 0;
      for (std::size_t i = sub.first_term; i < sub.first_term + sub.term_count;
           ++i) {
        const KeywordTerm& term = model.terms(cls)[i];
        bool any = false;
        for (const std::string& token : term.tokens) {
          if (table.lookup(token)) {
            any = true;
            break;
          }
        }
        if (any) {
          ++in_vocab;
        } else {
          report.oov_terms.push_back(
              CoverageReport::OovTerm{cls, sub.name, term.surface});
        }
      }
      report.per_subclass.push_back(CoverageReport::SubclassCoverage{
          cls, sub.name, in_vocab, sub.term_count,
          sub.term_count == 0 ? 0.0
                              : static_cast<double>(in_vocab) /
                                    static_cast<double>(sub.term_count)});
    }
  }
  return report;
}

}  // namespace privleak
