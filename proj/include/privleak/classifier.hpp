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

#ifndef PRIVLEAK_CLASSIFIER_HPP
#define PRIVLEAK_CLASSIFIER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "privleak/embeddings.hpp"
#include "privleak/entities.hpp"
#include "privleak/ontology.hpp"

namespace privleak {

// An entity span reduced to its normalized token sequence, ready for scoring
// against the keyword terms of its class.
struct TokenizedEntity {
  std::vector<std::string> tokens;
  EntityClass cls;
  EntitySpan span;
};

TokenizedEntity tokenize_entity(const EntitySpan& span);

// Per-term score sums for one entity. `per_term[i]` is the summed cosine of
// every in-vocabulary entity token against term i of the class; terms without
// a vector are excluded and hold 0.0. Excluded terms never win the argmax: a
// zero score means orthogonality, absence means the term cannot be scored.
struct ScoreVector {
  std::vector<double> per_term;
  std::vector<bool> excluded;
  std::size_t contributing_tokens = 0;
  std::size_t skipped_tokens = 0;
};

enum class DecisionStatus { Classified, Unclassifiable };

std::string_view to_string(DecisionStatus status);

// Outcome of the argmax over per-term scores. When status is Classified the
// winning term is the smallest index attaining the maximum score.
struct SubclassDecision {
  DecisionStatus status = DecisionStatus::Unclassifiable;
  EntityClass cls = EntityClass::Person;
  std::string subclass;          // empty when unclassifiable
  std::size_t winning_index = 0; // term index, valid when classified
  std::string winning_term;      // term surface, valid when classified
  double winning_score = 0.0;
  ScoreVector scores;
  std::string diagnostic;        // why the entity was not classified
};

struct Finding {
  EntitySpan span;
  SubclassDecision decision;
};

// Precomputed term vectors for every class of a model against one table.
// Single-token keywords use their own vector; multi-token keywords use the
// componentwise mean of their in-vocabulary token vectors; terms whose tokens
// are all OOV (or whose pooled vector has zero norm) have no entry.
class TermVectorSet {
 public:
  TermVectorSet(const OntologyModel& model, const EmbeddingTable& table);

  const std::optional<Vector>& vector_for(EntityClass cls,
                                          std::size_t index) const;
  bool any_in_vocab(EntityClass cls) const;

 private:
  std::array<std::vector<std::optional<Vector>>, 4> vectors_;
};

// Pooled vector for one keyword term; empty when every token is OOV.
std::optional<Vector> term_vector(const KeywordTerm& term,
                                  const EmbeddingTable& table);

// Cosine of one entity token against a term. OOV entity tokens contribute
// 0.0. The term must have a vector (see term_vector).
double pair_similarity(std::string_view entity_token, const KeywordTerm& term,
                       const EmbeddingTable& table);

// Throws Error(errc::all_terms_oov) when no term of the entity's class has a
// vector. OOV entity tokens contribute 0 to every term and are counted in
// skipped_tokens.
ScoreVector score_terms(const TokenizedEntity& entity,
                        const OntologyModel& model, const EmbeddingTable& table);
ScoreVector score_terms(const TokenizedEntity& entity,
                        const OntologyModel& model, const EmbeddingTable& table,
                        const TermVectorSet& term_vectors);

// Full decision for one entity: score, argmax with smallest-index tie-break,
// then map the winning term index to its subclass. Unclassifiable when the
// entity has no tokens, no in-vocabulary token, or the class has no usable
// terms.
SubclassDecision classify_entity(const TokenizedEntity& entity,
                                 const OntologyModel& model,
                                 const EmbeddingTable& table);
SubclassDecision classify_entity(const TokenizedEntity& entity,
                                 const OntologyModel& model,
                                 const EmbeddingTable& table,
                                 const TermVectorSet& term_vectors);

}  // namespace privleak

#endif  // PRIVLEAK_CLASSIFIER_HPP
