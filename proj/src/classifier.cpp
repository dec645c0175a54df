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

#include "privleak/classifier.hpp"

#include <cmath>

#include "privleak/error.hpp"
#include "privleak/text.hpp"

namespace privleak {

namespace {

constexpr std::size_t slot(EntityClass cls) {
  return static_cast<std::size_t>(cls);
}

bool has_nonzero_norm(std::span<const double> v) {
  for (const double c : v) {
    if (c != 0.0) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(DecisionStatus status) {
  return status == DecisionStatus::Classified ? "classified" : "unclassifiable";
}

TokenizedEntity tokenize_entity(const EntitySpan& span) {
  return TokenizedEntity{text::tokenize(span.surface), span.label, span};
}

std::optional<Vector> term_vector(const KeywordTerm& term,
                                  const EmbeddingTable& table) {
  Vector pooled(table.dimension(), 0.0);
  std::size_t found = 0;
  for (const std::string& token : term.tokens) {
    const auto vec = table.lookup(token);
    if (!vec) {
      continue;
    }
    for (std::size_t i = 0; i < pooled.size(); ++i) {
      pooled[i] += (*vec)[i];
    }
    ++found;
  }
  if (found == 0) {
    return std::nullopt;
  }
  if (found > 1) {
    for (double& c : pooled) {
      c /= static_cast<double>(found);
    }
  }
  return pooled;
}

TermVectorSet::TermVectorSet(const OntologyModel& model,
                             const EmbeddingTable& table) {
  for (const EntityClass cls : kAllEntityClasses) {
    auto& class_vectors = vectors_[slot(cls)];
    class_vectors.reserve(model.terms(cls).size());
    for (const KeywordTerm& term : model.terms(cls)) {
      std::optional<Vector> pooled = term_vector(term, table);
      // A pooled vector with zero norm cannot be compared; treat as absent.
      if (pooled && !has_nonzero_norm(*pooled)) {
        pooled.reset();
      }
      class_vectors.push_back(std::move(pooled));
    }
  }
}

const std::optional<Vector>& TermVectorSet::vector_for(EntityClass cls,
                                                       std::size_t index) const {
  return vectors_[slot(cls)][index];
}

bool TermVectorSet::any_in_vocab(EntityClass cls) const {
  for (const auto& v : vectors_[slot(cls)]) {
    if (v) {
      return true;
    }
  }
  return false;
}

double pair_similarity(std::string_view entity_token, const KeywordTerm& term,
                       const EmbeddingTable& table) {
  const std::optional<Vector> tv = term_vector(term, table);
  if (!tv) {
    throw Error(errc::all_terms_oov,
                "term '" + term.surface + "' has no vector in " +
                    table.source_id());
  }
  const auto token_vec = table.lookup(entity_token);
  if (!token_vec || !has_nonzero_norm(*token_vec)) {
    return 0.0;  // OOV entity tokens contribute nothing
  }
  return cosine(*token_vec, *tv);
}

ScoreVector score_terms(const TokenizedEntity& entity,
                        const OntologyModel& model,
                        const EmbeddingTable& table) {
  return score_terms(entity, model, table, TermVectorSet(model, table));
}

ScoreVector score_terms(const TokenizedEntity& entity,
                        const OntologyModel& model, const EmbeddingTable& table,
                        const TermVectorSet& term_vectors) {
  const std::vector<KeywordTerm>& terms = model.terms(entity.cls);
  if (terms.empty() || !term_vectors.any_in_vocab(entity.cls)) {
    throw Error(errc::all_terms_oov,
                std::string("no ") + std::string(to_string(entity.cls)) +
                    " term of the ontology has a vector in " +
                    table.source_id());
  }

  ScoreVector scores;
  scores.per_term.assign(terms.size(), 0.0);
  scores.excluded.assign(terms.size(), false);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    scores.excluded[i] = !term_vectors.vector_for(entity.cls, i).has_value();
  }

  for (const std::string& token : entity.tokens) {
    const auto token_vec = table.lookup(token);
    if (!token_vec || !has_nonzero_norm(*token_vec)) {
      ++scores.skipped_tokens;
      continue;
    }
    ++scores.contributing_tokens;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (scores.excluded[i]) {
        continue;
      }
      scores.per_term[i] +=
          cosine(*token_vec, *term_vectors.vector_for(entity.cls, i));
    }
  }
  return scores;
}

SubclassDecision classify_entity(const TokenizedEntity& entity,
                                 const OntologyModel& model,
                                 const EmbeddingTable& table) {
  return classify_entity(entity, model, table, TermVectorSet(model, table));
}

SubclassDecision classify_entity(const TokenizedEntity& entity,
                                 const OntologyModel& model,
                                 const EmbeddingTable& table,
                                 const TermVectorSet& term_vectors) {
  SubclassDecision decision;
  decision.cls = entity.cls;

  if (entity.tokens.empty()) {
    decision.diagnostic = "entity has no tokens after normalization";
    return decision;
  }
  try {
    decision.scores = score_terms(entity, model, table, term_vectors);
  } catch (const Error& e) {
    if (e.code() != errc::all_terms_oov) {
      throw;
    }
    decision.diagnostic = e.what();
    return decision;
  }
  if (decision.scores.contributing_tokens == 0) {
    decision.diagnostic = "every entity token is out of vocabulary";
    return decision;
  }

  // Argmax over non-excluded terms; ties break to the smallest index.
  std::size_t best = 0;
  double best_score = 0.0;
  bool have_best = false;
  for (std::size_t i = 0; i < decision.scores.per_term.size(); ++i) {
    if (decision.scores.excluded[i]) {
      continue;
    }
    if (!have_best || decision.scores.per_term[i] > best_score) {
      best = i;
      best_score = decision.scores.per_term[i];
      have_best = true;
    }
  }

  decision.status = DecisionStatus::Classified;
  decision.winning_index = best;
  decision.winning_term = model.terms(entity.cls)[best].surface;
  decision.winning_score = best_score;
  decision.subclass = model.subclass_of(entity.cls, best).name;
  return decision;
}

}  // namespace privleak
