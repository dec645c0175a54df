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

// Brute-force reference implementations used only by tests. Everything here
// recomputes results from first principles (own text parsing, own cosine,
// full token-by-term grid) so it stays independent of the library code it
// checks.

#ifndef PRIVLEAK_TESTS_SUPPORT_ORACLE_HPP
#define PRIVLEAK_TESTS_SUPPORT_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "privleak/ontology.hpp"

namespace privleak::testsupport {

struct NaiveTable {
  std::map<std::string, std::vector<double>> entries;
};

// Whitespace-driven reader, deliberately different from the library parser.
inline NaiveTable naive_parse_embeddings(const std::string& text) {
  NaiveTable table;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") {
      continue;
    }
    std::istringstream fields(line);
    std::string token;
    fields >> token;
    std::vector<double> vec;
    double value = 0.0;
    while (fields >> value) {
      vec.push_back(value);
    }
    if (!token.empty() && !vec.empty() && !table.entries.count(token)) {
      table.entries[token] = vec;
    }
  }
  return table;
}

inline double naive_cosine(const std::vector<double>& u,
                           const std::vector<double>& v) {
  double dot = 0.0;
  double nu = 0.0;
  double nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

inline bool naive_zero(const std::vector<double>& v) {
  for (const double c : v) {
    if (c != 0.0) {
      return false;
    }
  }
  return true;
}

struct NaiveOutcome {
  std::vector<double> scores;
  std::vector<bool> excluded;
  std::ptrdiff_t winner = -1;  // -1: no decision possible
  std::string subclass;
};

// Eq-by-eq replay: pool each term's token vectors by mean, sum cosines over
// the whole n x N grid, then take the smallest argmax index.
inline NaiveOutcome naive_classify(const std::vector<std::string>& tokens,
                                   EntityClass cls, const OntologyModel& model,
                                   const NaiveTable& table) {
  const auto& terms = model.terms(cls);
  NaiveOutcome outcome;
  outcome.scores.assign(terms.size(), 0.0);
  outcome.excluded.assign(terms.size(), true);

  std::vector<std::vector<double>> term_vectors(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::vector<double> pooled;
    std::size_t found = 0;
    for (const std::string& token : terms[i].tokens) {
      const auto it = table.entries.find(token);
      if (it == table.entries.end()) {
        continue;
      }
      if (pooled.empty()) {
        pooled.assign(it->second.size(), 0.0);
      }
      for (std::size_t c = 0; c < pooled.size(); ++c) {
        pooled[c] += it->second[c];
      }
      ++found;
    }
    if (found == 0) {
      continue;
    }
    for (double& c : pooled) {
      c /= static_cast<double>(found);
    }
    if (naive_zero(pooled)) {
      continue;
    }
    outcome.excluded[i] = false;
    term_vectors[i] = std::move(pooled);
  }

  std::size_t usable_tokens = 0;
  for (const std::string& token : tokens) {
    const auto it = table.entries.find(token);
    if (it == table.entries.end() || naive_zero(it->second)) {
      continue;
    }
    ++usable_tokens;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (!outcome.excluded[i]) {
        outcome.scores[i] += naive_cosine(it->second, term_vectors[i]);
      }
    }
  }
  if (usable_tokens == 0) {
    return outcome;
  }

  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (outcome.excluded[i]) {
      continue;
    }
    if (outcome.winner < 0 ||
        outcome.scores[i] > outcome.scores[static_cast<std::size_t>(outcome.winner)]) {
      outcome.winner = static_cast<std::ptrdiff_t>(i);
    }
  }
  if (outcome.winner >= 0) {
    outcome.subclass =
        model.subclass_of(cls, static_cast<std::size_t>(outcome.winner)).name;
  }
  return outcome;
}

}  // namespace privleak::testsupport

#endif  // PRIVLEAK_TESTS_SUPPORT_ORACLE_HPP
