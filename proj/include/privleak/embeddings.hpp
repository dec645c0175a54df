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

#ifndef PRIVLEAK_EMBEDDINGS_HPP
#define PRIVLEAK_EMBEDDINGS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace privleak {

using Vector = std::vector<double>;

// Read-only token -> vector table loaded from the whitespace-delimited text
// format (one `token c1 c2 ... cd` line per entry, optional `count dim`
// integer header). Immutable after construction; safe to share across
// threads.
class EmbeddingTable {
 public:
  // Throws Error with errc::empty_vocabulary, errc::dimension_mismatch or
  // errc::malformed_number. The dimension is inferred from the first data
  // line; duplicate tokens keep the first occurrence and bump a counter.
  static EmbeddingTable parse(std::istream& in, std::string source_id = "<stream>");
  static EmbeddingTable parse_file(const std::string& path);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return tokens_.size(); }
  const std::string& source_id() const { return source_id_; }
  std::size_t duplicate_count() const { return duplicate_count_; }

  // Case-folding lookup; empty result means out-of-vocabulary, never an error.
  std::optional<std::span<const double>> lookup(std::string_view token) const;

  // Tokens in file order; row(i) is the vector of tokens()[i].
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::span<const double> row(std::size_t i) const;

  // Writes the same text format back out, with enough digits that re-parsing
  // recovers every component exactly.
  void serialize(std::ostream& out) const;

 private:
  EmbeddingTable() = default;

  std::size_t dimension_ = 0;
  std::string source_id_;
  std::size_t duplicate_count_ = 0;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> data_;  // size() * dimension(), row-major
};

// dot(u,v) / (|u| |v|) with fixed left-to-right accumulation. Throws Error
// (errc::zero_norm_vector) when either norm is zero and
// errc::dimension_mismatch when lengths differ.
double cosine(std::span<const double> u, std::span<const double> v);

}  // namespace privleak

#endif  // PRIVLEAK_EMBEDDINGS_HPP
