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

#include "privleak/embeddings.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "privleak/error.hpp"
#include "privleak/text.hpp"

namespace privleak {

namespace {

// Splits on single ASCII spaces; consecutive spaces yield empty fields, which
// the caller rejects. The format is space-delimited by contract.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(' ', pos);
    if (next == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return fields;
}

bool parse_double(std::string_view field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

bool is_integer_field(std::string_view field) {
  long long value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc() && ptr == end && value >= 0;
}

}  // namespace

EmbeddingTable EmbeddingTable::parse(std::istream& in, std::string source_id) {
  EmbeddingTable table;
  table.source_id_ = std::move(source_id);

  std::string line;
  std::size_t line_no = 0;
  bool first_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string_view> fields = split_fields(line);
    if (first_line && fields.size() == 2 && is_integer_field(fields[0]) &&
        is_integer_field(fields[1])) {
      first_line = false;
      continue;  // optional `count dim` header
    }
    first_line = false;

    if (fields.size() < 2) {
      throw Error(errc::dimension_mismatch,
                  "line " + std::to_string(line_no) +
                      ": data line has no vector components")
          .at_line(line_no);
    }
    const std::size_t width = fields.size() - 1;
    if (table.dimension_ == 0) {
      table.dimension_ = width;
    } else if (width != table.dimension_) {
      throw Error(errc::dimension_mismatch,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(table.dimension_) + " components, got " +
                      std::to_string(width))
          .at_line(line_no);
    }

    std::string token = text::to_lower(fields[0]);
    if (token.empty()) {
      throw Error(errc::malformed_number,
                  "line " + std::to_string(line_no) + ": empty token field")
          .at_line(line_no);
    }
    if (table.index_.contains(token)) {
      ++table.duplicate_count_;  // first occurrence wins
      continue;
    }

    const std::size_t row_start = table.data_.size();
    table.data_.resize(row_start + width);
    for (std::size_t c = 0; c < width; ++c) {
      double value = 0.0;
      if (!parse_double(fields[c + 1], value) || !std::isfinite(value)) {
        table.data_.resize(row_start);
        throw Error(errc::malformed_number,
                    "line " + std::to_string(line_no) + ", component " +
                        std::to_string(c + 1) + ": malformed number '" +
                        std::string(fields[c + 1]) + "'")
            .at_line(line_no);
      }
      table.data_[row_start + c] = value;
    }
    table.index_.emplace(token, table.tokens_.size());
    table.tokens_.push_back(std::move(token));
  }

  if (table.tokens_.empty()) {
    throw Error(errc::empty_vocabulary,
                table.source_id_ + ": no embedding entries found");
  }
  return table;
}

EmbeddingTable EmbeddingTable::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::io_error, "cannot open embeddings file: " + path);
  }
  return parse(in, path);
}

std::optional<std::span<const double>> EmbeddingTable::lookup(
    std::string_view token) const {
  const auto it = index_.find(text::to_lower(token));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return row(it->second);
}

std::span<const double> EmbeddingTable::row(std::size_t i) const {
  return std::span<const double>(data_.data() + i * dimension_, dimension_);
}

void EmbeddingTable::serialize(std::ostream& out) const {
  char buf[64];
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    out << tokens_[i];
    const std::span<const double> v = row(i);
    for (const double c : v) {
      std::snprintf(buf, sizeof(buf), "%.17g", c);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(errc::dimension_mismatch,
                "cosine: vector lengths differ (" + std::to_string(u.size()) +
                    " vs " + std::to_string(v.size()) + ")");
  }
  double dot = 0.0;
  double norm_u = 0.0;
  double norm_v = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    norm_u += u[i] * u[i];
    norm_v += v[i] * v[i];
  }
  if (norm_u == 0.0 || norm_v == 0.0) {
    throw Error(errc::zero_norm_vector, "cosine: zero-norm vector");
  }
  return dot / (std::sqrt(norm_u) * std::sqrt(norm_v));
}

}  // namespace privleak
