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

#ifndef PRIVLEAK_ERROR_HPP
#define PRIVLEAK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace privleak {

// Every data-level failure the library reports. The CLI maps any of these
// to exit code 2; usage problems never reach this type.
enum class errc {
  // embeddings
  empty_vocabulary,
  dimension_mismatch,
  malformed_number,
  zero_norm_vector,
  // ontology
  duplicate_keyword,
  unknown_class,
  empty_subclass,
  duplicate_subclass,
  malformed_ontology,
  index_out_of_range,
  // classifier
  all_terms_oov,
  // recognition / corpus
  span_out_of_bounds,
  surface_mismatch,
  unknown_label,
  unknown_subclass,
  malformed_record,
  duplicate_id,
  // i/o and report files
  io_error,
  malformed_results,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const { return code_; }

  // 1-based input line when the failure came from parsing a file; 0 otherwise.
  std::size_t line() const { return line_; }

  Error& at_line(std::size_t line) {
    line_ = line;
    return *this;
  }

 private:
  errc code_;
  std::size_t line_ = 0;
};

}  // namespace privleak

#endif  // PRIVLEAK_ERROR_HPP
