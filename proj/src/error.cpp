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

#include "privleak/error.hpp"

namespace privleak {

const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_vocabulary:
      return "EmptyVocabulary";
    case errc::dimension_mismatch:
      return "DimensionMismatch";
    case errc::malformed_number:
      return "MalformedNumber";
    case errc::zero_norm_vector:
      return "ZeroNormVector";
    case errc::duplicate_keyword:
      return "DuplicateKeyword";
    case errc::unknown_class:
      return "UnknownClass";
    case errc::empty_subclass:
      return "EmptySubclass";
    case errc::duplicate_subclass:
      return "DuplicateSubclass";
    case errc::malformed_ontology:
      return "MalformedOntology";
    case errc::index_out_of_range:
      return "IndexOutOfRange";
    case errc::all_terms_oov:
      return "AllTermsOOV";
    case errc::span_out_of_bounds:
      return "SpanOutOfBounds";
    case errc::surface_mismatch:
      return "SurfaceMismatch";
    case errc::unknown_label:
      return "UnknownLabel";
    case errc::unknown_subclass:
      return "UnknownSubclass";
    case errc::malformed_record:
      return "MalformedRecord";
    case errc::duplicate_id:
      return "DuplicateId";
    case errc::io_error:
      return "IoError";
    case errc::malformed_results:
      return "MalformedResults";
  }
  return "UnknownError";
}

}  // namespace privleak
