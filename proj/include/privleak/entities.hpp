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

#ifndef PRIVLEAK_ENTITIES_HPP
#define PRIVLEAK_ENTITIES_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "privleak/ontology.hpp"

namespace privleak {

enum class SpanOrigin { External, Gazetteer, Gold };

std::string_view to_string(SpanOrigin origin);

// A labeled character range in a message. Offsets count Unicode scalar
// values, start inclusive, end exclusive, and `surface` always equals the
// corresponding slice of the message text.
struct EntitySpan {
  std::size_t start;
  std::size_t end;
  std::string surface;
  EntityClass label;
  SpanOrigin origin;

  bool operator==(const EntitySpan&) const = default;
};

struct Message {
  std::string id;
  std::string text;
  std::vector<EntitySpan> annotations;
};

// Message-level judgment. `leaking` is true exactly when the findings carry
// at least one PERSON entity and at least one TRAIT/PREF/EVENT entity;
// `reasons` lists the (class, subclass) of every classified finding.
struct PrivacyVerdict {
  bool leaking = false;
  std::vector<std::pair<EntityClass, std::string>> reasons;
};

}  // namespace privleak

#endif  // PRIVLEAK_ENTITIES_HPP
