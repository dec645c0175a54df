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

#ifndef PRIVLEAK_TEXT_HPP
#define PRIVLEAK_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace privleak::text {

// All span offsets in this project are Unicode scalar positions, not bytes.
// The decoder is lenient: an invalid byte counts as one code point, so any
// byte string gets a stable offset scheme.

// Byte offset where each code point starts, plus a final entry == s.size().
std::vector<std::size_t> codepoint_offsets(std::string_view s);

std::size_t codepoint_length(std::string_view s);

// Substring by code point range; [start, end) must lie within the text.
std::string slice(std::string_view s, std::size_t start_cp, std::size_t end_cp);

// ASCII-only lowercasing; multibyte sequences pass through untouched.
std::string to_lower(std::string_view s);

// Normalized token stream: lowercased, split on whitespace and hyphens, with
// characters outside letters/digits/apostrophes stripped and empty pieces
// dropped. Non-ASCII code points are kept and treated as letters.
std::vector<std::string> tokenize(std::string_view s);

// A token together with the code point range of the characters it was read
// from. Produced by maximal runs of token characters, so the surface slice of
// a token is always exactly the token's own characters.
struct LocatedToken {
  std::string value;      // normalized (lowercased) text
  std::size_t start_cp;   // inclusive
  std::size_t end_cp;     // exclusive
};

std::vector<LocatedToken> tokenize_with_offsets(std::string_view s);

}  // namespace privleak::text

#endif  // PRIVLEAK_TEXT_HPP
