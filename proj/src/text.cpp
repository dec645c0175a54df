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

#include "privleak/text.hpp"

#include <cctype>

namespace privleak::text {

namespace {

// Length of the UTF-8 sequence starting at s[i]; invalid leads decode as 1.
std::size_t sequence_length(std::string_view s, std::size_t i) {
  const unsigned char b = static_cast<unsigned char>(s[i]);
  std::size_t want = 1;
  if ((b & 0x80u) == 0x00u) {
    want = 1;
  } else if ((b & 0xE0u) == 0xC0u) {
    want = 2;
  } else if ((b & 0xF0u) == 0xE0u) {
    want = 3;
  } else if ((b & 0xF8u) == 0xF0u) {
    want = 4;
  } else {
    return 1;  // stray continuation or invalid lead byte
  }
  if (i + want > s.size()) {
    return 1;
  }
  for (std::size_t k = 1; k < want; ++k) {
    if ((static_cast<unsigned char>(s[i + k]) & 0xC0u) != 0x80u) {
      return 1;
    }
  }
  return want;
}

bool is_ascii(std::string_view s, std::size_t i) {
  return (static_cast<unsigned char>(s[i]) & 0x80u) == 0;
}

bool is_token_char_at(std::string_view s, std::size_t i) {
  if (!is_ascii(s, i)) {
    return true;  // multibyte code points are treated as letters
  }
  const unsigned char c = static_cast<unsigned char>(s[i]);
  return std::isalnum(c) != 0 || c == '\'';
}

bool is_ascii_space_or_hyphen(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == '-';
}

}  // namespace

std::vector<std::size_t> codepoint_offsets(std::string_view s) {
  std::vector<std::size_t> offsets;
  offsets.reserve(s.size() + 1);
  std::size_t i = 0;
  while (i < s.size()) {
    offsets.push_back(i);
    i += sequence_length(s, i);
  }
  offsets.push_back(s.size());
  return offsets;
}

std::size_t codepoint_length(std::string_view s) {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    i += sequence_length(s, i);
    ++n;
  }
  return n;
}

std::string slice(std::string_view s, std::size_t start_cp, std::size_t end_cp) {
  const std::vector<std::size_t> offsets = codepoint_offsets(s);
  return std::string(s.substr(offsets[start_cp], offsets[end_cp] - offsets[start_cp]));
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (u < 0x80u) {
      c = static_cast<char>(std::tolower(u));
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(to_lower(current));
      current.clear();
    }
  };
  while (i < s.size()) {
    const std::size_t len = sequence_length(s, i);
    if (len == 1 && is_ascii(s, i) && is_ascii_space_or_hyphen(s[i])) {
      flush();  // whitespace and hyphens split
    } else if (is_token_char_at(s, i)) {
      current.append(s.substr(i, len));
    }
    // other characters are stripped without splitting
    i += len;
  }
  flush();
  return tokens;
}

std::vector<LocatedToken> tokenize_with_offsets(std::string_view s) {
  std::vector<LocatedToken> tokens;
  std::size_t i = 0;
  std::size_t cp = 0;
  while (i < s.size()) {
    std::size_t len = sequence_length(s, i);
    if (!is_token_char_at(s, i)) {
      i += len;
      ++cp;
      continue;
    }
    const std::size_t start_byte = i;
    const std::size_t start_cp = cp;
    while (i < s.size()) {
      len = sequence_length(s, i);
      if (!is_token_char_at(s, i)) {
        break;
      }
      i += len;
      ++cp;
    }
    tokens.push_back(LocatedToken{
        to_lower(s.substr(start_byte, i - start_byte)), start_cp, cp});
  }
  return tokens;
}

}  // namespace privleak::text
