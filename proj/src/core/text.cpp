/*
 * Copyright 2026 The attraudit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "core/text.hpp"

#include <cctype>

#include "core/hashing.hpp"

namespace attraudit {

namespace {

bool is_punct(unsigned char c) { return std::ispunct(c) != 0; }

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string word;
  auto flush_word = [&] {
    if (word.empty()) return;
    // Detach leading/trailing punctuation runs as their own tokens; keep
    // interior punctuation (don't -> don't).
    size_t b = 0, e = word.size();
    while (b < e && is_punct(static_cast<unsigned char>(word[b]))) ++b;
    size_t core_end = e;
    while (core_end > b && is_punct(static_cast<unsigned char>(word[core_end - 1]))) --core_end;
    for (size_t i = 0; i < b; ++i) out.push_back(std::string(1, word[i]));
    if (core_end > b) out.push_back(word.substr(b, core_end - b));
    for (size_t i = core_end; i < e; ++i) out.push_back(std::string(1, word[i]));
    word.clear();
  };
  for (char raw : text) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      flush_word();
    } else {
      word.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  flush_word();
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace attraudit
