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
#pragma once

#include <string>
#include <vector>

namespace attraudit {

// Reserved token: never produced by tokenize() (uppercase survives the
// lowercasing pass only here) and mapped to zero features by the linear
// models, so padding genuinely removes information.
inline const std::string kPadToken = "[PAD]";

// Lowercase + punctuation detachment + whitespace split.
// "Good movie!" -> {"good", "movie", "!"}
std::vector<std::string> tokenize(const std::string& text);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace attraudit
