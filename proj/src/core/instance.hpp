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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace attraudit {

struct Field {
  std::string name;
  std::vector<std::string> tokens;
};

// One or two token fields plus a gold label. All audits, attributions and
// attacks address tokens by their position in the flattened sequence
// (fields concatenated in order).
struct Instance {
  std::string id;
  std::vector<Field> fields;  // 1 or 2
  int label = 0;

  size_t token_count() const;
  std::vector<std::string> flat_tokens() const;

  // flat position -> (field index, position within field)
  std::pair<size_t, size_t> locate(size_t flat_pos) const;

  const std::string& token_at(size_t flat_pos) const;
  void set_token(size_t flat_pos, const std::string& tok);

  // Removes the given flat positions simultaneously (positions refer to the
  // pre-removal sequence).
  Instance without_positions(const std::vector<size_t>& positions) const;

  const Field* find_field(const std::string& name) const;
};

using Dataset = std::vector<Instance>;

// Copy with the named field's tokens emptied; other fields untouched.
// Unknown field name -> DataError. Idempotent.
Instance blank_field(const Instance& x, const std::string& field_name);

enum class DatasetFormat { kJsonl, kTsv };

DatasetFormat parse_dataset_format(const std::string& s);

// JSONL: one object per line, keys id + label + text, premise/hypothesis or
// document/question. TSV: header row with the same column names; fields
// containing tab/quote/newline are double-quoted. Malformed records and
// duplicate ids raise DataError naming the line.
Dataset load_dataset(const std::string& path, DatasetFormat format);

void save_dataset_jsonl(const Dataset& data, const std::string& path);
void save_dataset_tsv(const Dataset& data, const std::string& path);

// Content hash over (id, fields, label) in file order; keys run records.
std::string dataset_hash(const Dataset& data);

}  // namespace attraudit
