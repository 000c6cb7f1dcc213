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
#include "core/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/hashing.hpp"
#include "core/text.hpp"

namespace attraudit {

using nlohmann::json;

size_t Instance::token_count() const {
  size_t n = 0;
  for (const auto& f : fields) n += f.tokens.size();
  return n;
}

std::vector<std::string> Instance::flat_tokens() const {
  std::vector<std::string> out;
  out.reserve(token_count());
  for (const auto& f : fields)
    out.insert(out.end(), f.tokens.begin(), f.tokens.end());
  return out;
}

std::pair<size_t, size_t> Instance::locate(size_t flat_pos) const {
  size_t offset = flat_pos;
  for (size_t fi = 0; fi < fields.size(); ++fi) {
    if (offset < fields[fi].tokens.size()) return {fi, offset};
    offset -= fields[fi].tokens.size();
  }
  throw InternalError("flat position out of range: " + std::to_string(flat_pos));
}

const std::string& Instance::token_at(size_t flat_pos) const {
  auto [fi, off] = locate(flat_pos);
  return fields[fi].tokens[off];
}

void Instance::set_token(size_t flat_pos, const std::string& tok) {
  auto [fi, off] = locate(flat_pos);
  fields[fi].tokens[off] = tok;
}

Instance Instance::without_positions(const std::vector<size_t>& positions) const {
  std::set<size_t> drop(positions.begin(), positions.end());
  Instance out;
  out.id = id;
  out.label = label;
  out.fields.reserve(fields.size());
  size_t flat = 0;
  for (const auto& f : fields) {
    Field nf;
    nf.name = f.name;
    for (const auto& tok : f.tokens) {
      if (!drop.count(flat)) nf.tokens.push_back(tok);
      ++flat;
    }
    out.fields.push_back(std::move(nf));
  }
  return out;
}

const Field* Instance::find_field(const std::string& name) const {
  for (const auto& f : fields)
    if (f.name == name) return &f;
  return nullptr;
}

Instance blank_field(const Instance& x, const std::string& field_name) {
  Instance out = x;
  for (auto& f : out.fields) {
    if (f.name == field_name) {
      f.tokens.clear();
      return out;
    }
  }
  throw DataError("unknown field name: '" + field_name + "' in instance '" + x.id + "'");
}

DatasetFormat parse_dataset_format(const std::string& s) {
  if (s == "jsonl") return DatasetFormat::kJsonl;
  if (s == "tsv") return DatasetFormat::kTsv;
  throw ConfigError("unknown dataset format: '" + s + "' (expected jsonl or tsv)");
}

namespace {

const std::vector<std::vector<std::string>> kFieldKeySets = {
    {"text"}, {"premise", "hypothesis"}, {"document", "question"}};

[[noreturn]] void malformed(size_t line_no, const std::string& why) {
  throw DataError("malformed record at line " + std::to_string(line_no) + ": " + why);
}

Instance parse_jsonl_record(const std::string& line, size_t line_no) {
  json rec;
  try {
    rec = json::parse(line);
  } catch (const json::parse_error& e) {
    malformed(line_no, e.what());
  }
  if (!rec.is_object()) malformed(line_no, "not a JSON object");
  if (!rec.contains("id") || !rec["id"].is_string()) malformed(line_no, "missing string 'id'");
  if (!rec.contains("label") || !rec["label"].is_number_integer())
    malformed(line_no, "missing integer 'label'");

  Instance x;
  x.id = rec["id"].get<std::string>();
  x.label = rec["label"].get<int>();
  if (x.label < 0) malformed(line_no, "negative label");

  const std::vector<std::string>* keys = nullptr;
  for (const auto& ks : kFieldKeySets) {
    bool all = true;
    for (const auto& k : ks) all = all && rec.contains(k);
    if (all) {
      keys = &ks;
      break;
    }
  }
  if (!keys)
    malformed(line_no, "expected 'text', 'premise'+'hypothesis' or 'document'+'question'");
  if (rec.size() != 2 + keys->size()) malformed(line_no, "unexpected extra keys");
  for (const auto& k : *keys) {
    if (!rec[k].is_string()) malformed(line_no, "field '" + k + "' is not a string");
    x.fields.push_back({k, tokenize(rec[k].get<std::string>())});
  }
  bool any = false;
  for (const auto& f : x.fields) any = any || !f.tokens.empty();
  if (!any) malformed(line_no, "all fields empty after tokenization");
  return x;
}

// TSV cell with tab, quote or newline gets double-quoted; quotes doubled.
std::string tsv_escape(const std::string& s) {
  if (s.find_first_of("\t\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

std::vector<std::string> split_tsv_row(const std::string& row, size_t line_no) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  size_t i = 0;
  bool cell_started_quoted = false;
  while (i < row.size()) {
    char c = row[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < row.size() && row[i + 1] == '"') {
          cur.push_back('"');
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        continue;
      }
      cur.push_back(c);
      ++i;
    } else if (c == '"' && cur.empty() && !cell_started_quoted) {
      quoted = true;
      cell_started_quoted = true;
      ++i;
    } else if (c == '\t') {
      cells.push_back(cur);
      cur.clear();
      cell_started_quoted = false;
      ++i;
    } else {
      cur.push_back(c);
      ++i;
    }
  }
  if (quoted) malformed(line_no, "unterminated quote");
  cells.push_back(cur);
  return cells;
}

}  // namespace

Dataset load_dataset(const std::string& path, DatasetFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dataset file: " + path);

  Dataset data;
  std::set<std::string> seen_ids;
  auto check_id = [&](const std::string& id, size_t line_no) {
    if (!seen_ids.insert(id).second)
      throw DataError("duplicate id '" + id + "' at line " + std::to_string(line_no));
  };

  if (format == DatasetFormat::kJsonl) {
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      Instance x = parse_jsonl_record(line, line_no);
      check_id(x.id, line_no);
      data.push_back(std::move(x));
    }
    return data;
  }

  // TSV with header row. Quoted cells may contain embedded newlines, so read
  // logical rows by balancing quotes.
  auto read_logical_row = [&](std::string& out, size_t& line_no) -> bool {
    out.clear();
    std::string line;
    bool got = false;
    while (std::getline(in, line)) {
      ++line_no;
      got = true;
      if (!out.empty()) out.push_back('\n');
      out += line;
      size_t quotes = static_cast<size_t>(std::count(out.begin(), out.end(), '"'));
      if (quotes % 2 == 0) return true;
    }
    return got;
  };

  size_t line_no = 0;
  std::string row;
  if (!read_logical_row(row, line_no)) return data;  // empty file -> empty list
  std::vector<std::string> header = split_tsv_row(row, line_no);

  int id_col = -1, label_col = -1;
  std::vector<std::pair<int, std::string>> text_cols;  // (column, field name)
  for (size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "id") id_col = static_cast<int>(c);
    else if (header[c] == "label") label_col = static_cast<int>(c);
    else text_cols.emplace_back(static_cast<int>(c), header[c]);
  }
  if (id_col < 0 || label_col < 0) throw DataError("TSV header must contain 'id' and 'label'");
  if (text_cols.empty() || text_cols.size() > 2)
    throw DataError("TSV header must contain 1 or 2 text columns");

  while (read_logical_row(row, line_no)) {
    if (row.empty()) continue;
    std::vector<std::string> cells = split_tsv_row(row, line_no);
    if (cells.size() != header.size()) malformed(line_no, "wrong column count");
    Instance x;
    x.id = cells[static_cast<size_t>(id_col)];
    try {
      size_t used = 0;
      x.label = std::stoi(cells[static_cast<size_t>(label_col)], &used);
      if (used != cells[static_cast<size_t>(label_col)].size()) malformed(line_no, "non-integer label");
    } catch (const std::logic_error&) {
      malformed(line_no, "non-integer label");
    }
    if (x.label < 0) malformed(line_no, "negative label");
    for (const auto& [col, name] : text_cols)
      x.fields.push_back({name, tokenize(cells[static_cast<size_t>(col)])});
    bool any = false;
    for (const auto& f : x.fields) any = any || !f.tokens.empty();
    if (!any) malformed(line_no, "all fields empty after tokenization");
    check_id(x.id, line_no);
    data.push_back(std::move(x));
  }
  return data;
}

void save_dataset_jsonl(const Dataset& data, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write dataset file: " + path);
  for (const auto& x : data) {
    json rec;
    rec["id"] = x.id;
    rec["label"] = x.label;
    for (const auto& f : x.fields) rec[f.name] = join_tokens(f.tokens);
    out << rec.dump() << "\n";
  }
}

void save_dataset_tsv(const Dataset& data, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write dataset file: " + path);
  if (data.empty()) return;
  out << "id";
  for (const auto& f : data.front().fields) out << "\t" << f.name;
  out << "\tlabel\n";
  for (const auto& x : data) {
    out << tsv_escape(x.id);
    for (const auto& f : x.fields) out << "\t" << tsv_escape(join_tokens(f.tokens));
    out << "\t" << x.label << "\n";
  }
}

std::string dataset_hash(const Dataset& data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& x : data) {
    h = fnv1a(x.id, h);
    h = fnv1a("\x1e", h);
    for (const auto& f : x.fields) {
      h = fnv1a(f.name, h);
      h = fnv1a("\x1d", h);
      for (const auto& t : f.tokens) {
        h = fnv1a(t, h);
        h = fnv1a("\x1f", h);
      }
    }
    h = fnv1a(std::to_string(x.label), h);
    h = fnv1a("\n", h);
  }
  return hex64(h);
}

}  // namespace attraudit
