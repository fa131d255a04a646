// Copyright 2026 The wdist Authors
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

#include "wdist/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "wdist/errors.hpp"

namespace wdist {

std::string_view version() { return WDIST_VERSION; }

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw DimensionError("row has " + std::to_string(row.size()) + " values for " + std::to_string(columns.size()) +
                         " columns");
  }
  rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw DomainError("no column named '" + name + "'");
}

std::vector<double> Table::column_values(const std::string& name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[c]);
  return out;
}

void Table::set_meta(std::string key, std::string value) {
  for (auto& [k, v] : meta) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta.emplace_back(std::move(key), std::move(value));
}

std::string Table::meta_value(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  return {};
}

TableFormat parse_format(std::string_view name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw DomainError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::string_view to_string(TableFormat format) { return format == TableFormat::Csv ? "csv" : "json"; }

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
  std::string out = "{\n  \"meta\": {";
  for (std::size_t i = 0; i < table.meta.size(); ++i) {
    out += i == 0 ? "\n    " : ",\n    ";
    out += quote(table.meta[i].first) + ": " + quote(table.meta[i].second);
  }
  out += table.meta.empty() ? "},\n" : "\n  },\n";
  out += "  \"columns\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out += ", ";
    out += quote(table.columns[i]);
  }
  out += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += r == 0 ? "\n    [" : ",\n    [";
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ", ";
      out += std::isfinite(row[i]) ? format_number(row[i]) : "null";
    }
    out += ']';
  }
  out += table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string serialize(const Table& table, TableFormat format) {
  return format == TableFormat::Csv ? to_csv(table) : to_json(table);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_number(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw DomainError("not a number: '" + s + "'");
  return v;
}

}  // namespace

Table parse_csv(std::string_view text) {
  Table table;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) return table;
  if (!line.empty()) table.columns = split(line, ',');
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) row.push_back(parse_number(cell));
    table.add_row(std::move(row));
  }
  return table;
}

Table parse_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed table JSON: ") + e.what());
  }
  Table table;
  try {
    for (const auto& [k, v] : doc.at("meta").items()) table.meta.emplace_back(k, v.get<std::string>());
    for (const auto& c : doc.at("columns")) table.columns.push_back(c.get<std::string>());
    for (const auto& r : doc.at("rows")) {
      std::vector<double> row;
      for (const auto& v : r) row.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>());
      table.add_row(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("table JSON has the wrong shape: ") + e.what());
  }
  return table;
}

Table parse(std::string_view text, TableFormat format) {
  return format == TableFormat::Csv ? parse_csv(text) : parse_json(text);
}

void write_table(const Table& table, TableFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << serialize(table, format);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace wdist
