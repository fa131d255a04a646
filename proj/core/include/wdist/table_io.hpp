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

#ifndef WDIST_TABLE_IO_HPP
#define WDIST_TABLE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wdist {

/// Library version string, e.g. "0.1.0".
std::string_view version();

/// Column-major-named numeric table with ordered string metadata.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> meta;

  /// Throws DimensionError when the row width differs from the header.
  void add_row(std::vector<double> row);
  /// Index of `name`; throws DomainError when absent.
  std::size_t column(const std::string& name) const;
  std::vector<double> column_values(const std::string& name) const;
  void set_meta(std::string key, std::string value);
  /// Value for `key`, or an empty string.
  std::string meta_value(const std::string& key) const;
};

enum class TableFormat { Csv, Json };

/// Parses "csv" / "json"; throws DomainError otherwise.
TableFormat parse_format(std::string_view name);
std::string_view to_string(TableFormat format);

/// 12 significant digits ("%.12g"); non-finite values print as "nan",
/// "inf" or "-inf".
std::string format_number(double value);

/// Header row plus one line per row, comma-separated, LF endings. CSV
/// carries no metadata.
std::string to_csv(const Table& table);
/// {"meta": {...}, "columns": [...], "rows": [[...], ...]}; non-finite
/// numbers are written as null.
std::string to_json(const Table& table);
std::string serialize(const Table& table, TableFormat format);

/// Inverses of the writers; throw DomainError on malformed input and
/// DimensionError on ragged CSV rows.
Table parse_csv(std::string_view text);
Table parse_json(std::string_view text);
Table parse(std::string_view text, TableFormat format);

/// Writes serialize(table, format) to `path`; throws Error on I/O failure.
void write_table(const Table& table, TableFormat format, const std::filesystem::path& path);

}  // namespace wdist

#endif  // WDIST_TABLE_IO_HPP
