// Copyright 2026 The Sentisead Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SENTISEAD_CSV_H_
#define SENTISEAD_CSV_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sentisead {

// A parsed RFC-4180 table. The first record is the header.
struct CsvTable {
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // 1-based physical line on which each row starts.
  std::vector<std::size_t> lines;

  std::optional<std::size_t> find_column(std::string_view name) const;
  // Throws SchemaError naming the source when the column is absent.
  std::size_t column(std::string_view name) const;
  // "<source>:<line>" for diagnostics.
  std::string where(std::size_t row) const;
};

// Parses CSV text. Quoted fields may contain separators, doubled quotes and
// line breaks. Rows whose field count differs from the header are rejected.
CsvTable parse_csv(std::string_view text, std::string source);
CsvTable read_csv(const std::filesystem::path& path);

// Quotes a field only when it contains a separator, quote or line break.
std::string csv_field(std::string_view field);
std::string csv_line(const std::vector<std::string>& fields);
// Shortest text that parses back to the same double.
std::string format_double(double v);

std::string read_text_file(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Splits a line on `sep` without any quoting rules (TSV resource files).
std::vector<std::string> split_fields(std::string_view line, char sep);
std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);

}  // namespace sentisead

#endif  // SENTISEAD_CSV_H_
