#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "savi/core.hpp"

namespace savi::cli {

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input files; the message carries "<source>:<line>: ...".
class ParseError : public Error {
 public:
  using Error::Error;
};

// Writes to a temporary file next to `path`, then renames it into place, so
// readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);

// Plain comma-separated table: no quoting, first line is the header.
struct CsvTable {
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based line of each row

  // ParseError when the column is missing.
  [[nodiscard]] std::size_t column(std::string_view name) const;
  // ParseError (with the line number) unless the cell is a finite number
  // or one of nan / inf / -inf.
  [[nodiscard]] double number(std::size_t row, std::size_t column) const;
};

[[nodiscard]] CsvTable parse_csv(std::string_view text, std::string source);
[[nodiscard]] CsvTable read_csv(const std::filesystem::path& path);

// Joins fields with ',' and appends '\n'.
[[nodiscard]] std::string csv_row(const std::vector<std::string>& fields);

}  // namespace savi::cli
