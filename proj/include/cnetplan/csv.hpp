#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cnetplan::csv {

/// Error in an input file, carrying the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::filesystem::path& path, std::size_t line,
             const std::string& message)
      : std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                           message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Splits one CSV line. Handles RFC-4180 style double-quoted fields so
/// values may contain commas; no multi-line fields.
std::vector<std::string> split_csv_line(const std::string& line);

/// Quotes a field for CSV output when it contains a comma, quote or
/// newline.
std::string csv_escape(const std::string& field);

/// Line-oriented reader over a CSV file with a mandatory header row.
/// Lines starting with '#' are skipped (provenance comments).
class Reader {
 public:
  explicit Reader(const std::filesystem::path& path);

  /// Validates that the header matches `expected` (case-insensitive).
  void expect_header(const std::vector<std::string>& expected);

  /// Next data row, or nullopt at EOF. Empty lines are skipped.
  std::optional<std::vector<std::string>> next_row();

  std::size_t line_number() const { return line_; }
  const std::filesystem::path& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(path_, line_, message);
  }

  /// Parses a floating-point field; the whole field must be consumed.
  double parse_double(const std::string& field, const std::string& name) const;
  /// Parses like parse_double but maps an empty field to nullopt.
  std::optional<double> parse_optional_double(const std::string& field,
                                              const std::string& name) const;
  long long parse_int(const std::string& field, const std::string& name) const;

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::size_t line_ = 0;
};

}  // namespace cnetplan::csv
