#include "cnetplan/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace cnetplan::csv {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      out.push_back(trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(trim(field));
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

Reader::Reader(const std::filesystem::path& path) : path_(path), in_(path) {
  if (!in_) {
    throw std::runtime_error("cannot open file: " + path.string());
  }
}

void Reader::expect_header(const std::vector<std::string>& expected) {
  auto row = next_row();
  if (!row) fail("missing header row");
  if (row->size() != expected.size()) {
    fail("header has " + std::to_string(row->size()) + " columns, expected " +
         std::to_string(expected.size()));
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (to_lower((*row)[i]) != to_lower(expected[i])) {
      fail("header column " + std::to_string(i + 1) + " is '" + (*row)[i] +
           "', expected '" + expected[i] + "'");
    }
  }
}

std::optional<std::vector<std::string>> Reader::next_row() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    return split_csv_line(line);
  }
  return std::nullopt;
}

double Reader::parse_double(const std::string& field,
                            const std::string& name) const {
  auto v = parse_optional_double(field, name);
  if (!v) fail("empty value for " + name);
  return *v;
}

std::optional<double> Reader::parse_optional_double(
    const std::string& field, const std::string& name) const {
  if (field.empty()) return std::nullopt;
  const char* begin = field.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + field.size()) {
    fail("non-numeric value for " + name + ": '" + field + "'");
  }
  return v;
}

long long Reader::parse_int(const std::string& field,
                            const std::string& name) const {
  long long v = 0;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || p != field.data() + field.size()) {
    fail("non-integer value for " + name + ": '" + field + "'");
  }
  return v;
}

}  // namespace cnetplan::csv
