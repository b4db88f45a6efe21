#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdlab/error.hpp"

namespace sdlab {

// Line-oriented tokenizer shared by the text formats. Blank lines and lines
// whose first non-space character is '#' are skipped.
class LineReader {
public:
  struct Record {
    std::size_t line = 0;
    std::vector<std::string_view> tokens;
  };

  explicit LineReader(std::string_view text) : text_(text) {}

  std::optional<Record> next_record() {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) {
        end = text_.size();
      }
      auto line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      Record rec{line_, split(line)};
      if (rec.tokens.empty() || rec.tokens.front().front() == '#') {
        continue;
      }
      return rec;
    }
    return std::nullopt;
  }

  std::string where(const Record& rec) const { return "line " + std::to_string(rec.line) + ": "; }

private:
  static std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) {
        ++i;
      }
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) {
        ++j;
      }
      if (j > i) {
        tokens.push_back(line.substr(i, j - i));
      }
      i = j;
    }
    return tokens;
  }
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

inline std::int64_t parse_int(const LineReader::Record& rec, std::size_t index, const LineReader& reader) {
  if (index >= rec.tokens.size()) {
    throw DomainError(reader.where(rec) + "missing field " + std::to_string(index));
  }
  auto tok = rec.tokens[index];
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw DomainError(reader.where(rec) + "not an integer: '" + std::string(tok) + "'");
  }
  return value;
}

inline std::size_t parse_count(const LineReader::Record& rec, std::size_t index, const LineReader& reader) {
  auto value = parse_int(rec, index, reader);
  if (value < 0) {
    throw DomainError(reader.where(rec) + "expected a non-negative integer");
  }
  return static_cast<std::size_t>(value);
}

} // namespace sdlab
