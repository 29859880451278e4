#pragma once

#include <string_view>
#include <vector>

namespace gcq::detail {

// '#' and '%' start comment lines; leading whitespace is allowed.
inline bool is_comment_or_blank(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos) return true;
  return line[pos] == '#' || line[pos] == '%';
}

// Splits on runs of whitespace and commas.
inline void split_tokens(std::string_view line, std::vector<std::string_view>& tokens) {
  tokens.clear();
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\n'; };
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
}

}  // namespace gcq::detail
