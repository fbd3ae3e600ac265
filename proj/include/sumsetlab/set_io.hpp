#pragma once

// Set literals: comma-separated integers ("0,1,3") or a JSON array of
// integers ("[0,1,3]"). Formatting always emits the comma form, sorted
// ascending, so every emitted literal re-parses to the same set.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sumsetlab/core.hpp"

namespace sumsetlab {

namespace detail {

inline std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

inline std::int32_t parse_element(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw ParseError("set literal: empty element");
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError("set literal: bad integer '" + std::string(token) + "'");
  if (value < std::numeric_limits<std::int32_t>::min() ||
      value > std::numeric_limits<std::int32_t>::max())
    throw ParseError("set literal: element out of the 32-bit window");
  return static_cast<std::int32_t>(value);
}

inline IntSet parse_json_array(std::string_view text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("set literal: ") + e.what());
  }
  if (!parsed.is_array()) throw ParseError("set literal: expected a JSON array");
  std::vector<std::int32_t> xs;
  xs.reserve(parsed.size());
  for (const auto& item : parsed) {
    if (!item.is_number_integer())
      throw ParseError("set literal: JSON array must hold integers only");
    const std::int64_t value = item.get<std::int64_t>();
    if (value < std::numeric_limits<std::int32_t>::min() ||
        value > std::numeric_limits<std::int32_t>::max())
      throw ParseError("set literal: element out of the 32-bit window");
    xs.push_back(static_cast<std::int32_t>(value));
  }
  if (xs.empty()) throw ParseError("set literal: a set must be nonempty");
  return IntSet(std::move(xs));
}

}  // namespace detail

inline IntSet parse_set_literal(std::string_view text) {
  const std::string_view body = detail::trim(text);
  if (body.empty()) throw ParseError("set literal: empty input");
  if (body.front() == '[') return detail::parse_json_array(body);
  std::vector<std::int32_t> xs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    xs.push_back(detail::parse_element(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntSet(std::move(xs));
}

inline std::string format_set(const IntSet& s) {
  std::string out;
  for (auto x : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

// A leading '@' names a file whose contents are the literal.
inline IntSet load_set_argument(const std::string& argument) {
  if (!argument.empty() && argument.front() == '@') {
    std::ifstream in(argument.substr(1));
    if (!in) throw ParseError("set literal: cannot read file '" + argument.substr(1) + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_set_literal(buffer.str());
  }
  return parse_set_literal(argument);
}

}  // namespace sumsetlab
