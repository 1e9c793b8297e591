#pragma once
// Deterministic text formatting and strict parsing helpers.
//
// Doubles are rendered with std::to_chars (shortest round-trip form), so the
// same build always produces the same bytes — a requirement for the
// reproducibility contract on CSV outputs.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "edenlab/core/error.hpp"

namespace edenlab {

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

/// Fixed-precision decimal form (for human-facing report lines only; never
/// used in byte-compared artifacts).
inline std::string format_fixed(double x, int precision) {
  char buf[128];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

/// Strict unsigned parse: the whole token must be consumed.
inline std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw usage_error(std::string(what) + ": expected a non-negative integer, got '" +
                      std::string(s) + "'");
  return v;
}

/// Strict signed parse.
inline std::int64_t parse_i64(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw usage_error(std::string(what) + ": expected an integer, got '" +
                      std::string(s) + "'");
  return v;
}

/// Strict double parse.
inline double parse_double(std::string_view s, std::string_view what) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw usage_error(std::string(what) + ": expected a number, got '" +
                      std::string(s) + "'");
  return v;
}

/// Splits on a single-character separator; keeps empty fields.
inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

/// Joins with a separator.
inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// Parses a size list such as "1e3,1e4,5e4" into exact integers. Scientific
/// notation is accepted but must denote an integer value.
inline std::vector<std::uint64_t> parse_size_list(std::string_view s) {
  std::vector<std::uint64_t> out;
  for (const auto& tok : split(s, ',')) {
    if (tok.empty()) throw usage_error("size list: empty entry in '" + std::string(s) + "'");
    const double d = parse_double(tok, "size list entry");
    if (!(d >= 1.0) || d > 9e15 || d != static_cast<double>(static_cast<std::uint64_t>(d)))
      throw usage_error("size list entry '" + tok + "' is not a positive integer");
    out.push_back(static_cast<std::uint64_t>(d));
  }
  return out;
}

} // namespace edenlab
