#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace joliet {

/// A leaf value stored in a tree node: string, int, bool or double.
using Scalar = std::variant<std::string, std::int64_t, bool, double>;

enum class ScalarKind { String, Int, Bool, Double };

inline ScalarKind kind_of(const Scalar& s) {
  return static_cast<ScalarKind>(s.index());
}

inline std::string_view kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::String: return "string";
    case ScalarKind::Int: return "int";
    case ScalarKind::Bool: return "bool";
    case ScalarKind::Double: return "double";
  }
  return "?";
}

/// Shortest decimal form that reads back to the same double.
inline std::string format_double(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

/// Human-facing rendering used by println: strings unquoted, numbers in
/// shortest round-trip form, bools as true/false.
inline std::string format_scalar(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return std::to_string(v);
        }
      },
      s);
}

inline std::string quote_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

/// Typed rendering: strings are quoted so the store dump distinguishes
/// "1" from 1.
inline std::string format_scalar_typed(const Scalar& s) {
  if (const auto* str = std::get_if<std::string>(&s)) return quote_string(*str);
  return format_scalar(s);
}

}  // namespace joliet
