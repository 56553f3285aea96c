#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace joliet::syntax {

enum class TokenKind {
  Identifier,
  Keyword,
  StringLiteral,
  IntLiteral,
  DoubleLiteral,
  Punctuation,
  Arrow,  // ->
  Colon,  // :
  Hash,   // #
};

inline std::string_view token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::IntLiteral: return "int-literal";
    case TokenKind::DoubleLiteral: return "double-literal";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Arrow: return "arrow";
    case TokenKind::Colon: return "colon";
    case TokenKind::Hash: return "hash";
  }
  return "?";
}

/// Positions are 1-based; `col` is the column of the first character and
/// `len` the number of source bytes the token spans (string literals
/// include their quotes and escapes).
struct Token {
  TokenKind kind = TokenKind::Punctuation;
  std::string text;
  int line = 1;
  int col = 1;
  int len = 1;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::Punctuation, t); }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }

  friend bool operator==(const Token&, const Token&) = default;
};

/// A (line, col, len) triple pointing at one source token.
struct Span {
  int line = 0;
  int col = 0;
  int len = 0;

  bool contains(int l, int c) const { return l == line && c >= col && c < col + len; }
  friend bool operator==(const Span&, const Span&) = default;
};

inline Span span_of(const Token& t) { return {t.line, t.col, t.len}; }

inline constexpr std::array<std::string_view, 22> kKeywords = {
    "type",     "interface", "inputPort", "outputPort", "Location", "Protocol",
    "Interfaces", "RequestResponse", "OneWay", "main", "for", "foreach",
    "if",       "else",      "true",      "false",      "string",   "int",
    "bool",     "double",    "void",      "undefined"};

inline bool is_keyword(std::string_view word) {
  for (auto k : kKeywords)
    if (k == word) return true;
  return false;
}

inline bool is_native_type_name(std::string_view word) {
  return word == "string" || word == "int" || word == "bool" || word == "double" ||
         word == "void" || word == "undefined";
}

/// Prefix of compiler-generated identifiers. `$` never starts a user
/// identifier, so these names cannot be written by accident.
inline constexpr std::string_view kGeneratedPrefix = "$fe_";

class LexError : public std::runtime_error {
 public:
  LexError(int line, int col, const std::string& what)
      : std::runtime_error(what), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace joliet::syntax
