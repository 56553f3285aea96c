#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "joliet/syntax/token.hpp"

namespace joliet::syntax {

namespace detail {

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
inline bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    return out;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, std::size_t start, int line, int col) const {
    std::string text(src_.substr(start, pos_ - start));
    int len = static_cast<int>(text.size());
    return Token{kind, std::move(text), line, col, len};
  }

  Token next() {
    const std::size_t start = pos_;
    const int line = line_;
    const int col = col_;
    const char c = peek();

    if (ident_start(c)) {
      while (ident_char(peek())) advance();
      auto tok = make(TokenKind::Identifier, start, line, col);
      if (is_keyword(tok.text)) tok.kind = TokenKind::Keyword;
      return tok;
    }
    if (c == '$') {
      // Generated identifiers: $fe_<digits>.
      if (src_.substr(pos_, kGeneratedPrefix.size()) == kGeneratedPrefix &&
          digit(peek(kGeneratedPrefix.size()))) {
        for (std::size_t i = 0; i < kGeneratedPrefix.size(); ++i) advance();
        while (digit(peek())) advance();
        if (!ident_char(peek())) return make(TokenKind::Identifier, start, line, col);
      }
      throw LexError(line, col, "illegal character '$'");
    }
    if (digit(c)) return number(start, line, col);
    if (c == '"') return string_literal(start, line, col);

    if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      return make(TokenKind::Arrow, start, line, col);
    }
    if (c == ':') {
      advance();
      return make(TokenKind::Colon, start, line, col);
    }
    if (c == '#') {
      advance();
      return make(TokenKind::Hash, start, line, col);
    }

    static constexpr std::string_view two_char[] = {"<=", ">=", "==", "!=", "&&", "||", "++"};
    for (auto op : two_char) {
      if (c == op[0] && peek(1) == op[1]) {
        advance();
        advance();
        return make(TokenKind::Punctuation, start, line, col);
      }
    }
    static constexpr std::string_view one_char = "{}()[].,;=+-*/<>!@";
    if (one_char.find(c) != std::string_view::npos) {
      advance();
      return make(TokenKind::Punctuation, start, line, col);
    }
    throw LexError(line, col, std::string("illegal character '") + c + "'");
  }

  Token number(std::size_t start, int line, int col) {
    while (digit(peek())) advance();
    bool is_double = false;
    if (peek() == '.' && digit(peek(1))) {
      is_double = true;
      advance();
      while (digit(peek())) advance();
      if ((peek() == 'e' || peek() == 'E') &&
          (digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && digit(peek(2))))) {
        advance();
        if (peek() == '+' || peek() == '-') advance();
        while (digit(peek())) advance();
      }
    }
    if (ident_char(peek())) throw LexError(line_, col_, "malformed number");
    return make(is_double ? TokenKind::DoubleLiteral : TokenKind::IntLiteral, start, line, col);
  }

  Token string_literal(std::size_t start, int line, int col) {
    advance();  // opening quote
    while (true) {
      if (pos_ >= src_.size() || peek() == '\n')
        throw LexError(line, col, "unterminated string literal");
      char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        char e = peek(1);
        if (e != '"' && e != '\\') throw LexError(line_, col_, "unsupported escape sequence");
        advance();
      }
      advance();
    }
    return make(TokenKind::StringLiteral, start, line, col);
  }
};

}  // namespace detail

/// Splits source text into tokens. Whitespace and `//` comments are
/// skipped; every other byte belongs to exactly one token, whose `text`
/// is the raw lexeme (string literals keep their quotes and escapes).
inline std::vector<Token> tokenize(std::string_view source) {
  return detail::Lexer(source).run();
}

/// Decodes the raw lexeme of a string-literal token.
inline std::string unescape_string_literal(std::string_view raw) {
  std::string out;
  for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
    if (raw[i] == '\\') ++i;
    out += raw[i];
  }
  return out;
}

/// The token under the cursor, if any. Tokens never span lines.
inline std::optional<Token> token_at(const std::vector<Token>& tokens, int line, int col) {
  for (const auto& t : tokens) {
    if (t.line > line) break;
    if (span_of(t).contains(line, col)) return t;
  }
  return std::nullopt;
}

/// Convenience overload; absent when the source does not lex.
inline std::optional<Token> token_at(std::string_view source, int line, int col) {
  if (line < 1 || col < 1) return std::nullopt;
  try {
    return token_at(tokenize(source), line, col);
  } catch (const LexError&) {
    return std::nullopt;
  }
}

}  // namespace joliet::syntax
