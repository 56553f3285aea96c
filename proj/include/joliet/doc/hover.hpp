#pragma once

#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <utility>

#include "joliet/doc/docdb.hpp"
#include "joliet/syntax/lexer.hpp"

namespace joliet::doc {

struct HoverResult {
  std::string word;
  Category category = Category::NotDocumentable;
  std::string markdown;
  bool html_available = true;
};

struct Categorized {
  std::string word;
  Category category = Category::NotDocumentable;
};

namespace detail {

inline std::optional<std::string_view> line_of(std::string_view source, int line) {
  if (line < 1) return std::nullopt;
  std::size_t start = 0;
  for (int l = 1; l < line; ++l) {
    auto nl = source.find('\n', start);
    if (nl == std::string_view::npos) return std::nullopt;
    start = nl + 1;
  }
  auto end = source.find('\n', start);
  if (end == std::string_view::npos) end = source.size();
  auto text = source.substr(start, end - start);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  return text;
}

inline bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Heuristics over the cursor's line alone, for buffers that do not parse.
inline Categorized categorize_line(std::string_view source, int line, int col) {
  auto text = line_of(source, line);
  if (!text || col < 1 || static_cast<std::size_t>(col) > text->size()) return {};
  const auto at = static_cast<std::size_t>(col - 1);
  if (!word_char((*text)[at])) return {std::string(1, (*text)[at]), Category::NotDocumentable};

  std::size_t begin = at, end = at;
  while (begin > 0 && word_char((*text)[begin - 1])) --begin;
  while (end < text->size() && word_char((*text)[end])) ++end;
  std::string word(text->substr(begin, end - begin));
  if (!syntax::detail::ident_start(word.front()) || syntax::is_keyword(word))
    return {word, Category::NotDocumentable};

  const std::string prefix(text->substr(0, begin));
  // Inside a comment or an open string literal.
  bool in_string = false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (in_string) {
      if (prefix[k] == '\\')
        ++k;
      else if (prefix[k] == '"')
        in_string = false;
    } else if (prefix[k] == '"') {
      in_string = true;
    } else if (prefix.compare(k, 2, "//") == 0) {
      return {word, Category::NotDocumentable};
    }
  }
  if (in_string) return {word, Category::NotDocumentable};

  static const std::regex protocol_clause(R"(\bProtocol\s*:\s*$)");
  static const std::regex interfaces_clause(
      R"(\bInterfaces\s*:\s*(?:[A-Za-z_][A-Za-z0-9_]*\s*,\s*)*$)");
  if (std::regex_search(prefix, protocol_clause)) return {word, Category::Protocol};
  static const std::regex interface_decl(R"(^\s*interface\s+$)");
  if (std::regex_search(prefix, interfaces_clause) || std::regex_search(prefix, interface_decl))
    return {word, Category::Interface};
  return {word, Category::NotDocumentable};
}

inline bool before(const syntax::Token& t, syntax::SourcePos p) {
  return t.line < p.line || (t.line == p.line && t.col < p.col);
}

}  // namespace detail

/// Decides what the word under the cursor is. With a parsed program only
/// identifiers in the deployment part whose spans the parser recorded as
/// a port's protocol, a port's interface list, or an interface declaration
/// name are documentable. Without one (the buffer does not parse) the
/// decision falls back to the line-based heuristics.
inline Categorized categorize(const syntax::Program* program, std::string_view source, int line,
                              int col) {
  if (!program) return detail::categorize_line(source, line, col);

  auto tok = syntax::token_at(source, line, col);
  if (!tok) return {};
  if (tok->kind != syntax::TokenKind::Identifier || !detail::before(*tok, program->main_pos))
    return {tok->text, Category::NotDocumentable};

  const auto span = syntax::span_of(*tok);
  for (const auto& port : program->ports) {
    if (port.protocol_span == span) return {tok->text, Category::Protocol};
    for (const auto& s : port.interface_spans)
      if (s == span) return {tok->text, Category::Interface};
  }
  for (const auto& decl : program->interfaces)
    if (decl.name_span == span) return {tok->text, Category::Interface};
  return {tok->text, Category::NotDocumentable};
}

inline std::optional<HoverResult> lookup(const DocDatabase& db, const std::string& word,
                                         Category category) {
  auto hit = [&](const std::map<std::string, std::string>& table) -> std::optional<HoverResult> {
    auto it = table.find(word);
    if (it == table.end() || it->second.empty()) return std::nullopt;
    return HoverResult{word, category, it->second, true};
  };
  switch (category) {
    case Category::Protocol:
      return hit(db.protocols);
    case Category::Interface:
      if (auto r = hit(db.source_interfaces)) return r;
      return hit(db.interfaces);
    case Category::NotDocumentable:
      break;
  }
  return std::nullopt;
}

/// Full pipeline: token under cursor -> category -> documentation.
inline std::optional<HoverResult> hover(const syntax::Program* program, std::string_view source,
                                        int line, int col, const DocDatabase& db) {
  auto c = categorize(program, source, line, col);
  if (c.category == Category::NotDocumentable) return std::nullopt;
  return lookup(db, c.word, c.category);
}

}  // namespace joliet::doc
