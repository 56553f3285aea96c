#pragma once

// Naive HTML validator for renderer output: tags must be from the known
// set and balanced, and text outside tags may not contain a raw '<', '>'
// or an '&' that does not start one of the four entities we emit.

#include <string>
#include <string_view>
#include <vector>

namespace joliet::testing {

inline bool entity_at(std::string_view html, std::size_t i) {
  for (std::string_view e : {"&amp;", "&lt;", "&gt;", "&quot;"})
    if (html.substr(i, e.size()) == e) return true;
  return false;
}

inline bool well_formed_html(std::string_view html, std::string* why = nullptr) {
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  static const std::vector<std::string_view> known = {"h1", "h2", "h3", "p", "strong",
                                                      "code", "ul", "li", "a"};
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < html.size()) {
    const char c = html[i];
    if (c == '<') {
      auto close = html.find('>', i);
      if (close == std::string_view::npos) return bad("unterminated tag");
      std::string_view tag = html.substr(i + 1, close - i - 1);
      const bool end = !tag.empty() && tag[0] == '/';
      if (end) tag.remove_prefix(1);
      std::string_view name = tag.substr(0, tag.find(' '));
      bool ok = false;
      for (auto k : known) ok = ok || k == name;
      if (!ok) return bad("unknown tag <" + std::string(tag) + ">");
      if (end) {
        if (stack.empty() || stack.back() != name) return bad("unbalanced </" + std::string(name) + ">");
        stack.pop_back();
      } else {
        std::string_view attrs = tag.substr(name.size());
        if (name == "a") {
          // exactly: href="..." with no raw quote inside
          if (attrs.substr(0, 7) != " href=\"" || attrs.back() != '"' ||
              attrs.substr(7, attrs.size() - 8).find('"') != std::string_view::npos)
            return bad("bad anchor attributes");
        } else if (!attrs.empty()) {
          return bad("unexpected attributes");
        }
        stack.emplace_back(name);
      }
      i = close + 1;
    } else if (c == '>') {
      return bad("raw '>' in text");
    } else if (c == '&') {
      if (!entity_at(html, i)) return bad("raw '&' in text");
      ++i;
    } else {
      ++i;
    }
  }
  if (!stack.empty()) return bad("unclosed <" + stack.back() + ">");
  return true;
}

}  // namespace joliet::testing
