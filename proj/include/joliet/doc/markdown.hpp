#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace joliet::doc {

inline std::string escape_html(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace detail {

inline std::string render_inline(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '`') {
      auto close = text.find('`', i + 1);
      if (close != std::string_view::npos) {
        out += "<code>" + escape_html(text.substr(i + 1, close - i - 1)) + "</code>";
        i = close + 1;
        continue;
      }
    } else if (c == '*' && text.substr(i, 2) == "**") {
      auto close = text.find("**", i + 2);
      if (close != std::string_view::npos && close > i + 2) {
        out += "<strong>" + render_inline(text.substr(i + 2, close - i - 2)) + "</strong>";
        i = close + 2;
        continue;
      }
    } else if (c == '[') {
      auto mid = text.find(']', i + 1);
      if (mid != std::string_view::npos && mid + 1 < text.size() && text[mid + 1] == '(') {
        auto close = text.find(')', mid + 2);
        if (close != std::string_view::npos) {
          out += "<a href=\"" + escape_html(text.substr(mid + 2, close - mid - 2)) + "\">" +
                 render_inline(text.substr(i + 1, mid - i - 1)) + "</a>";
          i = close + 1;
          continue;
        }
      }
    }
    out += escape_html(text.substr(i, 1));
    ++i;
  }
  return out;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

inline bool blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

/// Heading level 1-3 for `#`, `##`, `###` followed by a space; else 0.
inline int heading_level(std::string_view line) {
  std::size_t n = 0;
  while (n < line.size() && line[n] == '#') ++n;
  if (n == 0 || n > 3 || n >= line.size() || line[n] != ' ') return 0;
  return static_cast<int>(n);
}

inline bool list_item(std::string_view line) { return line.substr(0, 2) == "- "; }

}  // namespace detail

/// Renders the supported markdown subset: `#`..`###` headings, paragraphs,
/// `- ` lists, `**bold**`, `` `code` `` and `[text](url)`. All text is
/// HTML-escaped; anything else passes through as escaped text. Blocks are
/// joined with newlines.
inline std::string render_html(std::string_view markdown) {
  std::vector<std::string> blocks;
  std::vector<std::string_view> paragraph;
  std::vector<std::string_view> items;

  auto flush = [&] {
    if (!paragraph.empty()) {
      std::string body;
      for (std::size_t k = 0; k < paragraph.size(); ++k) {
        if (k) body += "\n";
        body += detail::render_inline(paragraph[k]);
      }
      blocks.push_back("<p>" + body + "</p>");
      paragraph.clear();
    }
    if (!items.empty()) {
      std::string list = "<ul>";
      for (auto item : items) list += "<li>" + detail::render_inline(item) + "</li>";
      blocks.push_back(list + "</ul>");
      items.clear();
    }
  };

  for (auto line : detail::split_lines(markdown)) {
    if (detail::blank(line)) {
      flush();
    } else if (int level = detail::heading_level(line)) {
      flush();
      const auto tag = std::to_string(level);
      blocks.push_back("<h" + tag + ">" +
                       detail::render_inline(line.substr(static_cast<std::size_t>(level) + 1)) +
                       "</h" + tag + ">");
    } else if (detail::list_item(line)) {
      if (!paragraph.empty()) flush();
      items.push_back(line.substr(2));
    } else {
      if (!items.empty()) flush();
      paragraph.push_back(line);
    }
  }
  flush();

  std::string out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) out += "\n";
    out += blocks[k];
  }
  return out;
}

/// First blank-line-separated block of a markdown body, trimmed of
/// surrounding blank lines.
inline std::string first_paragraph(std::string_view markdown) {
  std::string out;
  for (auto line : detail::split_lines(markdown)) {
    if (detail::blank(line)) {
      if (!out.empty()) break;
      continue;
    }
    if (!out.empty()) out += "\n";
    out += line;
  }
  return out;
}

}  // namespace joliet::doc
