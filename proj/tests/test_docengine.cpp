#include <gtest/gtest.h>

#include "joliet/doc/docdb.hpp"
#include "joliet/doc/hover.hpp"
#include "joliet/syntax/parser.hpp"
#include "support/corpus.hpp"

using namespace joliet::doc;
using joliet::syntax::parse_program;
using joliet::testing::fixture;

namespace {

const std::string kPortSource = joliet::testing::corpus_source("port");

/// 1-based (line, col) of the n-th occurrence of `needle`, plus `offset`.
std::pair<int, int> locate(const std::string& src, const std::string& needle, int nth = 0,
                           int offset = 0) {
  std::size_t at = src.find(needle);
  for (int k = 0; k < nth; ++k) at = src.find(needle, at + 1);
  EXPECT_NE(at, std::string::npos) << needle;
  int line = 1;
  std::size_t line_start = 0;
  for (std::size_t k = 0; k < at; ++k)
    if (src[k] == '\n') {
      ++line;
      line_start = k + 1;
    }
  return {line, static_cast<int>(at - line_start) + 1 + offset};
}

Categorized categorize_at(const std::string& src, const std::string& needle, int nth = 0,
                          int offset = 0, bool parsed = true) {
  auto [line, col] = locate(src, needle, nth, offset);
  if (!parsed) return categorize(nullptr, src, line, col);
  auto program = parse_program(src);
  return categorize(&program, src, line, col);
}

}  // namespace

TEST(DocDb, LoadSingleFile) {
  auto db = load_doc_db({fixture("docs_b.json")});
  EXPECT_EQ(db.protocols.size(), 2u);
  EXPECT_EQ(db.protocols["soap"], "Fixture B body for soap.");
  EXPECT_TRUE(db.interfaces.empty());
}

TEST(DocDb, LaterFilesOverride) {
  auto db = load_doc_db({fixture("docs_a.json"), fixture("docs_b.json")});
  EXPECT_EQ(db.protocols["http"], "Fixture B body for http.");
  EXPECT_EQ(db.protocols["sodep"], "# sodep\n\nFixture A body for sodep.");
  auto reversed = load_doc_db({fixture("docs_b.json"), fixture("docs_a.json")});
  EXPECT_EQ(reversed.protocols["http"], "Fixture A body for http.");
}

TEST(DocDb, OverlayOverBuiltins) {
  auto db = load_doc_db({fixture("docs_a.json")}, nullptr, builtin_doc_db());
  EXPECT_EQ(db.protocols["sodep"], "# sodep\n\nFixture A body for sodep.");
  EXPECT_NE(db.protocols["xmlrpc"].find("xmlrpc"), std::string::npos);
}

TEST(DocDb, MergeIsAssociative) {
  const std::vector<std::string> files = {fixture("docs_a.json"), fixture("docs_b.json"),
                                          fixture("docs_c.json")};
  auto all = load_doc_db(files);
  auto staged = load_doc_db({files[2]}, nullptr, load_doc_db({files[0], files[1]}));
  EXPECT_EQ(all, staged);
}

TEST(DocDb, MalformedFiles) {
  for (const char* bad : {"docs_bad_key.json", "docs_bad_body.json", "docs_truncated.json", "missing.json"}) {
    try {
      load_doc_db({fixture(bad)});
      ADD_FAILURE() << bad;
    } catch (const DocDbError& e) {
      EXPECT_EQ(e.path(), fixture(bad));
    }
  }
}

TEST(DocDb, SynthesizesDeclaredInterfaces) {
  auto program = parse_program("interface I { OneWay: f(string) }\nmain { }");
  auto db = load_doc_db({}, &program);
  ASSERT_TRUE(db.source_interfaces.count("I"));
  const auto& md = db.source_interfaces["I"];
  EXPECT_NE(md.find("f"), std::string::npos);
  EXPECT_NE(md.find("OneWay"), std::string::npos);
  EXPECT_NE(md.find("`string`"), std::string::npos);
}

TEST(Categorize, ProtocolAndInterfaceTokens) {
  auto c = categorize_at(kPortSource, "sodep", 0, 2);
  EXPECT_EQ(c.word, "sodep");
  EXPECT_EQ(c.category, Category::Protocol);
  EXPECT_EQ(categorize_at(kPortSource, "http").category, Category::Protocol);
  EXPECT_EQ(categorize_at(kPortSource, "Interfaces: I", 0, 12).category, Category::Interface);
  EXPECT_EQ(categorize_at(kPortSource, "Greeter, I", 0, 2).category, Category::Interface);
  EXPECT_EQ(categorize_at(kPortSource, "Greeter, I", 0, 9).category, Category::Interface);
  EXPECT_EQ(categorize_at(kPortSource, "interface Greeter", 0, 10).category, Category::Interface);
}

TEST(Categorize, EverythingElseIsNotDocumentable) {
  auto brace = categorize_at(kPortSource, "{");
  EXPECT_EQ(brace.word, "{");
  EXPECT_EQ(brace.category, Category::NotDocumentable);
  EXPECT_EQ(categorize_at(kPortSource, "outputPort").category, Category::NotDocumentable);
  EXPECT_EQ(categorize_at(kPortSource, "Protocol").category, Category::NotDocumentable);
  EXPECT_EQ(categorize_at(kPortSource, "outputPort P", 0, 11).category, Category::NotDocumentable);
  EXPECT_EQ(categorize_at(kPortSource, "socket").category, Category::NotDocumentable);
  EXPECT_EQ(categorize_at(kPortSource, "Request)").category, Category::NotDocumentable);
  EXPECT_EQ(categorize_at(kPortSource, "x = 1").category, Category::NotDocumentable);
  EXPECT_EQ(categorize_at(kPortSource, "println").category, Category::NotDocumentable);
}

TEST(Categorize, BehaviorPartIsIgnoredEvenForPortLikeNames) {
  const std::string src =
      "interface I { OneWay: f(string) }\n"
      "outputPort P { Location: \"l\" Protocol: sodep Interfaces: I }\n"
      "main { sodep = 1; I = 2 }\n";
  EXPECT_EQ(categorize_at(src, "sodep", 1).category, Category::NotDocumentable);
  EXPECT_EQ(categorize_at(src, "I = 2").category, Category::NotDocumentable);
}

TEST(Categorize, DegradedModeMatchesOnFixtures) {
  const std::vector<std::tuple<std::string, int, int>> cases = {
      {"sodep", 0, 2}, {"http", 0, 0}, {"Interfaces: I", 0, 12}, {"Greeter, I", 0, 9},
      {"{", 0, 0},     {"outputPort", 0, 0}, {"x = 1", 0, 0}, {"socket", 0, 0},
      {"interface Greeter", 0, 10}};
  for (const auto& [needle, nth, offset] : cases) {
    auto parsed = categorize_at(kPortSource, needle, nth, offset, true);
    auto degraded = categorize_at(kPortSource, needle, nth, offset, false);
    EXPECT_EQ(parsed.category, degraded.category) << needle;
    if (parsed.category != Category::NotDocumentable) {
      EXPECT_EQ(parsed.word, degraded.word) << needle;
    }
  }
}

TEST(Categorize, DegradedModeOnBrokenBuffer) {
  const auto src = joliet::testing::read_text(fixture("port_unparsed.jol"));
  EXPECT_THROW(parse_program(src), joliet::syntax::ParseError);
  EXPECT_EQ(categorize_at(src, "sodep", 0, 0, false).category, Category::Protocol);
  EXPECT_EQ(categorize_at(src, "Greeter, I", 0, 9, false).category, Category::Interface);
  EXPECT_EQ(categorize_at(src, "Greeter", 0, 0, false).category, Category::Interface);
  EXPECT_EQ(categorize_at(src, "Location", 0, 0, false).category, Category::NotDocumentable);
  // Comments and strings.
  const std::string tricky = "// Protocol: sodep\nx = \"Protocol: sodep\" Protocol: http";
  EXPECT_EQ(categorize(nullptr, tricky, 1, 15).category, Category::NotDocumentable);
  EXPECT_EQ(categorize(nullptr, tricky, 2, 17).category, Category::NotDocumentable);
  EXPECT_EQ(categorize(nullptr, tricky, 2, 35).category, Category::Protocol);
}

TEST(Lookup, TablesAndPrecedence) {
  auto program = parse_program(kPortSource);
  auto db = load_doc_db({fixture("docs_a.json")}, &program, builtin_doc_db());
  auto sodep = lookup(db, "sodep", Category::Protocol);
  ASSERT_TRUE(sodep);
  EXPECT_EQ(sodep->markdown, "# sodep\n\nFixture A body for sodep.");
  EXPECT_FALSE(lookup(db, "nosuch", Category::Protocol));
  EXPECT_FALSE(lookup(db, "sodep", Category::Interface));
  auto iface = lookup(db, "I", Category::Interface);
  ASSERT_TRUE(iface);
  EXPECT_NE(iface->markdown.find("declared in this file"), std::string::npos);
  // Without the program the file entry is used.
  auto file_only = load_doc_db({fixture("docs_a.json")});
  EXPECT_EQ(lookup(file_only, "I", Category::Interface)->markdown,
            "Interface I as described by fixture A.");
}

TEST(Hover, Pipeline) {
  auto program = parse_program(kPortSource);
  auto db = load_doc_db({}, &program, builtin_doc_db());
  auto [l, c] = locate(kPortSource, "sodep");
  auto hit = hover(&program, kPortSource, l, c, db);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->category, Category::Protocol);
  EXPECT_FALSE(hit->markdown.empty());

  auto [wl, wc] = locate(kPortSource, " Protocol: sodep");
  EXPECT_FALSE(hover(&program, kPortSource, wl, wc, db));  // whitespace

  auto [il, ic] = locate(kPortSource, "Interfaces: I", 0, 12);
  auto iface = hover(&program, kPortSource, il, ic, db);
  ASSERT_TRUE(iface);
  EXPECT_EQ(iface->category, Category::Interface);
  EXPECT_NE(iface->markdown.find("| `f` | OneWay |"), std::string::npos);

  EXPECT_FALSE(hover(&program, kPortSource, 999, 1, db));
}

// Scanning every cursor position: only protocol and interface spans
// produce results, and both modes agree everywhere on this file.
TEST(HoverProperty, OnlyAttributedSpansAreDocumented) {
  auto program = parse_program(kPortSource);
  auto db = load_doc_db({}, &program, builtin_doc_db());
  int line = 1, col = 1, hits = 0;
  for (char ch : kPortSource) {
    auto parsed = categorize(&program, kPortSource, line, col);
    auto degraded = categorize(nullptr, kPortSource, line, col);
    EXPECT_EQ(parsed.category, degraded.category) << line << ":" << col;
    if (auto h = hover(&program, kPortSource, line, col, db)) {
      ++hits;
      auto tok = joliet::syntax::token_at(kPortSource, line, col);
      ASSERT_TRUE(tok);
      EXPECT_EQ(tok->kind, joliet::syntax::TokenKind::Identifier);
      EXPECT_LT(line, program.main_pos.line);
    }
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  EXPECT_GT(hits, 0);
}
