#include <gtest/gtest.h>

#include <random>

#include "joliet/syntax/lexer.hpp"

using namespace joliet::syntax;

namespace {

std::vector<std::pair<TokenKind, std::string>> kinds(const std::vector<Token>& toks) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const auto& t : toks) out.emplace_back(t.kind, t.text);
  return out;
}

}  // namespace

TEST(Lexer, SegmentsAPath) {
  auto toks = tokenize("a.b[i]");
  std::vector<std::pair<TokenKind, std::string>> want = {
      {TokenKind::Identifier, "a"},  {TokenKind::Punctuation, "."},
      {TokenKind::Identifier, "b"},  {TokenKind::Punctuation, "["},
      {TokenKind::Identifier, "i"},  {TokenKind::Punctuation, "]"}};
  EXPECT_EQ(kinds(toks), want);
}

TEST(Lexer, ArrowIsOneToken) {
  auto toks = tokenize("var1 -> a.b.c.d[1]");
  int arrows = 0;
  for (const auto& t : toks) {
    if (t.kind == TokenKind::Arrow) {
      ++arrows;
      EXPECT_EQ(t.col, 6);
      EXPECT_EQ(t.len, 2);
    }
    EXPECT_FALSE(t.is_punct("-"));
    EXPECT_FALSE(t.is_punct(">"));
  }
  EXPECT_EQ(arrows, 1);
}

TEST(Lexer, EmptyInput) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize("  // only a comment\n\t").empty());
}

TEST(Lexer, KeywordsAndNativeTypes) {
  for (std::string_view k : kKeywords) {
    auto toks = tokenize(k);
    ASSERT_EQ(toks.size(), 1u);
    EXPECT_EQ(toks[0].kind, TokenKind::Keyword) << k;
  }
  EXPECT_EQ(tokenize("println")[0].kind, TokenKind::Identifier);
  EXPECT_EQ(tokenize("sodep")[0].kind, TokenKind::Identifier);
}

TEST(Lexer, HashColonAndOperators) {
  auto toks = tokenize("#a.b : <= >= == != && || ++ ! @");
  EXPECT_EQ(toks[0].kind, TokenKind::Hash);
  EXPECT_EQ(toks[4].kind, TokenKind::Colon);
  std::vector<std::string> ops;
  for (std::size_t k = 5; k < toks.size(); ++k) ops.push_back(toks[k].text);
  EXPECT_EQ(ops, (std::vector<std::string>{"<=", ">=", "==", "!=", "&&", "||", "++", "!", "@"}));
}

TEST(Lexer, PositionsAreOneBased) {
  auto toks = tokenize("main {\n  x = 10\n}");
  ASSERT_EQ(toks.size(), 6u);
  EXPECT_EQ(toks[2].line, 2);
  EXPECT_EQ(toks[2].col, 3);
  EXPECT_EQ(toks[4].text, "10");
  EXPECT_EQ(toks[4].col, 7);
  EXPECT_EQ(toks[4].len, 2);
  EXPECT_EQ(toks[5].line, 3);
}

TEST(Lexer, StringLiteralsKeepRawText) {
  auto toks = tokenize(R"(x = "a \"q\" \\ b")");
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_EQ(toks[2].kind, TokenKind::StringLiteral);
  EXPECT_EQ(toks[2].text, R"("a \"q\" \\ b")");
  EXPECT_EQ(unescape_string_literal(toks[2].text), R"(a "q" \ b)");
}

TEST(Lexer, Numbers) {
  auto toks = tokenize("12 3.5 1.0e+20 a[1].c");
  EXPECT_EQ(toks[0].kind, TokenKind::IntLiteral);
  EXPECT_EQ(toks[1].kind, TokenKind::DoubleLiteral);
  EXPECT_EQ(toks[2].kind, TokenKind::DoubleLiteral);
  EXPECT_EQ(toks[2].text, "1.0e+20");
  // `1` followed by `.c` is an index, not a double.
  EXPECT_EQ(toks[5].kind, TokenKind::IntLiteral);
  EXPECT_TRUE(toks[7].is_punct("."));
}

TEST(Lexer, GeneratedIdentifiers) {
  auto toks = tokenize("$fe_12 < #a");
  EXPECT_EQ(toks[0].kind, TokenKind::Identifier);
  EXPECT_EQ(toks[0].text, "$fe_12");
  EXPECT_THROW(tokenize("$x"), LexError);
  EXPECT_THROW(tokenize("$fe_"), LexError);
  EXPECT_THROW(tokenize("$fe_1x"), LexError);
}

TEST(Lexer, Errors) {
  try {
    tokenize("x = \"open");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.col(), 5);
  }
  try {
    tokenize("main {\n  x = 1 ^ 2\n}");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.col(), 9);
  }
  EXPECT_THROW(tokenize("a & b"), LexError);
  EXPECT_THROW(tokenize(R"("bad \n escape")"), LexError);
  EXPECT_THROW(tokenize("\"multi\nline\""), LexError);
}

TEST(Lexer, TokenAt) {
  const std::string src = "outputPort P { Location: \"socket://x:80\" Protocol: sodep Interfaces: I }";
  const int sodep = static_cast<int>(src.find("sodep")) + 1;
  auto t = token_at(src, 1, sodep + 3);  // on the `e`/`p` of sodep
  ASSERT_TRUE(t);
  EXPECT_EQ(t->text, "sodep");
  EXPECT_EQ(t->kind, TokenKind::Identifier);

  auto brace = token_at(src, 1, static_cast<int>(src.find('{')) + 1);
  ASSERT_TRUE(brace);
  EXPECT_TRUE(brace->is_punct("{"));

  EXPECT_FALSE(token_at(src, 1, static_cast<int>(src.size()) + 5));
  EXPECT_FALSE(token_at(src, 1, sodep - 1));  // the space before
  EXPECT_FALSE(token_at(src, 2, 1));
  EXPECT_FALSE(token_at(src, 0, 1));
}

TEST(Lexer, CommentsAreNotTokens) {
  const std::string src = "x = 1 // trailing a.b\ny = 2";
  auto toks = tokenize(src);
  EXPECT_EQ(toks.size(), 6u);
  EXPECT_FALSE(token_at(src, 1, 12));
}

// Property: whitespace, comments and token texts tile the source exactly.
TEST(LexerProperty, TokensAndTriviaReproduceSource) {
  const std::vector<std::string> pieces = {
      "a", "b1", "_x", "main", "foreach", "->", ":", "#", "[", "]", "{", "}", "(", ")",
      ".", ",", ";", "=", "==", "<=", "+", "++", "-", "*", "/", "!", "12", "3.25",
      "\"s\"", "\"q\\\"\"", "$fe_3", "@"};
  const std::vector<std::string> gaps = {" ", "\n", "\t", "  ", " // note\n"};
  std::mt19937 rng(7);
  for (int round = 0; round < 300; ++round) {
    std::string src;
    const int n = static_cast<int>(rng() % 30);
    for (int k = 0; k < n; ++k) {
      src += pieces[rng() % pieces.size()];
      src += gaps[rng() % gaps.size()];
    }
    auto toks = tokenize(src);
    // Rebuild by placing each token at its (line, col).
    std::vector<std::string> lines(1);
    for (char c : src) {
      if (c == '\n')
        lines.emplace_back();
      else
        lines.back() += c;
    }
    std::vector<std::string> covered = lines;
    for (auto& l : covered)
      for (auto& c : l) c = ' ';
    for (const auto& t : toks) {
      auto& line = lines[static_cast<std::size_t>(t.line - 1)];
      ASSERT_EQ(line.substr(static_cast<std::size_t>(t.col - 1), t.text.size()), t.text);
      ASSERT_EQ(static_cast<int>(t.text.size()), t.len);
      for (int k = 0; k < t.len; ++k) {
        char& slot = covered[static_cast<std::size_t>(t.line - 1)][static_cast<std::size_t>(t.col - 1 + k)];
        ASSERT_EQ(slot, ' ') << "overlapping tokens in: " << src;
        slot = 'x';
      }
    }
    // Every uncovered character is whitespace or part of a comment.
    for (std::size_t l = 0; l < lines.size(); ++l) {
      const auto comment = lines[l].find("//");
      for (std::size_t c = 0; c < lines[l].size(); ++c) {
        if (covered[l][c] == 'x') continue;
        const char ch = lines[l][c];
        const bool in_comment = comment != std::string::npos && c >= comment;
        ASSERT_TRUE(in_comment || ch == ' ' || ch == '\t') << "uncovered '" << ch << "' in: " << src;
      }
    }
  }
}
