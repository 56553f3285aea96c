#include <gtest/gtest.h>

#include "joliet/interp.hpp"
#include "joliet/syntax/parser.hpp"
#include "joliet/syntax/printer.hpp"
#include "joliet/transform.hpp"
#include "support/corpus.hpp"
#include "support/program_gen.hpp"

using namespace joliet::syntax;
using joliet::transform::collect_identifiers;
using joliet::transform::desugar;
using joliet::transform::fresh_index_name;
using joliet::transform::FreshNameSource;

namespace {

std::string desugared_text(const std::string& src) { return pretty_print(desugar(parse_program(src))); }

bool mentions_arrow_foreach(const Stmt& s) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ForeachArrowStmt>) {
          return true;
        } else if constexpr (std::is_same_v<T, SeqStmt>) {
          for (const auto& i : n.items)
            if (mentions_arrow_foreach(*i)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, ForStmt> || std::is_same_v<T, ForeachColonStmt>) {
          return mentions_arrow_foreach(*n.body);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return mentions_arrow_foreach(*n.then_branch) ||
                 (n.else_branch && mentions_arrow_foreach(*n.else_branch));
        } else {
          return false;
        }
      },
      s.node);
}

}  // namespace

TEST(Transform, ArrowLoweringTemplate) {
  const auto text = desugared_text("main { foreach (var -> a.b) { println(var) } }");
  EXPECT_EQ(text,
            "main {\n"
            "  for ($fe_0 = 0, $fe_0 < #a.b, $fe_0++) {\n"
            "    var -> a.b[$fe_0];\n"
            "    println(var);\n"
            "  }\n"
            "}\n");
}

TEST(Transform, ForeachFreeProgramsAreUnchanged) {
  for (const char* name : {"indexed_for", "colon_nested", "alias", "ifelse", "arith", "empty", "port"}) {
    auto p = parse_program(joliet::testing::corpus_source(name));
    EXPECT_TRUE(equal(p, desugar(p))) << name;
  }
}

TEST(Transform, NestedLoopsGetDistinctNamesOutermostFirst) {
  const auto text = desugared_text(
      "main { foreach (r -> m.row) { foreach (c -> r.cell) { println(c) } }; "
      "foreach (x -> a.b) { println(x) } }");
  const auto outer = text.find("$fe_0 < #m.row");
  const auto inner = text.find("$fe_1 < #r.cell");
  const auto second = text.find("$fe_2 < #a.b");
  ASSERT_NE(outer, std::string::npos) << text;
  ASSERT_NE(inner, std::string::npos) << text;
  ASSERT_NE(second, std::string::npos) << text;
  EXPECT_LT(outer, inner);
  EXPECT_LT(inner, second);
  EXPECT_NE(text.find("c -> r.cell[$fe_1];"), std::string::npos) << text;
}

TEST(Transform, FreshNamesSkipTakenNames) {
  FreshNameSource src;
  EXPECT_EQ(fresh_index_name(src, {}), "$fe_0");
  EXPECT_EQ(fresh_index_name(src, {"$fe_1", "$fe_2"}), "$fe_3");
  FreshNameSource custom{0, "idx"};
  EXPECT_EQ(fresh_index_name(custom, {"idx0"}), "idx1");
}

TEST(Transform, GeneratedNamesAvoidEveryProgramIdentifier) {
  const std::string src =
      "interface I { OneWay: f(string) }\n"
      "main { $fe_0 = 1; a.$fe_1 = 2; foreach (v -> a.b) { x = $fe_3 } }";
  auto ids = collect_identifiers(parse_program(src));
  EXPECT_TRUE(ids.count("$fe_0") && ids.count("$fe_1") && ids.count("$fe_3") && ids.count("I"));
  const auto text = desugared_text(src);
  EXPECT_NE(text.find("$fe_2 < #a.b"), std::string::npos) << text;
}

TEST(Transform, DeploymentPartIsUntouched) {
  auto p = parse_program(joliet::testing::corpus_source("port"));
  auto d = desugar(p);
  EXPECT_EQ(pretty_print(d), pretty_print(p));
}

TEST(Transform, PositionsOfLoweredCodeAreTheLoopPosition) {
  auto d = desugar(parse_program("main {\n  foreach (v -> a.b) { x = 1 }\n}"));
  const auto& loop = std::get<SeqStmt>(d.main->node).items[0];
  EXPECT_TRUE(std::holds_alternative<ForStmt>(loop->node));
  EXPECT_EQ(loop->pos.line, 2);
  EXPECT_EQ(loop->pos.col, 3);
}

// Desugared programs contain no arrow-foreach; desugaring them again only
// re-prints (idempotence), and their text parses back to the same AST.
TEST(TransformProperty, DesugarIsTotalAndIdempotent) {
  for (std::uint32_t seed = 0; seed < 300; ++seed) {
    auto p = parse_program(joliet::testing::ProgramGen(seed).program());
    auto once = desugar(p);
    ASSERT_FALSE(mentions_arrow_foreach(*once.main)) << seed;
    ASSERT_TRUE(equal(once, desugar(once))) << seed;
    ASSERT_TRUE(equal(once, parse_program(pretty_print(once)))) << seed;
  }
}

// Every generated index name is absent from the source program.
TEST(TransformProperty, Hygiene) {
  for (std::uint32_t seed = 0; seed < 300; ++seed) {
    auto p = parse_program(joliet::testing::ProgramGen(seed).program());
    const auto before = collect_identifiers(p);
    const auto after = collect_identifiers(desugar(p));
    for (const auto& name : after) {
      if (before.count(name)) continue;
      ASSERT_EQ(name.rfind(kGeneratedPrefix, 0), 0u) << name;
    }
  }
}
