#pragma once

#include <charconv>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "joliet/syntax/ast.hpp"
#include "joliet/syntax/lexer.hpp"

namespace joliet::syntax {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, std::string expected, std::string found)
      : std::runtime_error("expected " + expected + ", found " + found),
        line_(line),
        col_(col),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int col_;
  std::string expected_;
  std::string found_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    Program p;
    while (!at_end() && !peek().is_keyword("main")) {
      const Token& t = peek();
      if (t.is_keyword("type")) {
        p.types.push_back(type_decl());
      } else if (t.is_keyword("interface")) {
        p.interfaces.push_back(interface_decl());
      } else if (t.is_keyword("inputPort") || t.is_keyword("outputPort")) {
        p.ports.push_back(port_decl());
      } else {
        fail("declaration or 'main'");
      }
    }
    const Token& m = expect_keyword("main");
    p.main_pos = {m.line, m.col};
    p.main = block();
    if (!at_end()) fail("end of input");
    validate(p);
    return p;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  // -- token helpers --------------------------------------------------------

  bool at_end() const { return pos_ >= toks_.size(); }

  const Token& peek(std::size_t ahead = 0) const {
    static const Token eof{TokenKind::Punctuation, "", 0, 0, 1};
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : eof;
  }

  std::string describe(const Token& t) const {
    if (&t == &peek() && at_end()) return "end of input";
    return "'" + t.text + "'";
  }

  [[noreturn]] void fail(const std::string& expected) const { fail_at(peek(), expected); }

  [[noreturn]] void fail_at(const Token& t, const std::string& expected) const {
    if (at_end() && &t == &peek()) {
      int line = toks_.empty() ? 1 : toks_.back().line;
      int col = toks_.empty() ? 1 : toks_.back().col + toks_.back().len;
      throw ParseError(line, col, expected, "end of input");
    }
    throw ParseError(t.line, t.col, expected, "'" + t.text + "'");
  }

  const Token& advance() { return toks_[pos_++]; }

  bool check_punct(std::string_view p) const { return !at_end() && peek().is_punct(p); }

  bool match_punct(std::string_view p) {
    if (!check_punct(p)) return false;
    ++pos_;
    return true;
  }

  const Token& expect_punct(std::string_view p) {
    if (!check_punct(p)) fail("'" + std::string(p) + "'");
    return advance();
  }

  const Token& expect_keyword(std::string_view k) {
    if (at_end() || !peek().is_keyword(k)) fail("'" + std::string(k) + "'");
    return advance();
  }

  const Token& expect_kind(TokenKind k, const std::string& what) {
    if (at_end() || peek().kind != k) fail(what);
    return advance();
  }

  const Token& expect_identifier() { return expect_kind(TokenKind::Identifier, "identifier"); }

  static SourcePos pos_of(const Token& t) { return {t.line, t.col}; }

  // -- deployment part ------------------------------------------------------

  TypeDecl type_decl() {
    expect_keyword("type");
    TypeDecl d;
    const Token& name = expect_identifier();
    d.name = name.text;
    d.name_span = span_of(name);
    expect_kind(TokenKind::Colon, "':'");
    d.body = type_body();
    return d;
  }

  NativeType native_type() {
    if (at_end() || peek().kind != TokenKind::Keyword) fail("native type");
    auto t = native_type_from(peek().text);
    if (!t) fail("native type");
    advance();
    return *t;
  }

  TypeBody type_body() {
    TypeBody body;
    body.root = native_type();
    if (match_punct("{")) {
      std::set<std::string> seen;
      while (!check_punct("}")) {
        expect_punct(".");
        const Token& name = expect_identifier();
        if (!seen.insert(name.text).second) fail_at(name, "unique subnode name");
        SubnodeDecl sub;
        sub.name = name.text;
        if (match_punct("[")) sub.cardinality = cardinality();
        expect_kind(TokenKind::Colon, "':'");
        sub.body = std::make_shared<const TypeBody>(type_body());
        body.subnodes.push_back(std::move(sub));
      }
      expect_punct("}");
    }
    return body;
  }

  std::int64_t int_value(const Token& t) const {
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || end != t.text.data() + t.text.size())
      fail_at(t, "integer within 64-bit range");
    return v;
  }

  Cardinality cardinality() {
    Cardinality c;
    c.min = int_value(expect_kind(TokenKind::IntLiteral, "minimum cardinality"));
    expect_punct(",");
    if (match_punct("*")) {
      c.max = kUnbounded;
    } else {
      const Token& mx = expect_kind(TokenKind::IntLiteral, "maximum cardinality or '*'");
      c.max = int_value(mx);
      if (c.max < c.min) fail_at(mx, "maximum cardinality >= minimum");
    }
    expect_punct("]");
    return c;
  }

  std::string type_ref() {
    if (!at_end() && peek().kind == TokenKind::Keyword && native_type_from(peek().text))
      return advance().text;
    return expect_identifier().text;
  }

  InterfaceDecl interface_decl() {
    expect_keyword("interface");
    InterfaceDecl d;
    const Token& name = expect_identifier();
    d.name = name.text;
    d.name_span = span_of(name);
    expect_punct("{");
    std::set<std::string> seen;
    while (!check_punct("}")) {
      OperationKind kind;
      if (!at_end() && peek().is_keyword("RequestResponse")) {
        kind = OperationKind::RequestResponse;
      } else if (!at_end() && peek().is_keyword("OneWay")) {
        kind = OperationKind::OneWay;
      } else {
        fail("'RequestResponse', 'OneWay' or '}'");
      }
      advance();
      expect_kind(TokenKind::Colon, "':'");
      do {
        const Token& op = expect_identifier();
        if (!seen.insert(op.text).second) fail_at(op, "unique operation name");
        OperationDecl o;
        o.name = op.text;
        o.kind = kind;
        expect_punct("(");
        o.request_type = type_ref();
        expect_punct(")");
        if (kind == OperationKind::RequestResponse) {
          expect_punct("(");
          o.response_type = type_ref();
          expect_punct(")");
        }
        d.operations.push_back(std::move(o));
      } while (match_punct(","));
    }
    expect_punct("}");
    return d;
  }

  PortDecl port_decl() {
    PortDecl d;
    d.direction = advance().text == "inputPort" ? PortDirection::Input : PortDirection::Output;
    const Token& name = expect_identifier();
    d.name = name.text;
    d.name_span = span_of(name);
    expect_punct("{");
    bool has_location = false, has_protocol = false, has_interfaces = false;
    while (!check_punct("}")) {
      const Token& clause = peek();
      if (clause.is_keyword("Location") && !has_location) {
        advance();
        expect_kind(TokenKind::Colon, "':'");
        d.location = unescape_string_literal(
            expect_kind(TokenKind::StringLiteral, "location string").text);
        has_location = true;
      } else if (clause.is_keyword("Protocol") && !has_protocol) {
        advance();
        expect_kind(TokenKind::Colon, "':'");
        const Token& p = expect_identifier();
        d.protocol = p.text;
        d.protocol_span = span_of(p);
        has_protocol = true;
      } else if (clause.is_keyword("Interfaces") && !has_interfaces) {
        advance();
        expect_kind(TokenKind::Colon, "':'");
        do {
          const Token& i = expect_identifier();
          d.interfaces.push_back(i.text);
          d.interface_spans.push_back(span_of(i));
        } while (match_punct(","));
        has_interfaces = true;
      } else {
        fail("'Location', 'Protocol' or 'Interfaces' clause");
      }
    }
    if (!has_location || !has_protocol || !has_interfaces)
      fail("'Location', 'Protocol' and 'Interfaces' clauses");
    expect_punct("}");
    return d;
  }

  // -- behavior part --------------------------------------------------------

  StmtPtr block() {
    const Token& open = expect_punct("{");
    SeqStmt seq;
    while (!check_punct("}")) {
      if (at_end()) fail("'}'");
      auto s = statement();
      const bool block_like = !std::holds_alternative<AssignStmt>(s->node) &&
                              !std::holds_alternative<AliasBindStmt>(s->node) &&
                              !std::holds_alternative<PrintlnStmt>(s->node);
      seq.items.push_back(std::move(s));
      if (match_punct(";")) continue;
      if (check_punct("}") || block_like) continue;
      fail("';' or '}'");
    }
    expect_punct("}");
    return make_stmt(std::move(seq), pos_of(open));
  }

  StmtPtr statement() {
    if (at_end()) fail("statement");
    const Token& t = peek();
    const SourcePos at = pos_of(t);

    if (t.is_keyword("for")) return for_stmt();
    if (t.is_keyword("foreach")) return foreach_stmt();
    if (t.is_keyword("if")) return if_stmt();
    if (t.is_punct("{")) return block();

    if (t.kind != TokenKind::Identifier) fail("statement");

    if (t.text == "println" && (peek(1).is_punct("(") || peek(1).is_punct("@"))) {
      advance();
      if (match_punct("@")) {
        const Token& svc = expect_identifier();
        if (svc.text != "Console") fail_at(svc, "'Console'");
      }
      expect_punct("(");
      auto e = expr();
      expect_punct(")");
      return make_stmt(PrintlnStmt{std::move(e)}, at);
    }

    if (peek(1).kind == TokenKind::Arrow) {
      std::string name = advance().text;
      advance();
      return make_stmt(AliasBindStmt{std::move(name), path()}, at);
    }

    Path p = path();
    expect_punct("=");
    return make_stmt(AssignStmt{std::move(p), expr()}, at);
  }

  StmtPtr for_stmt() {
    const Token& kw = expect_keyword("for");
    expect_punct("(");
    ForStmt f;
    f.init_var = expect_identifier().text;
    expect_punct("=");
    f.init = expr();
    expect_punct(",");
    f.cond = expr();
    expect_punct(",");
    const Token& step = expect_identifier();
    f.step_var = step.text;
    expect_punct("++");
    f.step = make_expr(BinaryExpr{BinaryOp::Add, make_expr(VarReadExpr{step.text}, pos_of(step)),
                                  make_expr(LiteralExpr{std::int64_t{1}}, pos_of(step))},
                       pos_of(step));
    expect_punct(")");
    f.body = block();
    return make_stmt(std::move(f), pos_of(kw));
  }

  StmtPtr foreach_stmt() {
    const Token& kw = expect_keyword("foreach");
    expect_punct("(");
    std::string var = expect_identifier().text;
    if (!at_end() && peek().kind == TokenKind::Colon) {
      advance();
      Path target = path();
      expect_punct(")");
      return make_stmt(ForeachColonStmt{std::move(var), std::move(target), block()}, pos_of(kw));
    }
    if (at_end() || peek().kind != TokenKind::Arrow) fail("':' or '->'");
    advance();
    const Token& target_start = peek();
    Path target = path();
    if (target.final_indexed())
      fail_at(target_start, "arrow-foreach target to be a node, not an indexed value");
    expect_punct(")");
    return make_stmt(ForeachArrowStmt{std::move(var), std::move(target), block()}, pos_of(kw));
  }

  StmtPtr if_stmt() {
    const Token& kw = expect_keyword("if");
    expect_punct("(");
    IfStmt s;
    s.cond = expr();
    expect_punct(")");
    s.then_branch = block();
    if (!at_end() && peek().is_keyword("else")) {
      advance();
      if (!at_end() && peek().is_keyword("if"))
        s.else_branch = if_stmt();
      else
        s.else_branch = block();
    }
    return make_stmt(std::move(s), pos_of(kw));
  }

  Path path() {
    Path p;
    do {
      Segment seg;
      seg.name = expect_identifier().text;
      if (match_punct("[")) {
        seg.index = expr();
        expect_punct("]");
      }
      p.segments.push_back(std::move(seg));
    } while (match_punct("."));
    return p;
  }

  // -- expressions ----------------------------------------------------------

  ExprPtr expr() { return binary(0); }

  static int precedence(const Token& t, BinaryOp& op) {
    if (t.kind != TokenKind::Punctuation) return -1;
    static const std::pair<std::string_view, std::pair<BinaryOp, int>> table[] = {
        {"||", {BinaryOp::Or, 1}},  {"&&", {BinaryOp::And, 2}}, {"==", {BinaryOp::Eq, 3}},
        {"!=", {BinaryOp::Ne, 3}},  {"<", {BinaryOp::Lt, 4}},   {"<=", {BinaryOp::Le, 4}},
        {">", {BinaryOp::Gt, 4}},   {">=", {BinaryOp::Ge, 4}},  {"+", {BinaryOp::Add, 5}},
        {"-", {BinaryOp::Sub, 5}},  {"*", {BinaryOp::Mul, 6}},  {"/", {BinaryOp::Div, 6}},
    };
    for (const auto& [text, entry] : table) {
      if (t.text == text) {
        op = entry.first;
        return entry.second;
      }
    }
    return -1;
  }

  ExprPtr binary(int min_prec) {
    auto lhs = unary();
    while (!at_end()) {
      BinaryOp op{};
      int prec = precedence(peek(), op);
      if (prec <= min_prec) break;
      const SourcePos at = pos_of(advance());
      auto rhs = binary(prec);
      lhs = make_expr(BinaryExpr{op, std::move(lhs), std::move(rhs)}, at);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at_end()) fail("expression");
    const Token& t = peek();
    if (t.is_punct("!")) {
      advance();
      return make_expr(UnaryExpr{UnaryOp::Not, unary()}, pos_of(t));
    }
    if (t.is_punct("-")) {
      advance();
      // A minus directly before a numeric literal folds into the literal.
      const Token& n = peek();
      if (!at_end() && n.kind == TokenKind::IntLiteral) {
        advance();
        return make_expr(LiteralExpr{negative_int(n)}, pos_of(t));
      }
      if (!at_end() && n.kind == TokenKind::DoubleLiteral) {
        advance();
        return make_expr(LiteralExpr{-std::stod(n.text)}, pos_of(t));
      }
      return make_expr(UnaryExpr{UnaryOp::Neg, unary()}, pos_of(t));
    }
    return primary();
  }

  Scalar negative_int(const Token& t) const {
    std::string text = "-" + t.text;
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size())
      fail_at(t, "integer within 64-bit range");
    return v;
  }

  ExprPtr primary() {
    const Token& t = peek();
    const SourcePos at = pos_of(t);
    switch (t.kind) {
      case TokenKind::IntLiteral:
        advance();
        return make_expr(LiteralExpr{int_value(t)}, at);
      case TokenKind::DoubleLiteral:
        advance();
        return make_expr(LiteralExpr{std::stod(t.text)}, at);
      case TokenKind::StringLiteral:
        advance();
        return make_expr(LiteralExpr{unescape_string_literal(t.text)}, at);
      case TokenKind::Keyword:
        if (t.text == "true" || t.text == "false") {
          advance();
          return make_expr(LiteralExpr{t.text == "true"}, at);
        }
        break;
      case TokenKind::Hash: {
        advance();
        const Token& start = peek();
        Path p = path();
        if (p.final_indexed()) fail_at(start, "unindexed node path after '#'");
        return make_expr(CountExpr{std::move(p)}, at);
      }
      case TokenKind::Identifier: {
        if (!peek(1).is_punct(".") && !peek(1).is_punct("[")) {
          advance();
          return make_expr(VarReadExpr{t.text}, at);
        }
        return make_expr(PathReadExpr{path()}, at);
      }
      case TokenKind::Punctuation:
        if (t.is_punct("(")) {
          advance();
          auto e = expr();
          expect_punct(")");
          return e;
        }
        break;
      default:
        break;
    }
    fail("expression");
  }

  // -- validation -----------------------------------------------------------

  [[noreturn]] static void fail_span(const Span& s, const std::string& expected,
                                     const std::string& found) {
    throw ParseError(s.line, s.col, expected, found);
  }

  static void validate(const Program& p) {
    std::set<std::string> types, interfaces, ports;
    for (const auto& t : p.types)
      if (!types.insert(t.name).second)
        fail_span(t.name_span, "unique type name", "duplicate '" + t.name + "'");
    for (const auto& i : p.interfaces) {
      if (!interfaces.insert(i.name).second)
        fail_span(i.name_span, "unique interface name", "duplicate '" + i.name + "'");
      for (const auto& op : i.operations) {
        auto known = [&](const std::string& name) {
          return native_type_from(name) || types.count(name);
        };
        if (!known(op.request_type) || (op.response_type && !known(*op.response_type)))
          fail_span(i.name_span, "declared type in operation '" + op.name + "'",
                    "unknown type");
      }
    }
    for (const auto& port : p.ports) {
      if (!ports.insert(port.name).second)
        fail_span(port.name_span, "unique port name", "duplicate '" + port.name + "'");
      for (std::size_t k = 0; k < port.interfaces.size(); ++k)
        if (!interfaces.count(port.interfaces[k]))
          fail_span(port.interface_spans[k], "declared interface",
                    "undeclared '" + port.interfaces[k] + "'");
    }
  }
};

}  // namespace detail

/// Parses a whole program: deployment declarations in any order, then
/// `main { ... }`. Throws ParseError on any grammar or validation error,
/// including lexical errors.
inline Program parse_program(std::string_view source) {
  std::vector<Token> tokens;
  try {
    tokens = tokenize(source);
  } catch (const LexError& e) {
    throw ParseError(e.line(), e.col(), "valid token", e.what());
  }
  return detail::Parser(std::move(tokens)).program();
}

}  // namespace joliet::syntax
