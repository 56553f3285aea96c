#pragma once

#include <string>

#include "joliet/syntax/ast.hpp"

namespace joliet::syntax {

namespace detail {

inline std::string_view binary_op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

inline int binary_op_precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return 1;
    case BinaryOp::And: return 2;
    case BinaryOp::Eq:
    case BinaryOp::Ne: return 3;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: return 4;
    case BinaryOp::Add:
    case BinaryOp::Sub: return 5;
    case BinaryOp::Mul:
    case BinaryOp::Div: return 6;
  }
  return 0;
}

inline std::string literal_text(const Scalar& v) {
  if (const auto* d = std::get_if<double>(&v)) {
    std::string s = format_double(*d);
    if (s.find_first_of(".ein") == std::string::npos) {
      s += ".0";
    } else if (s.find('.') == std::string::npos && s.find('e') != std::string::npos) {
      s.insert(s.find('e'), ".0");
    }
    return s;
  }
  return format_scalar_typed(v);
}

class Printer {
 public:
  std::string out;

  void program(const Program& p) {
    for (const auto& t : p.types) {
      out += "type " + t.name + ": ";
      type_body(t.body, 0);
      out += "\n\n";
    }
    for (const auto& i : p.interfaces) interface_decl(i);
    for (const auto& port : p.ports) port_decl(port);
    out += "main ";
    block(*p.main, 0);
    out += "\n";
  }

  void expr(const Expr& e, int parent_prec = 0) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LiteralExpr>) {
            out += literal_text(n.value);
          } else if constexpr (std::is_same_v<T, PathReadExpr>) {
            path(n.path);
          } else if constexpr (std::is_same_v<T, CountExpr>) {
            out += "#";
            path(n.path);
          } else if constexpr (std::is_same_v<T, VarReadExpr>) {
            out += n.name;
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            out += n.op == UnaryOp::Not ? "!" : "-";
            const bool numeric_literal =
                n.op == UnaryOp::Neg && std::holds_alternative<LiteralExpr>(n.operand->node) &&
                !std::holds_alternative<std::string>(
                    std::get<LiteralExpr>(n.operand->node).value) &&
                !std::holds_alternative<bool>(std::get<LiteralExpr>(n.operand->node).value);
            const bool wrap =
                numeric_literal && literal_text(std::get<LiteralExpr>(n.operand->node).value)[0] != '-';
            if (wrap) out += "(";
            expr(*n.operand, 7);
            if (wrap) out += ")";
          } else {
            const int prec = binary_op_precedence(n.op);
            const bool paren = prec < parent_prec;
            if (paren) out += "(";
            expr(*n.lhs, prec);
            out += " ";
            out += binary_op_text(n.op);
            out += " ";
            expr(*n.rhs, prec + 1);
            if (paren) out += ")";
          }
        },
        e.node);
  }

  void path(const Path& p) {
    bool first = true;
    for (const auto& seg : p.segments) {
      if (!first) out += ".";
      first = false;
      out += seg.name;
      if (seg.index) {
        out += "[";
        expr(*seg.index);
        out += "]";
      }
    }
  }

  void stmt(const Stmt& s, int depth) {
    indent(depth);
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, AssignStmt>) {
            path(n.path);
            out += " = ";
            expr(*n.value);
            out += ";";
          } else if constexpr (std::is_same_v<T, AliasBindStmt>) {
            out += n.name + " -> ";
            path(n.target);
            out += ";";
          } else if constexpr (std::is_same_v<T, PrintlnStmt>) {
            out += "println(";
            expr(*n.value);
            out += ");";
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            out += "for (" + n.init_var + " = ";
            expr(*n.init);
            out += ", ";
            expr(*n.cond);
            out += ", " + n.step_var + "++) ";
            block(*n.body, depth);
          } else if constexpr (std::is_same_v<T, ForeachColonStmt>) {
            out += "foreach (" + n.key_var + " : ";
            path(n.target);
            out += ") ";
            block(*n.body, depth);
          } else if constexpr (std::is_same_v<T, ForeachArrowStmt>) {
            out += "foreach (" + n.alias_var + " -> ";
            path(n.target);
            out += ") ";
            block(*n.body, depth);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            if_chain(n, depth);
          } else {
            block(s, depth);
          }
        },
        s.node);
    out += "\n";
  }

 private:
  void indent(int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

  void block(const Stmt& s, int depth) {
    out += "{\n";
    if (const auto* seq = std::get_if<SeqStmt>(&s.node)) {
      for (const auto& item : seq->items) stmt(*item, depth + 1);
    } else {
      stmt(s, depth + 1);
    }
    indent(depth);
    out += "}";
  }

  void if_chain(const IfStmt& n, int depth) {
    out += "if (";
    expr(*n.cond);
    out += ") ";
    block(*n.then_branch, depth);
    if (!n.else_branch) return;
    out += " else ";
    if (const auto* nested = std::get_if<IfStmt>(&n.else_branch->node))
      if_chain(*nested, depth);
    else
      block(*n.else_branch, depth);
  }

  void type_body(const TypeBody& b, int depth) {
    out += native_type_name(b.root);
    if (b.subnodes.empty()) return;
    out += " {\n";
    for (const auto& sub : b.subnodes) {
      indent(depth + 1);
      out += "." + sub.name;
      if (!(sub.cardinality == Cardinality{})) {
        out += "[" + std::to_string(sub.cardinality.min) + ",";
        out += sub.cardinality.max == kUnbounded ? "*" : std::to_string(sub.cardinality.max);
        out += "]";
      }
      out += ": ";
      type_body(*sub.body, depth + 1);
      out += "\n";
    }
    indent(depth);
    out += "}";
  }

  void interface_decl(const InterfaceDecl& i) {
    out += "interface " + i.name + " {\n";
    std::size_t k = 0;
    while (k < i.operations.size()) {
      const OperationKind kind = i.operations[k].kind;
      out += kind == OperationKind::RequestResponse ? "  RequestResponse: " : "  OneWay: ";
      bool first = true;
      for (; k < i.operations.size() && i.operations[k].kind == kind; ++k) {
        const auto& op = i.operations[k];
        if (!first) out += ", ";
        first = false;
        out += op.name + "(" + op.request_type + ")";
        if (op.response_type) out += "(" + *op.response_type + ")";
      }
      out += "\n";
    }
    out += "}\n\n";
  }

  void port_decl(const PortDecl& p) {
    out += p.direction == PortDirection::Input ? "inputPort " : "outputPort ";
    out += p.name + " {\n";
    out += "  Location: " + quote_string(p.location) + "\n";
    out += "  Protocol: " + p.protocol + "\n";
    out += "  Interfaces: ";
    for (std::size_t k = 0; k < p.interfaces.size(); ++k) {
      if (k) out += ", ";
      out += p.interfaces[k];
    }
    out += "\n}\n\n";
  }
};

}  // namespace detail

/// Canonical source text for a program. Deterministic, and re-parses to a
/// structurally equal program.
inline std::string pretty_print(const Program& program) {
  detail::Printer p;
  p.program(program);
  return std::move(p.out);
}

inline std::string to_source(const Expr& e) {
  detail::Printer p;
  p.expr(e);
  return std::move(p.out);
}

inline std::string to_source(const Path& path) {
  detail::Printer p;
  p.path(path);
  return std::move(p.out);
}

inline std::string to_source(const Stmt& s) {
  detail::Printer p;
  p.stmt(s, 0);
  return std::move(p.out);
}

}  // namespace joliet::syntax
