#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "joliet/scalar.hpp"
#include "joliet/syntax/token.hpp"

namespace joliet::syntax {

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct Expr;
struct Stmt;
using ExprPtr = std::shared_ptr<const Expr>;
using StmtPtr = std::shared_ptr<const Stmt>;

// ---------------------------------------------------------------------------
// Paths

/// One `.name[index]` step. The first segment of a path is its root.
struct Segment {
  std::string name;
  ExprPtr index;  // null when no `[...]` was written
};

struct Path {
  std::vector<Segment> segments;

  const std::string& root() const { return segments.front().name; }
  bool final_indexed() const { return segments.back().index != nullptr; }
};

// ---------------------------------------------------------------------------
// Expressions

enum class BinaryOp { Add, Sub, Mul, Div, Lt, Le, Gt, Ge, Eq, Ne, And, Or };
enum class UnaryOp { Not, Neg };

struct LiteralExpr {
  Scalar value;
};
struct PathReadExpr {
  Path path;
};
struct CountExpr {
  Path path;
};
/// A bare identifier: a loop counter if one is live, otherwise a read of
/// the root variable (or alias) of that name.
struct VarReadExpr {
  std::string name;
};
struct UnaryExpr {
  UnaryOp op;
  ExprPtr operand;
};
struct BinaryExpr {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  using Node =
      std::variant<LiteralExpr, PathReadExpr, CountExpr, VarReadExpr, UnaryExpr, BinaryExpr>;
  Node node;
  SourcePos pos;
};

template <typename T>
ExprPtr make_expr(T node, SourcePos pos = {}) {
  return std::make_shared<const Expr>(Expr{std::move(node), pos});
}

// ---------------------------------------------------------------------------
// Statements

struct AssignStmt {
  Path path;
  ExprPtr value;
};
struct AliasBindStmt {
  std::string name;
  Path target;
};
struct PrintlnStmt {
  ExprPtr value;
};
/// `for (counter = init, cond, counter++) body`. `step` is the increment
/// expression assigned to `step_var` after each iteration.
struct ForStmt {
  std::string init_var;
  ExprPtr init;
  ExprPtr cond;
  std::string step_var;
  ExprPtr step;
  StmtPtr body;
};
struct ForeachColonStmt {
  std::string key_var;
  Path target;
  StmtPtr body;
};
struct ForeachArrowStmt {
  std::string alias_var;
  Path target;
  StmtPtr body;
};
struct IfStmt {
  ExprPtr cond;
  StmtPtr then_branch;
  StmtPtr else_branch;  // may be null
};
struct SeqStmt {
  std::vector<StmtPtr> items;
};

struct Stmt {
  using Node = std::variant<AssignStmt, AliasBindStmt, PrintlnStmt, ForStmt, ForeachColonStmt,
                            ForeachArrowStmt, IfStmt, SeqStmt>;
  Node node;
  SourcePos pos;
};

template <typename T>
StmtPtr make_stmt(T node, SourcePos pos = {}) {
  return std::make_shared<const Stmt>(Stmt{std::move(node), pos});
}

// ---------------------------------------------------------------------------
// Deployment part

enum class NativeType { String, Int, Bool, Double, Void, Undefined };

inline std::string_view native_type_name(NativeType t) {
  switch (t) {
    case NativeType::String: return "string";
    case NativeType::Int: return "int";
    case NativeType::Bool: return "bool";
    case NativeType::Double: return "double";
    case NativeType::Void: return "void";
    case NativeType::Undefined: return "undefined";
  }
  return "?";
}

inline std::optional<NativeType> native_type_from(std::string_view s) {
  if (s == "string") return NativeType::String;
  if (s == "int") return NativeType::Int;
  if (s == "bool") return NativeType::Bool;
  if (s == "double") return NativeType::Double;
  if (s == "void") return NativeType::Void;
  if (s == "undefined") return NativeType::Undefined;
  return std::nullopt;
}

inline constexpr std::int64_t kUnbounded = -1;

struct Cardinality {
  std::int64_t min = 1;
  std::int64_t max = 1;  // kUnbounded for `*`
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

struct TypeBody;

struct SubnodeDecl {
  std::string name;
  Cardinality cardinality;
  std::shared_ptr<const TypeBody> body;
};

struct TypeBody {
  NativeType root = NativeType::Void;
  std::vector<SubnodeDecl> subnodes;
};

struct TypeDecl {
  std::string name;
  TypeBody body;
  Span name_span;
};

enum class OperationKind { RequestResponse, OneWay };

struct OperationDecl {
  std::string name;
  OperationKind kind = OperationKind::OneWay;
  std::string request_type;
  std::optional<std::string> response_type;
};

struct InterfaceDecl {
  std::string name;
  std::vector<OperationDecl> operations;
  Span name_span;
};

enum class PortDirection { Input, Output };

struct PortDecl {
  PortDirection direction = PortDirection::Output;
  std::string name;
  std::string location;
  std::string protocol;
  std::vector<std::string> interfaces;
  Span protocol_span;
  std::vector<Span> interface_spans;
  Span name_span;
};

struct Program {
  std::vector<TypeDecl> types;
  std::vector<InterfaceDecl> interfaces;
  std::vector<PortDecl> ports;
  StmtPtr main;
  /// Position of the `main` keyword; everything from here on is behavior.
  SourcePos main_pos;
};

// ---------------------------------------------------------------------------
// Structural equality, ignoring source positions.

bool equal(const Expr& a, const Expr& b);
bool equal(const Stmt& a, const Stmt& b);

inline bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}
inline bool equal(const StmtPtr& a, const StmtPtr& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}

inline bool equal(const Path& a, const Path& b) {
  if (a.segments.size() != b.segments.size()) return false;
  for (std::size_t i = 0; i < a.segments.size(); ++i) {
    if (a.segments[i].name != b.segments[i].name) return false;
    if (!equal(a.segments[i].index, b.segments[i].index)) return false;
  }
  return true;
}

inline bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, LiteralExpr>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, PathReadExpr> || std::is_same_v<T, CountExpr>) {
          return equal(x.path, y.path);
        } else if constexpr (std::is_same_v<T, VarReadExpr>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          return x.op == y.op && equal(x.operand, y.operand);
        } else {
          return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
        }
      },
      a.node);
}

inline bool equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, AssignStmt>) {
          return equal(x.path, y.path) && equal(x.value, y.value);
        } else if constexpr (std::is_same_v<T, AliasBindStmt>) {
          return x.name == y.name && equal(x.target, y.target);
        } else if constexpr (std::is_same_v<T, PrintlnStmt>) {
          return equal(x.value, y.value);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          return x.init_var == y.init_var && equal(x.init, y.init) && equal(x.cond, y.cond) &&
                 x.step_var == y.step_var && equal(x.step, y.step) && equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, ForeachColonStmt>) {
          return x.key_var == y.key_var && equal(x.target, y.target) && equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, ForeachArrowStmt>) {
          return x.alias_var == y.alias_var && equal(x.target, y.target) &&
                 equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return equal(x.cond, y.cond) && equal(x.then_branch, y.then_branch) &&
                 equal(x.else_branch, y.else_branch);
        } else {
          if (x.items.size() != y.items.size()) return false;
          for (std::size_t i = 0; i < x.items.size(); ++i)
            if (!equal(x.items[i], y.items[i])) return false;
          return true;
        }
      },
      a.node);
}

inline bool equal(const TypeBody& a, const TypeBody& b) {
  if (a.root != b.root || a.subnodes.size() != b.subnodes.size()) return false;
  for (std::size_t i = 0; i < a.subnodes.size(); ++i) {
    const auto& x = a.subnodes[i];
    const auto& y = b.subnodes[i];
    if (x.name != y.name || !(x.cardinality == y.cardinality)) return false;
    if (!x.body || !y.body) return false;
    if (!equal(*x.body, *y.body)) return false;
  }
  return true;
}

inline bool equal(const Program& a, const Program& b) {
  if (a.types.size() != b.types.size() || a.interfaces.size() != b.interfaces.size() ||
      a.ports.size() != b.ports.size())
    return false;
  for (std::size_t i = 0; i < a.types.size(); ++i)
    if (a.types[i].name != b.types[i].name || !equal(a.types[i].body, b.types[i].body))
      return false;
  for (std::size_t i = 0; i < a.interfaces.size(); ++i) {
    const auto& x = a.interfaces[i];
    const auto& y = b.interfaces[i];
    if (x.name != y.name || x.operations.size() != y.operations.size()) return false;
    for (std::size_t k = 0; k < x.operations.size(); ++k) {
      const auto& p = x.operations[k];
      const auto& q = y.operations[k];
      if (p.name != q.name || p.kind != q.kind || p.request_type != q.request_type ||
          p.response_type != q.response_type)
        return false;
    }
  }
  for (std::size_t i = 0; i < a.ports.size(); ++i) {
    const auto& x = a.ports[i];
    const auto& y = b.ports[i];
    if (x.direction != y.direction || x.name != y.name || x.location != y.location ||
        x.protocol != y.protocol || x.interfaces != y.interfaces)
      return false;
  }
  return equal(a.main, b.main);
}

}  // namespace joliet::syntax
