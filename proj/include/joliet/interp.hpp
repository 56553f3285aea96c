#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "joliet/fault.hpp"
#include "joliet/scalar.hpp"
#include "joliet/syntax/ast.hpp"
#include "joliet/valuetree.hpp"

namespace joliet::interp {

using syntax::Expr;
using syntax::Path;
using syntax::Stmt;

/// Mutable state of one program run.
struct ExecContext {
  values::Store store;
  /// `for` counters live here, apart from the tree store, so a loop over
  /// `i` never creates a root variable `i`.
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> output;
  std::int64_t step_budget = 0;
};

struct FaultInfo {
  FaultKind kind;
  int line = 0;
  int col = 0;
  std::string message;
};

struct RunResult {
  std::vector<std::string> output;
  std::string dump;
  std::optional<FaultInfo> fault;  // output/dump hold the state at the fault
};

inline constexpr std::int64_t kDefaultStepBudget = 100000;
/// Longest string a concatenation may produce.
inline constexpr std::size_t kMaxStringLength = 1 << 20;

class Interpreter {
 public:
  explicit Interpreter(ExecContext& ctx) : ctx_(ctx) {}

  void exec(const Stmt& s) {
    if (ctx_.step_budget <= 0)
      throw Fault(FaultKind::BudgetExhausted, "step budget exhausted", s.pos.line, s.pos.col);
    --ctx_.step_budget;
    try {
      std::visit([&](const auto& n) { exec_node(n, s); }, s.node);
    } catch (const Fault& f) {
      throw f.at(s.pos.line, s.pos.col);
    }
  }

  Scalar eval_expr(const Expr& e) {
    return std::visit([&](const auto& n) { return eval_node(n); }, e.node);
  }

  /// Iterates the child names of the node `target` addresses (not its
  /// root), in insertion order, binding each name to `key_var`. The name
  /// list is taken before the first iteration.
  void exec_foreach_colon(const std::string& key_var, const Path& target, const Stmt& body) {
    const auto names = ctx_.store.child_names(resolve(target));
    for (const auto& name : names) {
      assign(Path{{{key_var, nullptr}}}, Scalar{name});
      exec(body);
    }
  }

  /// Direct semantics of `foreach (alias -> target) body`: a hidden index j
  /// runs from 0 while j < #target, re-reading the bound each iteration,
  /// and `alias` is rebound to target[j] before every body execution.
  void exec_foreach_arrow(const std::string& alias, const Path& target, const Stmt& body,
                          const std::string& hidden_index) {
    Path element = target;
    element.segments.back().index = syntax::make_expr(syntax::VarReadExpr{hidden_index});
    ctx_.counters[hidden_index] = 0;
    while (true) {
      if (ctx_.counters[hidden_index] >= ctx_.store.count(resolve(target))) break;
      ctx_.store.bind_alias(alias, element);
      exec(body);
      ctx_.counters[hidden_index] = checked_add(ctx_.counters[hidden_index], 1);
    }
  }

  values::ResolvedPath resolve(const Path& p) {
    return ctx_.store.resolve(p, [this](const Expr& index) {
      Scalar v = eval_expr(index);
      if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
      throw Fault(FaultKind::TypeMismatch,
                  "index must be int, got " + std::string(kind_name(kind_of(v))));
    });
  }

 private:
  ExecContext& ctx_;

  // -- statements -----------------------------------------------------------

  static bool is_bare_name(const Path& p) {
    return p.segments.size() == 1 && !p.segments.front().index;
  }

  void assign(const Path& p, Scalar value) {
    if (is_bare_name(p)) {
      if (auto it = ctx_.counters.find(p.root()); it != ctx_.counters.end()) {
        it->second = as_counter(value);
        return;
      }
    }
    ctx_.store.write(resolve(p), std::move(value));
  }

  static std::int64_t as_counter(const Scalar& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    throw Fault(FaultKind::TypeMismatch,
                "loop counter must be int, got " + std::string(kind_name(kind_of(v))));
  }

  bool truth(const Expr& cond) {
    Scalar v = eval_expr(cond);
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    throw Fault(FaultKind::TypeMismatch,
                "condition must be bool, got " + std::string(kind_name(kind_of(v))));
  }

  void exec_node(const syntax::AssignStmt& n, const Stmt&) { assign(n.path, eval_expr(*n.value)); }

  void exec_node(const syntax::AliasBindStmt& n, const Stmt&) {
    ctx_.store.bind_alias(n.name, n.target);
  }

  void exec_node(const syntax::PrintlnStmt& n, const Stmt&) {
    ctx_.output.push_back(format_scalar(eval_expr(*n.value)));
  }

  void exec_node(const syntax::ForStmt& n, const Stmt&) {
    ctx_.counters[n.init_var] = as_counter(eval_expr(*n.init));
    while (truth(*n.cond)) {
      exec(*n.body);
      ctx_.counters[n.step_var] = as_counter(eval_expr(*n.step));
    }
  }

  void exec_node(const syntax::ForeachColonStmt& n, const Stmt&) {
    exec_foreach_colon(n.key_var, n.target, *n.body);
  }

  void exec_node(const syntax::ForeachArrowStmt& n, const Stmt&) {
    // One hidden counter per loop in the program text; `%` keeps it out of
    // reach of both user and generated identifiers.
    exec_foreach_arrow(n.alias_var, n.target, *n.body,
                       "%arrow@" + std::to_string(reinterpret_cast<std::uintptr_t>(&n)));
  }

  void exec_node(const syntax::IfStmt& n, const Stmt&) {
    if (truth(*n.cond))
      exec(*n.then_branch);
    else if (n.else_branch)
      exec(*n.else_branch);
  }

  void exec_node(const syntax::SeqStmt& n, const Stmt&) {
    for (const auto& item : n.items) exec(*item);
  }

  // -- expressions ----------------------------------------------------------

  Scalar eval_node(const syntax::LiteralExpr& n) { return n.value; }

  Scalar eval_node(const syntax::PathReadExpr& n) { return ctx_.store.read(resolve(n.path)); }

  Scalar eval_node(const syntax::CountExpr& n) { return ctx_.store.count(resolve(n.path)); }

  Scalar eval_node(const syntax::VarReadExpr& n) {
    if (auto it = ctx_.counters.find(n.name); it != ctx_.counters.end()) return it->second;
    return ctx_.store.read(resolve(Path{{{n.name, nullptr}}}));
  }

  Scalar eval_node(const syntax::UnaryExpr& n) {
    Scalar v = eval_expr(*n.operand);
    if (n.op == syntax::UnaryOp::Not) {
      if (const auto* b = std::get_if<bool>(&v)) return !*b;
      throw mismatch("!", v);
    }
    if (const auto* i = std::get_if<std::int64_t>(&v)) return checked_sub(0, *i);
    if (const auto* d = std::get_if<double>(&v)) return -*d;
    throw mismatch("unary -", v);
  }

  Scalar eval_node(const syntax::BinaryExpr& n) {
    using syntax::BinaryOp;
    if (n.op == BinaryOp::And || n.op == BinaryOp::Or) {
      const bool lhs = logic_operand(eval_expr(*n.lhs), n.op);
      if (n.op == BinaryOp::And ? !lhs : lhs) return lhs;
      return logic_operand(eval_expr(*n.rhs), n.op);
    }
    Scalar a = eval_expr(*n.lhs);
    Scalar b = eval_expr(*n.rhs);
    return binary(n.op, a, b);
  }

  static bool logic_operand(const Scalar& v, syntax::BinaryOp op) {
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    throw mismatch(op == syntax::BinaryOp::And ? "&&" : "||", v);
  }

  static Fault mismatch(const std::string& op, const Scalar& v) {
    return Fault(FaultKind::TypeMismatch,
                 "operator " + op + " not defined for " + std::string(kind_name(kind_of(v))));
  }

  static Fault mismatch(const std::string& op, const Scalar& a, const Scalar& b) {
    return Fault(FaultKind::TypeMismatch, "operator " + op + " not defined for " +
                                              std::string(kind_name(kind_of(a))) + " and " +
                                              std::string(kind_name(kind_of(b))));
  }

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Fault(FaultKind::Overflow, "integer overflow");
    return r;
  }
  static std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Fault(FaultKind::Overflow, "integer overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Fault(FaultKind::Overflow, "integer overflow");
    return r;
  }

  static bool numeric(const Scalar& v) {
    return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<double>(v);
  }
  static double as_double(const Scalar& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    return std::get<double>(v);
  }

  static std::string op_text(syntax::BinaryOp op);

  static Scalar binary(syntax::BinaryOp op, const Scalar& a, const Scalar& b) {
    using syntax::BinaryOp;
    const auto* ia = std::get_if<std::int64_t>(&a);
    const auto* ib = std::get_if<std::int64_t>(&b);
    const auto* sa = std::get_if<std::string>(&a);
    const auto* sb = std::get_if<std::string>(&b);

    switch (op) {
      case BinaryOp::Add:
        if (sa && sb) {
          if (sa->size() + sb->size() > kMaxStringLength)
            throw Fault(FaultKind::Overflow, "string too long");
          return *sa + *sb;
        }
        [[fallthrough]];
      case BinaryOp::Sub:
      case BinaryOp::Mul:
      case BinaryOp::Div: {
        if (!numeric(a) || !numeric(b)) throw mismatch(op_text(op), a, b);
        if (ia && ib) {
          switch (op) {
            case BinaryOp::Add: return checked_add(*ia, *ib);
            case BinaryOp::Sub: return checked_sub(*ia, *ib);
            case BinaryOp::Mul: return checked_mul(*ia, *ib);
            default:
              if (*ib == 0) throw Fault(FaultKind::DivisionByZero, "division by zero");
              if (*ib == -1 && *ia == INT64_MIN)
                throw Fault(FaultKind::Overflow, "integer overflow");
              return *ia / *ib;
          }
        }
        const double x = as_double(a), y = as_double(b);
        switch (op) {
          case BinaryOp::Add: return x + y;
          case BinaryOp::Sub: return x - y;
          case BinaryOp::Mul: return x * y;
          default:
            if (y == 0.0) throw Fault(FaultKind::DivisionByZero, "division by zero");
            return x / y;
        }
      }
      case BinaryOp::Lt:
      case BinaryOp::Le:
      case BinaryOp::Gt:
      case BinaryOp::Ge: {
        int c;
        if (ia && ib) {
          c = (*ia > *ib) - (*ia < *ib);
        } else if (numeric(a) && numeric(b)) {
          const double x = as_double(a), y = as_double(b);
          if (std::isnan(x) || std::isnan(y)) return false;
          c = (x > y) - (x < y);
        } else if (sa && sb) {
          c = sa->compare(*sb);
          c = (c > 0) - (c < 0);
        } else {
          throw mismatch(op_text(op), a, b);
        }
        switch (op) {
          case BinaryOp::Lt: return c < 0;
          case BinaryOp::Le: return c <= 0;
          case BinaryOp::Gt: return c > 0;
          default: return c >= 0;
        }
      }
      case BinaryOp::Eq:
      case BinaryOp::Ne: {
        bool eq;
        if (ia && ib)
          eq = *ia == *ib;
        else if (numeric(a) && numeric(b))
          eq = as_double(a) == as_double(b);
        else
          eq = a == b;
        return op == BinaryOp::Eq ? eq : !eq;
      }
      default:
        break;
    }
    throw mismatch(op_text(op), a, b);
  }
};

inline std::string Interpreter::op_text(syntax::BinaryOp op) {
  using syntax::BinaryOp;
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

/// Runs `main` with at most `step_budget` statement executions.
inline RunResult run(const syntax::Program& program,
                     std::int64_t step_budget = kDefaultStepBudget) {
  ExecContext ctx;
  ctx.step_budget = step_budget;
  RunResult result;
  try {
    Interpreter(ctx).exec(*program.main);
  } catch (const Fault& f) {
    result.fault = FaultInfo{f.kind(), f.line(), f.col(), f.what()};
  }
  result.output = std::move(ctx.output);
  result.dump = ctx.store.dump();
  return result;
}

}  // namespace joliet::interp
