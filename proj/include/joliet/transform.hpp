#pragma once

#include <set>
#include <string>

#include "joliet/syntax/ast.hpp"

namespace joliet::transform {

using namespace joliet::syntax;

/// Source of hygienic loop-index names. Generated names carry a prefix no
/// user identifier can start with; the taken-set check covers programs
/// that already contain generated names (e.g. re-parsed desugared text).
struct FreshNameSource {
  std::size_t counter = 0;
  std::string prefix{kGeneratedPrefix};
};

/// Next name not in `taken` and not handed out before by `src`.
inline std::string fresh_index_name(FreshNameSource& src, const std::set<std::string>& taken) {
  while (true) {
    std::string name = src.prefix + std::to_string(src.counter++);
    if (!taken.count(name)) return name;
  }
}

namespace detail {

class IdentifierCollector {
 public:
  std::set<std::string> names;

  void program(const Program& p) {
    for (const auto& t : p.types) {
      names.insert(t.name);
      type_body(t.body);
    }
    for (const auto& i : p.interfaces) {
      names.insert(i.name);
      for (const auto& op : i.operations) {
        names.insert(op.name);
        names.insert(op.request_type);
        if (op.response_type) names.insert(*op.response_type);
      }
    }
    for (const auto& port : p.ports) {
      names.insert(port.name);
      names.insert(port.protocol);
      names.insert(port.interfaces.begin(), port.interfaces.end());
    }
    stmt(*p.main);
  }

  void stmt(const Stmt& s) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, AssignStmt>) {
            path(n.path);
            expr(*n.value);
          } else if constexpr (std::is_same_v<T, AliasBindStmt>) {
            names.insert(n.name);
            path(n.target);
          } else if constexpr (std::is_same_v<T, PrintlnStmt>) {
            expr(*n.value);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            names.insert(n.init_var);
            names.insert(n.step_var);
            expr(*n.init);
            expr(*n.cond);
            expr(*n.step);
            stmt(*n.body);
          } else if constexpr (std::is_same_v<T, ForeachColonStmt>) {
            names.insert(n.key_var);
            path(n.target);
            stmt(*n.body);
          } else if constexpr (std::is_same_v<T, ForeachArrowStmt>) {
            names.insert(n.alias_var);
            path(n.target);
            stmt(*n.body);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            expr(*n.cond);
            stmt(*n.then_branch);
            if (n.else_branch) stmt(*n.else_branch);
          } else {
            for (const auto& item : n.items) stmt(*item);
          }
        },
        s.node);
  }

 private:
  void type_body(const TypeBody& b) {
    for (const auto& sub : b.subnodes) {
      names.insert(sub.name);
      type_body(*sub.body);
    }
  }

  void path(const Path& p) {
    for (const auto& seg : p.segments) {
      names.insert(seg.name);
      if (seg.index) expr(*seg.index);
    }
  }

  void expr(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, PathReadExpr> || std::is_same_v<T, CountExpr>) {
            path(n.path);
          } else if constexpr (std::is_same_v<T, VarReadExpr>) {
            names.insert(n.name);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            expr(*n.operand);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            expr(*n.lhs);
            expr(*n.rhs);
          }
        },
        e.node);
  }
};

/// `rvp` with `index` attached to its final segment.
inline Path indexed(const Path& node_path, ExprPtr index) {
  Path p = node_path;
  p.segments.back().index = std::move(index);
  return p;
}

class Desugarer {
 public:
  Desugarer(std::set<std::string> taken) : taken_(std::move(taken)) {}

  StmtPtr stmt(const StmtPtr& s) {
    return std::visit(
        [&](const auto& n) -> StmtPtr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ForStmt>) {
            ForStmt f = n;
            f.body = stmt(n.body);
            return make_stmt(std::move(f), s->pos);
          } else if constexpr (std::is_same_v<T, ForeachColonStmt>) {
            ForeachColonStmt f = n;
            f.body = stmt(n.body);
            return make_stmt(std::move(f), s->pos);
          } else if constexpr (std::is_same_v<T, ForeachArrowStmt>) {
            return lower(n, s->pos);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            IfStmt i = n;
            i.then_branch = stmt(n.then_branch);
            if (n.else_branch) i.else_branch = stmt(n.else_branch);
            return make_stmt(std::move(i), s->pos);
          } else if constexpr (std::is_same_v<T, SeqStmt>) {
            SeqStmt q;
            for (const auto& item : n.items) q.items.push_back(stmt(item));
            return make_stmt(std::move(q), s->pos);
          } else {
            return s;
          }
        },
        s->node);
  }

 private:
  std::set<std::string> taken_;
  FreshNameSource names_;

  // foreach (v -> rvp) { B }
  //   ==> for (idx = 0, idx < #rvp, idx++) { v -> rvp[idx]; B }
  StmtPtr lower(const ForeachArrowStmt& n, SourcePos pos) {
    const std::string idx = fresh_index_name(names_, taken_);
    auto var = [&] { return make_expr(VarReadExpr{idx}, pos); };

    ForStmt f;
    f.init_var = idx;
    f.init = make_expr(LiteralExpr{std::int64_t{0}}, pos);
    f.cond = make_expr(BinaryExpr{BinaryOp::Lt, var(), make_expr(CountExpr{n.target}, pos)}, pos);
    f.step_var = idx;
    f.step = make_expr(
        BinaryExpr{BinaryOp::Add, var(), make_expr(LiteralExpr{std::int64_t{1}}, pos)}, pos);

    SeqStmt body;
    body.items.push_back(make_stmt(AliasBindStmt{n.alias_var, indexed(n.target, var())}, pos));
    StmtPtr inner = stmt(n.body);
    if (const auto* seq = std::get_if<SeqStmt>(&inner->node))
      body.items.insert(body.items.end(), seq->items.begin(), seq->items.end());
    else
      body.items.push_back(inner);
    f.body = make_stmt(std::move(body), n.body->pos);
    return make_stmt(std::move(f), pos);
  }
};

}  // namespace detail

/// Every identifier occurring anywhere in the program.
inline std::set<std::string> collect_identifiers(const Program& program) {
  detail::IdentifierCollector c;
  c.program(program);
  return std::move(c.names);
}

/// Lowers every arrow-foreach into an indexed for loop that rebinds the
/// loop alias on each iteration. Nested loops each get their own fresh
/// index, allocated outermost first. The deployment part is untouched.
inline Program desugar(const Program& program) {
  Program out = program;
  detail::Desugarer d(collect_identifiers(program));
  out.main = d.stmt(program.main);
  return out;
}

}  // namespace joliet::transform
