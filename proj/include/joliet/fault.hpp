#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace joliet {

enum class FaultKind {
  MissingNode,
  UndefinedValue,
  AliasCycle,
  NegativeIndex,
  TypeMismatch,
  DivisionByZero,
  Overflow,
  BudgetExhausted,
};

inline std::string_view fault_kind_name(FaultKind k) {
  switch (k) {
    case FaultKind::MissingNode: return "MissingNode";
    case FaultKind::UndefinedValue: return "UndefinedValue";
    case FaultKind::AliasCycle: return "AliasCycle";
    case FaultKind::NegativeIndex: return "NegativeIndex";
    case FaultKind::TypeMismatch: return "TypeMismatch";
    case FaultKind::DivisionByZero: return "DivisionByZero";
    case FaultKind::Overflow: return "Overflow";
    case FaultKind::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

/// Runtime failure raised by the value store and the interpreter. The
/// interpreter fills in the position of the statement that faulted.
class Fault : public std::runtime_error {
 public:
  Fault(FaultKind kind, const std::string& message, int line = 0, int col = 0)
      : std::runtime_error(message), kind_(kind), line_(line), col_(col) {}

  FaultKind kind() const { return kind_; }
  int line() const { return line_; }
  int col() const { return col_; }

  Fault at(int line, int col) const {
    if (line_ != 0) return *this;
    return Fault(kind_, what(), line, col);
  }

 private:
  FaultKind kind_;
  int line_;
  int col_;
};

}  // namespace joliet
