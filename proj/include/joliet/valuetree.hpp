#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "joliet/fault.hpp"
#include "joliet/scalar.hpp"
#include "joliet/syntax/ast.hpp"

namespace joliet::values {

struct ValueNode;

/// Ordered association name -> values. A present name always maps to a
/// non-empty list; the list length is that subnode's cardinality.
using ChildList = std::vector<std::pair<std::string, std::vector<ValueNode>>>;

struct ValueNode {
  std::optional<Scalar> scalar;
  ChildList children;
};

namespace detail {

template <typename List>
auto* find_child(List& list, const std::string& name) {
  for (auto& entry : list)
    if (entry.first == name) return &entry.second;
  using Ptr = decltype(&list.front().second);
  return Ptr{nullptr};
}

}  // namespace detail

/// One fully evaluated step of an address.
struct Step {
  std::string name;
  std::int64_t index = 0;
  friend bool operator==(const Step&, const Step&) = default;
};

/// Canonical address: aliases expanded, every index evaluated. `steps[0]`
/// is the root variable.
struct ResolvedPath {
  std::vector<Step> steps;
  friend bool operator==(const ResolvedPath&, const ResolvedPath&) = default;
};

inline std::string to_string(const ResolvedPath& p) {
  std::string out;
  for (const auto& s : p.steps) {
    if (!out.empty()) out += ".";
    out += s.name + "[" + std::to_string(s.index) + "]";
  }
  return out;
}

/// Tree-structured variable store with dynamic aliases.
///
/// Aliases and root variables share one namespace; an alias hides a root
/// of the same name. Alias targets are kept unevaluated and re-resolved,
/// index expressions included, on every use.
class Store {
 public:
  /// Largest index a write may address.
  static constexpr std::int64_t kMaxIndex = 1 << 20;

  /// Expands aliases (recursively) and evaluates indexes through `eval`,
  /// a callable `const syntax::Expr& -> std::int64_t`. Missing indexes
  /// mean 0. An index on an alias name replaces the index of the alias
  /// target's last step.
  template <typename IndexEval>
  ResolvedPath resolve(const syntax::Path& path, IndexEval&& eval) const {
    // Index expressions may themselves read through aliases, so a cycle
    // can also close across nested resolutions.
    if (nesting_ >= kMaxNesting)
      throw Fault(FaultKind::AliasCycle, "alias expansion nested too deeply");
    ++nesting_;
    struct Unwind {
      std::size_t& n;
      ~Unwind() { --n; }
    } unwind{nesting_};
    std::set<std::string> visiting;
    return resolve_impl(path, eval, visiting);
  }

  /// Writes `value` at `p`, creating every missing node on the way. Writing
  /// at index k of a list pads it with empty nodes up to length k+1.
  void write(const ResolvedPath& p, Scalar value) { vivify(p).scalar = std::move(value); }

  /// Returns the node at `p`, creating missing nodes.
  ValueNode& vivify(const ResolvedPath& p) {
    for (const auto& step : p.steps)
      if (step.index > kMaxIndex)
        throw Fault(FaultKind::Overflow,
                    "index " + std::to_string(step.index) + " exceeds store limit");
    std::vector<ValueNode>* list = &list_or_create(roots_, p.steps.front().name);
    ValueNode* node = &element_or_create(*list, p.steps.front().index);
    for (std::size_t i = 1; i < p.steps.size(); ++i) {
      list = &list_or_create(node->children, p.steps[i].name);
      node = &element_or_create(*list, p.steps[i].index);
    }
    return *node;
  }

  /// The node at `p`, or null if any step is missing.
  const ValueNode* find(const ResolvedPath& p) const {
    const ValueNode* node = nullptr;
    const ChildList* level = &roots_;
    for (const auto& step : p.steps) {
      const auto* list = detail::find_child(*level, step.name);
      if (!list || step.index >= static_cast<std::int64_t>(list->size())) return nullptr;
      node = &(*list)[static_cast<std::size_t>(step.index)];
      level = &node->children;
    }
    return node;
  }

  Scalar read(const ResolvedPath& p) const {
    const ValueNode* node = find(p);
    if (!node) throw Fault(FaultKind::MissingNode, "no node at " + to_string(p));
    if (!node->scalar) throw Fault(FaultKind::UndefinedValue, "no value at " + to_string(p));
    return *node->scalar;
  }

  /// Number of values under the last step's name, with the last index
  /// ignored. 0 when anything on the way is missing.
  std::int64_t count(const ResolvedPath& p) const {
    const ChildList* level = &roots_;
    if (p.steps.size() > 1) {
      ResolvedPath parent{{p.steps.begin(), p.steps.end() - 1}};
      const ValueNode* node = find(parent);
      if (!node) return 0;
      level = &node->children;
    }
    const auto* list = detail::find_child(*level, p.steps.back().name);
    return list ? static_cast<std::int64_t>(list->size()) : 0;
  }

  /// Child names of the node at `p` in insertion order; empty if absent.
  std::vector<std::string> child_names(const ResolvedPath& p) const {
    std::vector<std::string> names;
    if (const ValueNode* node = find(p))
      for (const auto& entry : node->children) names.push_back(entry.first);
    return names;
  }

  void bind_alias(const std::string& name, syntax::Path target) {
    aliases_[name] = std::move(target);
  }

  bool is_alias(const std::string& name) const { return aliases_.count(name) != 0; }

  const ChildList& roots() const { return roots_; }

  /// Deterministic text form: one line per node in insertion order,
  /// `path = value` for nodes holding a value and bare `path` otherwise.
  std::string dump() const {
    std::string out;
    for (const auto& [name, list] : roots_)
      for (std::size_t k = 0; k < list.size(); ++k)
        dump_node(out, name + "[" + std::to_string(k) + "]", list[k]);
    return out;
  }

 private:
  static constexpr std::size_t kMaxNesting = 64;

  ChildList roots_;
  std::map<std::string, syntax::Path> aliases_;
  mutable std::size_t nesting_ = 0;

  static std::vector<ValueNode>& list_or_create(ChildList& level, const std::string& name) {
    if (auto* list = detail::find_child(level, name)) return *list;
    level.emplace_back(name, std::vector<ValueNode>{});
    return level.back().second;
  }

  static ValueNode& element_or_create(std::vector<ValueNode>& list, std::int64_t index) {
    const auto k = static_cast<std::size_t>(index);
    if (list.size() <= k) list.resize(k + 1);
    return list[k];
  }

  static void dump_node(std::string& out, const std::string& prefix, const ValueNode& node) {
    out += prefix;
    if (node.scalar) out += " = " + format_scalar_typed(*node.scalar);
    out += "\n";
    for (const auto& [name, list] : node.children)
      for (std::size_t k = 0; k < list.size(); ++k)
        dump_node(out, prefix + "." + name + "[" + std::to_string(k) + "]", list[k]);
  }

  template <typename IndexEval>
  static std::int64_t eval_index(const syntax::ExprPtr& index, IndexEval& eval) {
    if (!index) return 0;
    const std::int64_t v = eval(*index);
    if (v < 0) throw Fault(FaultKind::NegativeIndex, "negative index " + std::to_string(v));
    return v;
  }

  template <typename IndexEval>
  ResolvedPath resolve_impl(const syntax::Path& path, IndexEval& eval,
                            std::set<std::string>& visiting) const {
    ResolvedPath out;
    const auto& root = path.segments.front();
    if (auto it = aliases_.find(root.name); it != aliases_.end()) {
      if (!visiting.insert(root.name).second)
        throw Fault(FaultKind::AliasCycle, "alias cycle through '" + root.name + "'");
      out = resolve_impl(it->second, eval, visiting);
      if (root.index) out.steps.back().index = eval_index(root.index, eval);
    } else {
      out.steps.push_back({root.name, eval_index(root.index, eval)});
    }
    for (std::size_t i = 1; i < path.segments.size(); ++i)
      out.steps.push_back(
          {path.segments[i].name, eval_index(path.segments[i].index, eval)});
    return out;
  }
};

}  // namespace joliet::values
