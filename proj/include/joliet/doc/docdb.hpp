#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "joliet/doc/builtin_docs.hpp"
#include "joliet/syntax/ast.hpp"
#include "json.hpp"

namespace joliet::doc {

enum class Category { Protocol, Interface, NotDocumentable };

inline std::string_view category_name(Category c) {
  switch (c) {
    case Category::Protocol: return "protocol";
    case Category::Interface: return "interface";
    case Category::NotDocumentable: return "none";
  }
  return "?";
}

/// Documentation tables, name -> markdown body. `source_interfaces` is
/// synthesized from the interfaces declared in the open file and takes
/// precedence over `interfaces` from categorization files.
struct DocDatabase {
  std::map<std::string, std::string> protocols;
  std::map<std::string, std::string> interfaces;
  std::map<std::string, std::string> source_interfaces;

  friend bool operator==(const DocDatabase&, const DocDatabase&) = default;
};

class DocDbError : public std::runtime_error {
 public:
  DocDbError(std::string path, const std::string& reason)
      : std::runtime_error(path + ": " + reason), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Overlays one categorization document onto `db`; later entries win.
/// Schema: an object with optional "protocols" and "interfaces" keys, each
/// mapping names to markdown strings.
inline void merge_doc_json(DocDatabase& db, const nlohmann::json& doc, const std::string& origin) {
  if (!doc.is_object()) throw DocDbError(origin, "top level must be a JSON object");
  for (const auto& [key, table] : doc.items()) {
    std::map<std::string, std::string>* target = nullptr;
    if (key == "protocols")
      target = &db.protocols;
    else if (key == "interfaces")
      target = &db.interfaces;
    else
      throw DocDbError(origin, "unknown top-level key '" + key + "'");
    if (!table.is_object()) throw DocDbError(origin, "'" + key + "' must be an object");
    for (const auto& [name, body] : table.items()) {
      if (!body.is_string())
        throw DocDbError(origin, "documentation for '" + key + "." + name + "' is not a string");
      (*target)[name] = body.get<std::string>();
    }
  }
}

inline void merge_doc_file(DocDatabase& db, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocDbError(path, "cannot read file");
  std::ostringstream text;
  text << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw DocDbError(path, std::string("malformed JSON: ") + e.what());
  }
  merge_doc_json(db, doc, path);
}

inline DocDatabase builtin_doc_db() {
  DocDatabase db;
  merge_doc_json(db, nlohmann::json::parse(kBuiltinDocsJson), "<builtin>");
  return db;
}

/// Markdown summary of a declared interface: one line of prose, then a
/// table of its operations.
inline std::string synthesize_interface_doc(const syntax::InterfaceDecl& decl) {
  const auto n = decl.operations.size();
  std::string md = "**interface " + decl.name + "** (declared in this file): " +
                   std::to_string(n) + (n == 1 ? " operation." : " operations.") + "\n\n";
  md += "| Operation | Kind | Request | Response |\n";
  md += "|---|---|---|---|\n";
  for (const auto& op : decl.operations) {
    md += "| `" + op.name + "` | " +
          (op.kind == syntax::OperationKind::RequestResponse ? "RequestResponse" : "OneWay") +
          " | `" + op.request_type + "` | " +
          (op.response_type ? "`" + *op.response_type + "`" : std::string("-")) + " |\n";
  }
  return md;
}

inline void add_source_interfaces(DocDatabase& db, const syntax::Program& program) {
  for (const auto& decl : program.interfaces)
    db.source_interfaces[decl.name] = synthesize_interface_doc(decl);
}

/// Loads categorization files in order over `base` (later files override
/// earlier ones per key), then synthesizes docs for the interfaces
/// declared in `program`, when given.
inline DocDatabase load_doc_db(const std::vector<std::string>& paths,
                               const syntax::Program* program = nullptr,
                               DocDatabase base = {}) {
  for (const auto& path : paths) merge_doc_file(base, path);
  if (program) add_source_interfaces(base, *program);
  return base;
}

}  // namespace joliet::doc
