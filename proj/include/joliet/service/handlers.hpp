#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "joliet/doc/docdb.hpp"
#include "joliet/doc/hover.hpp"
#include "joliet/doc/markdown.hpp"
#include "joliet/interp.hpp"
#include "joliet/syntax/parser.hpp"
#include "joliet/syntax/printer.hpp"
#include "joliet/transform.hpp"
#include "json.hpp"

namespace joliet::service {

using nlohmann::json;

/// Immutable server-wide settings, shared by all requests.
struct ServiceConfig {
  /// Built-in docs overlaid with the server's own `--docs` files.
  doc::DocDatabase default_docs = doc::builtin_doc_db();
  std::int64_t max_step_budget = interp::kDefaultStepBudget;
};

/// A handler outcome: HTTP-style status plus JSON body.
struct Response {
  int status = 200;
  json body;
};

class RequestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Hover

struct HoverRequest {
  std::string source;
  int line = 1;
  int col = 1;
  std::vector<std::string> doc_paths;
};

/// The three views of one doc body: `snippet` for the small window,
/// `full_markdown` for "docs", `html` for "online". All fields are empty
/// when nothing was found.
struct HoverResponse {
  bool found = false;
  std::string word;
  std::string category;
  std::string snippet;
  std::string full_markdown;
  std::string html;
};

inline json to_json(const HoverResponse& r) {
  return json{{"found", r.found},       {"word", r.word},
              {"category", r.category}, {"snippet", r.snippet},
              {"fullMarkdown", r.full_markdown}, {"html", r.html}};
}

inline HoverResponse hover(const HoverRequest& req, const ServiceConfig& config) {
  doc::DocDatabase db = config.default_docs;
  try {
    for (const auto& path : req.doc_paths) doc::merge_doc_file(db, path);
  } catch (const doc::DocDbError& e) {
    throw RequestError(e.what());
  }

  std::optional<syntax::Program> program;
  try {
    program = syntax::parse_program(req.source);
    doc::add_source_interfaces(db, *program);
  } catch (const syntax::ParseError&) {
    // Live buffers often do not parse; categorize from the line instead.
  }

  HoverResponse out;
  auto hit = doc::hover(program ? &*program : nullptr, req.source, req.line, req.col, db);
  if (!hit) return out;
  out.found = true;
  out.word = hit->word;
  out.category = std::string(doc::category_name(hit->category));
  out.snippet = doc::first_paragraph(hit->markdown);
  out.full_markdown = hit->markdown;
  out.html = doc::render_html(hit->markdown);
  return out;
}

// ---------------------------------------------------------------------------
// Request decoding

namespace detail {

inline const json& field(const json& body, const char* name) {
  auto it = body.find(name);
  if (it == body.end()) throw RequestError(std::string("missing field '") + name + "'");
  return *it;
}

inline std::string string_field(const json& body, const char* name) {
  const json& v = field(body, name);
  if (!v.is_string()) throw RequestError(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

inline std::int64_t int_field(const json& v, const char* name) {
  if (!v.is_number_integer())
    throw RequestError(std::string("field '") + name + "' must be an integer");
  return v.get<std::int64_t>();
}

inline void require_object(const json& body) {
  if (!body.is_object()) throw RequestError("request body must be a JSON object");
}

inline Response bad_request(const std::string& message) {
  return {400, json{{"error", "bad_request"}, {"message", message}}};
}

inline Response parse_error(const syntax::ParseError& e) {
  return {422, json{{"error", "parse"},
                    {"line", e.line()},
                    {"col", e.col()},
                    {"message", e.what()}}};
}

}  // namespace detail

inline HoverRequest hover_request_from_json(const json& body) {
  detail::require_object(body);
  HoverRequest req;
  req.source = detail::string_field(body, "source");
  const auto line = detail::int_field(detail::field(body, "line"), "line");
  const auto col = detail::int_field(detail::field(body, "col"), "col");
  if (line < 1 || col < 1 || line > INT32_MAX || col > INT32_MAX)
    throw RequestError("'line' and 'col' must be positive");
  req.line = static_cast<int>(line);
  req.col = static_cast<int>(col);
  if (auto it = body.find("docPaths"); it != body.end() && !it->is_null()) {
    if (!it->is_array()) throw RequestError("'docPaths' must be an array of strings");
    for (const auto& p : *it) {
      if (!p.is_string()) throw RequestError("'docPaths' must be an array of strings");
      req.doc_paths.push_back(p.get<std::string>());
    }
  }
  return req;
}

// ---------------------------------------------------------------------------
// Endpoints

inline Response handle_hover(const json& body, const ServiceConfig& config) {
  try {
    return {200, to_json(hover(hover_request_from_json(body), config))};
  } catch (const RequestError& e) {
    return detail::bad_request(e.what());
  }
}

/// Token list for client-side highlighting. Lexing errors use the parse
/// error payload.
inline Response tokenize_source(const std::string& source) {
  std::vector<syntax::Token> tokens;
  try {
    tokens = syntax::tokenize(source);
  } catch (const syntax::LexError& e) {
    return detail::parse_error(syntax::ParseError(e.line(), e.col(), "valid token", e.what()));
  }
  json list = json::array();
  for (const auto& t : tokens)
    list.push_back(json{{"kind", std::string(syntax::token_kind_name(t.kind))},
                        {"text", t.text},
                        {"line", t.line},
                        {"col", t.col},
                        {"len", t.len}});
  return {200, json{{"tokens", std::move(list)}}};
}

inline Response handle_tokenize(const json& body) {
  try {
    detail::require_object(body);
    return tokenize_source(detail::string_field(body, "source"));
  } catch (const RequestError& e) {
    return detail::bad_request(e.what());
  }
}

/// parse -> desugar -> pretty-print.
inline Response desugar_source(const std::string& source) {
  try {
    auto program = syntax::parse_program(source);
    return {200, json{{"source", syntax::pretty_print(transform::desugar(program))}}};
  } catch (const syntax::ParseError& e) {
    return detail::parse_error(e);
  }
}

inline Response handle_desugar(const json& body) {
  try {
    detail::require_object(body);
    return desugar_source(detail::string_field(body, "source"));
  } catch (const RequestError& e) {
    return detail::bad_request(e.what());
  }
}

inline json fault_json(const interp::FaultInfo& f) {
  return json{{"kind", std::string(fault_kind_name(f.kind))},
              {"line", f.line},
              {"col", f.col},
              {"message", f.message}};
}

/// parse -> run. Faults are a normal outcome and come back with status 200.
inline Response run_source(const std::string& source, std::int64_t step_budget) {
  try {
    auto program = syntax::parse_program(source);
    auto result = interp::run(program, step_budget);
    json body{{"output", result.output}, {"dump", result.dump}};
    if (result.fault) body["fault"] = fault_json(*result.fault);
    return {200, std::move(body)};
  } catch (const syntax::ParseError& e) {
    return detail::parse_error(e);
  }
}

inline Response handle_run(const json& body, const ServiceConfig& config) {
  try {
    detail::require_object(body);
    const auto source = detail::string_field(body, "source");
    std::int64_t budget = config.max_step_budget;
    if (auto it = body.find("stepBudget"); it != body.end() && !it->is_null()) {
      budget = detail::int_field(*it, "stepBudget");
      if (budget < 1 || budget > config.max_step_budget)
        throw RequestError("'stepBudget' must be between 1 and " +
                           std::to_string(config.max_step_budget));
    }
    return run_source(source, budget);
  } catch (const RequestError& e) {
    return detail::bad_request(e.what());
  }
}

/// Wire form of a response body. Invalid UTF-8 coming from program text
/// is replaced rather than rejected.
inline std::string serialize(const json& body) {
  return body.dump(-1, ' ', false, json::error_handler_t::replace);
}

/// Decodes a raw request body; a body that is not JSON is a 400.
template <typename Handler>
Response with_json_body(const std::string& raw, Handler&& handler) {
  json body;
  try {
    body = json::parse(raw);
  } catch (const json::parse_error& e) {
    return detail::bad_request(std::string("malformed JSON: ") + e.what());
  }
  return handler(body);
}

}  // namespace joliet::service
