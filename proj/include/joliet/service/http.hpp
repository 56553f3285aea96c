#pragma once

#include <filesystem>
#include <string>

#include "httplib.h"
#include "joliet/service/handlers.hpp"

namespace joliet::service {

/// Registers the JSON endpoints on `server`:
///   POST /hover, POST /desugar, POST /run, POST /tokenize, GET /health.
/// When `static_dir` names a directory, it is served at `/`.
inline void mount(httplib::Server& server, const ServiceConfig& config,
                  const std::string& static_dir = {}) {
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(serialize(r.body), "application/json");
  };

  server.Post("/hover", [&config, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, with_json_body(req.body, [&](const json& b) { return handle_hover(b, config); }));
  });
  server.Post("/desugar", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, with_json_body(req.body, [](const json& b) { return handle_desugar(b); }));
  });
  server.Post("/run", [&config, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, with_json_body(req.body, [&](const json& b) { return handle_run(b, config); }));
  });
  server.Post("/tokenize", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, with_json_body(req.body, [](const json& b) { return handle_tokenize(b); }));
  });
  server.Get("/health", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, Response{200, json{{"status", "ok"}}});
  });

  if (!static_dir.empty() && std::filesystem::is_directory(static_dir))
    server.set_mount_point("/", static_dir);
}

}  // namespace joliet::service
