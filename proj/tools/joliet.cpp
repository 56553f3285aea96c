// joliet: command-line front end for the language core, the desugaring
// pass, the documentation engine and the HTTP service.
//
// Exit codes: 0 success, 1 parse error, 2 runtime fault, 3 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "joliet/service/handlers.hpp"
#include "joliet/service/http.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitFault = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int report_parse_error(const std::string& file, const joliet::service::json& body) {
  std::cerr << file << ":" << body["line"].get<int>() << ":" << body["col"].get<int>()
            << ": parse error: " << body["message"].get<std::string>() << "\n";
  return kExitParse;
}

int cmd_parse(const std::string& file) {
  try {
    std::cout << joliet::syntax::pretty_print(joliet::syntax::parse_program(read_file(file)));
    return kExitOk;
  } catch (const joliet::syntax::ParseError& e) {
    std::cerr << file << ":" << e.line() << ":" << e.col() << ": parse error: " << e.what()
              << "\n";
    return kExitParse;
  }
}

int cmd_desugar(const std::string& file) {
  auto r = joliet::service::desugar_source(read_file(file));
  if (r.status != 200) return report_parse_error(file, r.body);
  std::cout << r.body["source"].get<std::string>();
  return kExitOk;
}

int cmd_run(const std::string& file, std::int64_t budget, bool dump) {
  if (budget < 1) throw UsageError("--budget must be positive");
  auto r = joliet::service::run_source(read_file(file), budget);
  if (r.status != 200) return report_parse_error(file, r.body);
  for (const auto& line : r.body["output"]) std::cout << line.get<std::string>() << "\n";
  if (dump) std::cout << r.body["dump"].get<std::string>();
  if (auto it = r.body.find("fault"); it != r.body.end()) {
    const auto& f = *it;
    std::cerr << file << ":" << f["line"].get<int>() << ":" << f["col"].get<int>()
              << ": runtime fault " << f["kind"].get<std::string>() << ": "
              << f["message"].get<std::string>() << "\n";
    return kExitFault;
  }
  return kExitOk;
}

int cmd_doc(const std::string& file, int line, int col, const std::vector<std::string>& docs,
            bool html, bool as_json) {
  if (line < 1 || col < 1) throw UsageError("--line and --col must be positive");
  joliet::service::HoverRequest req{read_file(file), line, col, docs};
  joliet::service::HoverResponse resp;
  try {
    resp = joliet::service::hover(req, joliet::service::ServiceConfig{});
  } catch (const joliet::service::RequestError& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    std::cout << joliet::service::serialize(joliet::service::to_json(resp)) << "\n";
  } else if (!resp.found) {
    std::cerr << file << ":" << line << ":" << col << ": no documentation here\n";
  } else {
    std::cout << (html ? resp.html : resp.full_markdown) << "\n";
  }
  return kExitOk;
}

int cmd_serve(const std::string& host, int port, const std::vector<std::string>& docs,
              const std::string& static_dir) {
  joliet::service::ServiceConfig config;
  try {
    config.default_docs = joliet::doc::load_doc_db(docs, nullptr, config.default_docs);
  } catch (const joliet::doc::DocDbError& e) {
    throw UsageError(e.what());
  }
  if (!static_dir.empty() && !std::filesystem::is_directory(static_dir))
    throw UsageError("'" + static_dir + "' is not a directory");
  httplib::Server server;
  joliet::service::mount(server, config, static_dir);
  std::cerr << "joliet: listening on http://" << host << ":" << port << "\n";
  if (!server.listen(host, port)) throw UsageError("cannot listen on " + host + ":" + std::to_string(port));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"joliet: a small Jolie subset with arrow-foreach desugaring and inline docs"};
  app.require_subcommand(1);

  std::string file;
  std::int64_t budget = joliet::interp::kDefaultStepBudget;
  bool dump = false;
  int line = 0, col = 0;
  std::vector<std::string> docs;
  bool html = false, as_json = false;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;

  auto* parse = app.add_subcommand("parse", "Parse a file and print its canonical form");
  parse->add_option("FILE", file, "Source file (.jol)")->required();

  auto* desugar = app.add_subcommand("desugar", "Print the file with arrow-foreach lowered");
  desugar->add_option("FILE", file, "Source file (.jol)")->required();

  auto* run = app.add_subcommand("run", "Run main and print its output");
  run->add_option("FILE", file, "Source file (.jol)")->required();
  run->add_option("--budget", budget, "Maximum statement executions");
  run->add_flag("--dump", dump, "Print the final store after the output");

  auto* doc = app.add_subcommand("doc", "Show the documentation for the word at a position");
  doc->add_option("FILE", file, "Source file (.jol)")->required();
  doc->add_option("--line", line, "1-based line")->required();
  doc->add_option("--col", col, "1-based column")->required();
  doc->add_option("--docs", docs, "Categorization file (repeatable, later wins)");
  doc->add_flag("--html", html, "Print the HTML rendering instead of markdown");
  doc->add_flag("--json", as_json, "Print the full hover response as JSON");

  auto* serve = app.add_subcommand("serve", "Serve the JSON API (and an optional static UI)");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port");
  serve->add_option("--docs", docs, "Categorization file (repeatable, later wins)");
  serve->add_option("--static", static_dir, "Directory served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*parse) return cmd_parse(file);
    if (*desugar) return cmd_desugar(file);
    if (*run) return cmd_run(file, budget, dump);
    if (*doc) return cmd_doc(file, line, col, docs, html, as_json);
    if (*serve) return cmd_serve(host, port, docs, static_dir);
  } catch (const UsageError& e) {
    std::cerr << "joliet: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
