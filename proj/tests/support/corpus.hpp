#pragma once

// Access to the on-disk test corpus.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace joliet::testing {

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::filesystem::path corpus_dir() { return JOLIET_CORPUS_DIR; }
inline std::filesystem::path fixture_dir() { return JOLIET_FIXTURE_DIR; }
inline std::string fixture(const std::string& name) { return (fixture_dir() / name).string(); }
inline std::string corpus_source(const std::string& name) {
  return read_text(corpus_dir() / (name + ".jol"));
}

/// Every corpus program, sorted by file name.
inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.path().extension() == ".jol") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

/// The golden output lines stored next to a corpus program.
inline std::vector<std::string> expected_lines(const std::filesystem::path& jol) {
  auto p = jol;
  std::istringstream in(read_text(p.replace_extension(".expected")));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

/// Expected fault kind name, or empty when the program runs to completion.
inline std::string expected_fault(const std::filesystem::path& jol) {
  auto p = jol;
  p.replace_extension(".fault");
  if (!std::filesystem::exists(p)) return {};
  auto s = read_text(p);
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace joliet::testing
