// Batch command-line front end. Every command builds one OutputDocument; the
// human and machine renderings are both derived from it.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ktcp::cli {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

struct OutputDocument {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  int format_version = kFormatVersion;

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

nlohmann::json to_json(const OutputDocument& doc);
/// Throws ktcp::Error on a malformed or unknown-version document.
OutputDocument parse_output_document(std::string_view text);

/// Human-readable rendering, one result per line.
std::string render_human(const OutputDocument& doc);

/// Runs one command line (args excludes the program name). Results go to
/// `out`, a one-line diagnostic to `err`. Returns 0 on success, 1 when the
/// computation rejects its input and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktcp::cli
