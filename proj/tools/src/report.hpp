#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hnlab::cli {

using nlohmann::json;

enum class Format { table, json };

/// Exit codes: 0 pass, 1 a check failed, 2 the input was rejected.
enum ExitCode { exit_pass = 0, exit_check_failed = 1, exit_input_error = 2 };

struct Report {
  std::string subcommand;
  json inputs = json::object();
  json results = json::object();
  std::optional<bool> pass;  ///< set by check-style commands only
  std::vector<std::vector<std::string>> table;

  int exit_code() const { return pass.value_or(true) ? exit_pass : exit_check_failed; }
};

/// "sha256:" followed by the hex digest of the compact, key-sorted dump of `inputs`.
std::string digest(const json& inputs);

/// Key-sorted JSON document: subcommand, inputs, inputs_digest, results and, for checks, pass.
json to_json(const Report& r);

std::string render(const Report& r, Format format);

/// JSON document written on stdout for failures in json mode, so scripted callers always get one.
std::string render_error(const std::string& subcommand, const std::string& message, int code);

}  // namespace hnlab::cli
