#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "concord/certificate.hpp"
#include "concord/numeric.hpp"

namespace concord::cli {

using concord::to_string;

enum class Status { ok, invalid, inconclusive, error };

std::string to_string(Status status);

/// 0 for ok, 1 for invalid or inconclusive, 2 for error.
int exit_code(Status status);

struct CommandResult {
  Status status = Status::error;
  std::string command;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<Provenance> provenance;

  /// {"command", "status", "provenance", "result"}; the document written by --json.
  nlohmann::json document() const;
};

/// Runs one command line (without the program name). Human-readable output
/// goes to `out`, diagnostics to `err`; artifacts are written to the paths
/// given by --json, --csv and --svg.
CommandResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Process entry point: runs and returns the exit code.
int main(int argc, char** argv);

}  // namespace concord::cli
