#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "concord/cli.hpp"

namespace concord::cli {

constexpr std::uint64_t kDefaultSeed = 20240101;

/// Every option any subcommand accepts; each command reads its own.
struct Options {
  std::string expression;
  std::string polynomial;
  bool fox_milnor = false;
  std::optional<long> cyclotomic_bound;
  std::optional<std::string> at;
  std::vector<std::string> pairs;
  int k = 0;
  int max_index = 0;
  int n = 0;
  std::optional<int> jprime;
  std::string family = "J";
  std::optional<std::string> label;
  std::optional<long> a1;
  std::optional<long> a2;
  std::optional<std::string> registry;
  std::size_t rank = 8;
  int trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
  std::optional<std::string> svg_path;
};

namespace commands {

CommandResult alexander(const Options& o, std::ostream& out);
CommandResult genus(const Options& o, std::ostream& out);
CommandResult gsp_bound(const Options& o, std::ostream& out);
CommandResult fox_milnor(const Options& o, std::ostream& out);
CommandResult factor(const Options& o, std::ostream& out);
CommandResult sig_jumps(const Options& o, std::ostream& out);
CommandResult sig_certify(const Options& o, std::ostream& out);
CommandResult upsilon(const Options& o, std::ostream& out);
CommandResult upsilon_obstruct(const Options& o, std::ostream& out);
CommandResult upsilon_certify(const Options& o, std::ostream& out);
CommandResult ordered_demo(const Options& o, std::ostream& out);
CommandResult eps_obstruct(const Options& o, std::ostream& out);
CommandResult eps_certify(const Options& o, std::ostream& out);
CommandResult family(const Options& o, std::ostream& out);

}  // namespace commands

}  // namespace concord::cli
