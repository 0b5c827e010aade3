#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "eqrr/cover.hpp"

namespace eqrr::cli {

enum class Format { table, json };

struct RunConfig {
  std::string command;
  std::string family;       // empty unless --family
  std::string action_path;  // empty unless --action
  std::string divisor;      // micro-grammar, or @file.json
  Format format = Format::table;
  std::optional<Convention> convention;
  bool assert_nonspecial = false;
  bool pullback = false;
};

/// Either a config to run, or the exit status to return right away
/// (0 after --help, 1 on a usage error).
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one command. Returns 0 on success, 1 usage, 2 validation,
/// 3 consistency.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqrr::cli
