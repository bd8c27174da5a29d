#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grflop::cli {

enum class Format { text, json };

struct RunConfig {
  std::vector<std::string> subcommand;  // e.g. {"quantum", "semisimple"}
  int r = 0;
  int n = 0;
  int k_max = 4;
  Format format = Format::text;
  int jobs = 1;
  std::string bundle;
  std::string q0 = "1";
  std::string side = "minus";
  std::string lambda = "1";
  std::string mu = "1";
  int power = 1;
  int degree = -1;
  int count = 20;
  unsigned seed = 1;
  bool control = false;
};

struct CommandEntry {
  std::string path;                     // "schubert mult"
  std::vector<std::string> operations;  // library operations it exposes
  std::string summary;
};

const std::vector<CommandEntry>& command_table();

/// Exit codes: 0 all requested checks pass, 1 a mathematical check failed,
/// 2 usage or input error (message on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grflop::cli
