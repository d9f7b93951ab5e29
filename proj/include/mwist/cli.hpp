#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwist {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,  // also: graph not claw-free for clawfree712
  exit_parse = 2,
  exit_disconnected = 3,
  exit_certificate = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwist
