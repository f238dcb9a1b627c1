#ifndef ACCUT_CLI_HPP
#define ACCUT_CLI_HPP

#include <string>
#include <vector>

namespace accut {

// Command-line front end. args excludes the program name. Returns the process
// exit code: 0 on success (including --help), 1 on usage errors, 2 when the
// run itself fails (unreadable graph, invalid configuration, write failure).
int run_cli(const std::vector<std::string>& args);

}  // namespace accut

#endif
