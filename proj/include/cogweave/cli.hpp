#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cogweave::cli {

// Runs one command line (without argv[0]) against the workspace file
// given by --workspace. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cogweave::cli
