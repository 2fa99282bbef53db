#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinnet {
namespace cli {

// Runs one command line (without the program name). Reports go to `out` or
// the --out file; diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace spinnet
