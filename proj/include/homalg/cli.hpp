#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homalg/structure_file.hpp"

namespace homalg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitCheckFailure = 4,
};

/// Runs the command-line tool on `args` (without the program name),
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
int run_homcheck(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads, parses and validates a file, or maps the failure to an exit code
/// with a diagnostic on `err`. Returns kExitPass on success.
int load_file(const std::string& path, StructureFile& file, std::ostream& err);

}  // namespace homalg
