#pragma once

#include <string>
#include <vector>

#include "homalg/structure_file.hpp"

namespace support {

/// Outcome of adding one to every structure constant of a file, one at a
/// time. Each mutated file goes through serialization, parsing and
/// verification as the command-line tool would see it.
struct MutationOutcome {
  std::size_t total = 0;
  std::size_t validation_errors = 0;  // exit code 3
  std::size_t check_failures = 0;     // exit code 4
  std::vector<std::string> undetected;
  std::vector<std::string> unexpected;  // parse errors or other exit codes
};

MutationOutcome mutation_suite(const homalg::StructureFile& file);

/// The exit code the verify command returns for this text, computed in process.
int verify_exit_code(const std::string& text, const std::string& object = {});

}  // namespace support
