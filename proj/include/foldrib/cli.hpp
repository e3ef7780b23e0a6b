#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "foldrib/error.hpp"

namespace foldrib {

/// Exit status for an error: 1 input/validation, 2 pipeline precondition,
/// 3 internal check failure.
int exit_code_for(ErrorCode code);

/// Entry point of the `foldrib` command; args excludes the program name.
/// Machine output goes to `out`, human-readable summaries to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foldrib
