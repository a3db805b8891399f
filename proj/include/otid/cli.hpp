#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "otid/errors.hpp"

namespace otid {

/// 2 parse/config/io, 3 verification failure, 4 degenerate model or empty set.
int exit_code(ErrorKind kind);

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otid
