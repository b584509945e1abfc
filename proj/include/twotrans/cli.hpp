#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twotrans {

/// Runs one command-line invocation. args excludes the program name.
/// Returns the process exit code: 0 success/pass, 1 check failure, 2 usage
/// or precondition error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Directory holding the shipped table documents (compile-time default,
/// overridable with --data-dir).
std::string default_data_dir();

}  // namespace twotrans
