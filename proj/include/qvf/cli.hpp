#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qvf {

/// Runs the command-line frontend on `args` (without the program name).
/// Results go to `out` as one JSON object, diagnostics to `err`.
/// Returns 0 on success, 1 on domain errors and 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qvf
