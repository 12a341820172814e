#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace creutz {

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless -o names a file; diagnostics go to `err`.
/// Returns 0 on success, 2 for usage or validation errors, 3 for domain
/// errors (metallic system, closed form outside its validity, ...).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace creutz
