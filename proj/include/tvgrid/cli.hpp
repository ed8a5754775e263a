// Command-line front end: instance generation, the partition search, the
// transversal and colorful-selection demos, and the proof verification
// suite. Exposed as a function so tests can drive it in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tvgrid {

// Exit codes: 0 success / witness found, 1 theorem-relevant negative
// (no witness, failed verification), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tvgrid
