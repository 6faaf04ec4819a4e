#ifndef KNAPKIT_CLI_HPP
#define KNAPKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace knapkit {

// Entry point of the knapkit tool; args excludes the program name.
// Returns 0 on success, 1 on bad arguments or input, 2 when a solver limit
// was hit.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace knapkit

#endif  // KNAPKIT_CLI_HPP
