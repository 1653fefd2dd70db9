#ifndef TROPMIX_CLI_HPP
#define TROPMIX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tropmix {

/// Batch front end. Exit code 0 for a completed analysis (whatever the
/// verdict), 2 for input errors, 3 when a resource cap stopped the run.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropmix

#endif
