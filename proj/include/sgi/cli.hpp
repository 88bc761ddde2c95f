#ifndef SGI_CLI_HPP
#define SGI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sgi {

/// Runs one CLI invocation. args excludes the program name.
/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
/// Output is byte-stable for identical arguments and input files.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgi

#endif
