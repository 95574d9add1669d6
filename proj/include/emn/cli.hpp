#ifndef EMN_CLI_HPP
#define EMN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace emn {

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`. Exit status: 0 success, 1 property failure
/// or suite violations, 2 usage or input errors, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace emn

#endif
