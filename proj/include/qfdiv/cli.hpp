#ifndef QFDIV_CLI_HPP
#define QFDIV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qfdiv::cli {

/// Process exit codes.
enum ExitCode : int
{
    kConsistent = 0,        // every result agrees with the theorems checked
    kTheoremViolation = 1,  // a result contradicts a proved statement: a bug
    kUsageError = 2
};

/// Runs one verb. Data goes to `out`, diagnostics to `err`.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace qfdiv::cli

#endif // QFDIV_CLI_HPP
