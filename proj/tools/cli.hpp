#ifndef CURLED2_TOOLS_CLI_HPP
#define CURLED2_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace curled2::cli {

/// Runs one CLI invocation (args exclude the program name) and writes the
/// result to out/err. Exit codes: 0 success, 1 verification or predicate
/// failure, 2 malformed input or unsupported field.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace curled2::cli

#endif
