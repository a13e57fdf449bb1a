#ifndef EMCOVER_TOOLS_CLI_HPP
#define EMCOVER_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace emcover::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kBudgetExhausted = 3,
    kBadInput = 4,
};

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace emcover::cli

#endif  // EMCOVER_TOOLS_CLI_HPP
