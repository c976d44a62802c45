#ifndef CURVEDIM_CLI_HPP
#define CURVEDIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace curvedim::cli {

// Exit codes: 0 success / verifier pass, 1 verifier fail or mathematical
// negative, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace curvedim::cli

#endif  // CURVEDIM_CLI_HPP
