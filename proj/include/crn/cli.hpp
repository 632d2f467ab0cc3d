#ifndef CRN_CLI_HPP
#define CRN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace crn {

/// Entry point of the `crn` tool. args[0] is the program name. Returns the
/// exit code: 0 yes/success, 1 no, 2 error or unknown.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace crn

#endif  // CRN_CLI_HPP
