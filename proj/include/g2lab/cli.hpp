#ifndef G2LAB_CLI_HPP
#define G2LAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace g2lab {

/// The whole command-line front end, stream-injected for testability.
/// `args` excludes the program name. Exit codes: 0 ok, 1 internal error,
/// 2 malformed input, 3 theorem violation.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace g2lab

#endif
