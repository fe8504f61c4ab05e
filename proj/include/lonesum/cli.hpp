#ifndef LONESUM_CLI_HPP
#define LONESUM_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace lonesum::cli {

/// Runs one command line (program name excluded). Returns the process exit
/// code: 0 on success, 1 on a verification failure or a non-decomposable
/// `decompose` input, 2 on bad input or usage.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lonesum::cli

#endif  // LONESUM_CLI_HPP
