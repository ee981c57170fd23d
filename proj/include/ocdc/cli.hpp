#ifndef OCDC_CLI_HPP
#define OCDC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ocdc::cli {

/// Exit codes: 0 success / Found / verified, 1 usage or I/O error,
/// 2 verification failure or NoneExists, 3 search budget exhausted.
enum Exit : int { kOk = 0, kUsage = 1, kNegative = 2, kUnresolved = 3 };

/// Entry point behind the `ocdc` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ocdc::cli

#endif  // OCDC_CLI_HPP
