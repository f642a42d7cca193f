#ifndef NIG_CLI_HPP
#define NIG_CLI_HPP

#include <iosfwd>

namespace nig {

/// Entry point behind the `nig` binary. Exit status: 0 success or passing
/// report, 1 report with failures, 2 usage or parse error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nig

#endif  // NIG_CLI_HPP
