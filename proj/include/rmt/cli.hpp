#pragma once

#include <ostream>

namespace rmt::cli {

/// Entry point of the `rmtlab` command. Exit status: 0 success, 1 numerical
/// or data failure, 2 usage error. CSV goes to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rmt::cli
