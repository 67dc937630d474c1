#pragma once

#include <iosfwd>

namespace leaderline::cli {

enum ExitCode : int {
  kOk = 0,
  kNotAdmissible = 1,
  kInfeasible = 2,
  kMalformed = 3,
  kLimitExceeded = 4,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leaderline::cli
