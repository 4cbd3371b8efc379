#pragma once

#include <ostream>

namespace polylift::cli {

  /// Exit codes: 0 all checks pass, 1 counterexample or violation, 2 usage or
  /// parse error.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polylift::cli
