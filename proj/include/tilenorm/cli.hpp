#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilenorm::cli {

enum Exit : int {
  ok = 0,
  usage = 1,
  parse_error = 2,
  budget_exhausted = 3,
  not_a_cycle = 4,
  reduction_failed = 5,
  empty_pattern_set = 6,
  verification_failed = 7,
};

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilenorm::cli
