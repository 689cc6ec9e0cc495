#pragma once

#include <cstddef>
#include <cstdint>

namespace tilenorm {

// Search limits. Every search that hits one of these reports an incomplete
// result instead of running on.
struct Budget {
  std::uint64_t nodes = 2'000'000;   // branch-and-bound / backtracking nodes per search
  std::size_t max_rays = 20'000;     // working set of the double description method
  std::size_t max_patterns = 20'000; // legal patterns per radius
  std::size_t max_cycle_weight = 12;  // largest l1 weight tried by the periodic-tiling search
  std::size_t max_lp_columns = 2'000; // W^p tiles beyond which cone membership is not attempted
};

}  // namespace tilenorm
