#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tilenorm {

class TilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public TilingError {
 public:
  SyntaxError(std::size_t line, const std::string& reason)
      : TilingError("line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

#define TILENORM_ERROR(Name)                 \
  class Name : public TilingError {          \
   public:                                   \
    using TilingError::TilingError;          \
  }

TILENORM_ERROR(DuplicateId);
TILENORM_ERROR(EmptySet);
TILENORM_ERROR(NonSimplePolygon);
TILENORM_ERROR(ClockwisePolygon);
TILENORM_ERROR(EdgeColorCountMismatch);
TILENORM_ERROR(NonConvexInput);
TILENORM_ERROR(DegenerateAfterZigzag);
TILENORM_ERROR(DimensionMismatch);
TILENORM_ERROR(NotIntegral);
TILENORM_ERROR(ZeroCycle);
TILENORM_ERROR(NotACycle);
TILENORM_ERROR(TooLarge);
TILENORM_ERROR(NotFlatTorus);
TILENORM_ERROR(EmptyPatternSet);
TILENORM_ERROR(UnknownTile);
TILENORM_ERROR(BudgetExhausted);

#undef TILENORM_ERROR

}  // namespace tilenorm
