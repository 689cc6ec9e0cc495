#pragma once

#include "tilenorm/budget.hpp"
#include "tilenorm/surface.hpp"

#include <optional>
#include <vector>

namespace tilenorm {

struct NormRow {
  long n = 1;
  long value = 0;  // ||n d c||, exact or the best surface found
  SearchStatus status = SearchStatus::exact;
  std::optional<Rational> running_best;  // best upper bound after this row
};

// ||n d c|| / (n d) for n = 1..maxN, d the least integer making d c integral.
struct NormTable {
  Vector cycle;
  Integer denominator = 1;
  std::vector<NormRow> rows;
  std::optional<Rational> best_upper;  // min over exact rows
  std::optional<GluedSurface> best_witness;
  long best_n = 0;

  bool complete() const;
};

inline constexpr long kDefaultMaxN = 4;

NormTable asymptotic_norm_upper(const APComplex& cx, const Vector& c, long max_n = kDefaultMaxN,
                                const Budget& budget = {});

// s |c|, s the largest vertex count among the prototiles.
Rational lipschitz_bound(const APComplex& cx, const Vector& c);

struct SubadditivityReport {
  long norm_first = 0;
  long norm_second = 0;
  long norm_sum = 0;
  long slack = 0;  // ||c1|| + ||c2|| - ||c1 + c2||
  bool all_exact = true;
  bool holds() const { return slack >= 0; }
};

SubadditivityReport subadditivity_check(const APComplex& cx, const Vector& first, const Vector& second,
                                        const Budget& budget = {});

}  // namespace tilenorm
