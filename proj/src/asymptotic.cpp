#include "tilenorm/asymptotic.hpp"

#include "tilenorm/errors.hpp"

#include <algorithm>

namespace tilenorm {

bool NormTable::complete() const {
  return std::all_of(rows.begin(), rows.end(), [](const NormRow& r) { return r.status == SearchStatus::exact; });
}

NormTable asymptotic_norm_upper(const APComplex& cx, const Vector& c, long max_n, const Budget& budget) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  if (!is_cycle(cx, c)) throw NotACycle("chain " + format_cycle(c, cx.cells2) + " is not a cycle");
  NormTable table;
  table.cycle = c;
  table.denominator = denominator_lcm(c);
  bool zero = std::all_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) == 0; });
  if (zero) {
    table.rows.push_back(NormRow{1, 0, SearchStatus::exact, Rational(0)});
    table.best_upper = Rational(0);
    table.best_n = 1;
    return table;
  }
  for (long n = 1; n <= max_n; ++n) {
    Rational factor(table.denominator * n);
    Vector scaled(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) scaled[i] = c[i] * factor;
    NormCertificate cert = thurston_norm(cx, scaled, budget);
    NormRow row{n, cert.value, cert.status, table.best_upper};
    if (cert.status == SearchStatus::exact) {
      Rational ratio = Rational(cert.value) / factor;
      if (!table.best_upper || ratio < *table.best_upper) {
        table.best_upper = ratio;
        table.best_witness = cert.witness;
        table.best_n = n;
      }
      row.running_best = table.best_upper;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Rational lipschitz_bound(const APComplex& cx, const Vector& c) {
  Rational l1 = 0;
  for (const auto& v : c) l1 += abs(v);
  return Rational(static_cast<long>(cx.max_vertices)) * l1;
}

SubadditivityReport subadditivity_check(const APComplex& cx, const Vector& first, const Vector& second,
                                        const Budget& budget) {
  if (first.size() != second.size()) throw DimensionMismatch("cycles of different length");
  Vector sum(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) sum[i] = first[i] + second[i];
  auto a = thurston_norm(cx, first, budget);
  auto b = thurston_norm(cx, second, budget);
  auto s = thurston_norm(cx, sum, budget);
  SubadditivityReport r;
  r.norm_first = a.value;
  r.norm_second = b.value;
  r.norm_sum = s.value;
  r.slack = a.value + b.value - s.value;
  r.all_exact = a.status == SearchStatus::exact && b.status == SearchStatus::exact && s.status == SearchStatus::exact;
  return r;
}

}  // namespace tilenorm
