#include "tilenorm/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tilenorm {

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const Vector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Vector Matrix::multiply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) out[r] += (*this)(r, c) * x[c];
    }
  }
  return out;
}

Vector Matrix::left_multiply(const Vector& y) const {
  if (y.size() != rows_) throw std::invalid_argument("left_multiply: dimension mismatch");
  Vector out(cols_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (sgn(y[r]) == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) out[c] += y[r] * (*this)(r, c);
    }
  }
  return out;
}

EchelonForm reduced_row_echelon(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pick = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) != 0) {
        pick = i;
        break;
      }
    }
    if (pick == rows) continue;
    if (pick != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(pick, k));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < cols; ++k) reduced(i, k) = m(i, k);
  }
  return EchelonForm{std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  EchelonForm ef = reduced_row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -ef.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Feasibility solve_feasibility(const Matrix& a, const Vector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw std::invalid_argument("solve_feasibility: rhs size mismatch");

  // Tableau columns: n structural, m artificial, 1 rhs. Row m holds the
  // phase-one reduced costs.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  Matrix t(m + 1, width);
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) flip[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip[i] * a(i, j);
    t(i, n + i) = 1;
    t(i, rhs) = flip[i] * b[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }
  {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t(i, rhs);
    t(m, rhs) = -s;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (sgn(t(m, j)) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      Rational ratio = t(i, rhs) / t(i, enter);
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    assert(leave != m);
    Rational inv = 1 / t(leave, enter);
    for (std::size_t k = 0; k < width; ++k) {
      if (sgn(t(leave, k)) != 0) t(leave, k) *= inv;
    }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      Rational f = t(i, enter);
      for (std::size_t k = 0; k < width; ++k) {
        if (sgn(t(leave, k)) != 0) t(i, k) -= f * t(leave, k);
      }
    }
    basis[leave] = enter;
  }

  Feasibility result;
  if (sgn(t(m, rhs)) == 0) {
    result.feasible = true;
    result.point.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.point[basis[i]] = t(i, rhs);
    }
    return result;
  }
  // Phase-one duals: y_i = 1 - reduced cost of artificial i. The flipped
  // system has y^T A' <= 0 and y^T b' > 0; negate and undo the flips.
  result.farkas.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = 1 - t(m, n + i);
    result.farkas[i] = -flip[i] * y;
  }
  return result;
}

bool check_farkas(const Matrix& a, const Vector& b, const Vector& y) {
  if (y.size() != a.rows() || b.size() != a.rows()) return false;
  Vector ya = a.left_multiply(y);
  for (const auto& v : ya) {
    if (sgn(v) < 0) return false;
  }
  return sgn(dot(y, b)) < 0;
}

namespace {

using ZeroSet = std::vector<bool>;

ZeroSet zero_set(const Vector& r, std::size_t processed) {
  ZeroSet z(processed);
  for (std::size_t j = 0; j < processed; ++j) z[j] = sgn(r[j]) == 0;
  return z;
}

bool contains(const ZeroSet& big, const ZeroSet& small) {
  for (std::size_t j = 0; j < small.size(); ++j) {
    if (small[j] && !big[j]) return false;
  }
  return true;
}

Vector combine(const Vector& pos, const Vector& neg, std::size_t i) {
  // pos_i > 0 > neg_i: pos_i * neg - neg_i * pos vanishes at i.
  Vector out(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) out[k] = pos[i] * neg[k] - neg[i] * pos[k];
  return primitive_direction(out);
}

}  // namespace

RayEnumeration nonneg_kernel_rays(const Matrix& a, std::size_t max_rays) {
  const std::size_t n = a.cols();
  std::vector<Vector> lineality = kernel_basis(a);
  std::vector<Vector> rays;
  RayEnumeration out;

  for (std::size_t i = 0; i < n; ++i) {
    auto lit = std::find_if(lineality.begin(), lineality.end(), [&](const Vector& l) { return sgn(l[i]) != 0; });
    if (lit != lineality.end()) {
      Vector l0 = *lit;
      if (sgn(l0[i]) < 0) {
        for (auto& v : l0) v = -v;
      }
      lineality.erase(lit);
      auto project = [&](Vector& v) {
        if (sgn(v[i]) == 0) return;
        Rational f = v[i] / l0[i];
        for (std::size_t k = 0; k < n; ++k) v[k] -= f * l0[k];
        v = primitive_direction(v);
      };
      for (auto& l : lineality) project(l);
      for (auto& r : rays) project(r);
      rays.push_back(primitive_direction(l0));
      continue;
    }
    std::vector<std::size_t> pos, neg;
    std::vector<Vector> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      int s = sgn(rays[k][i]);
      if (s > 0) pos.push_back(k);
      if (s < 0) neg.push_back(k);
      if (s >= 0) next.push_back(rays[k]);
    }
    if (!neg.empty()) {
      std::vector<ZeroSet> zs;
      zs.reserve(rays.size());
      for (const auto& r : rays) zs.push_back(zero_set(r, i));
      for (auto p : pos) {
        for (auto q : neg) {
          ZeroSet common(i);
          for (std::size_t j = 0; j < i; ++j) common[j] = zs[p][j] && zs[q][j];
          bool adjacent = true;
          for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
            if (k == p || k == q) continue;
            if (contains(zs[k], common)) adjacent = false;
          }
          if (adjacent) next.push_back(combine(rays[p], rays[q], i));
        }
      }
    }
    rays = std::move(next);
    if (rays.size() > max_rays) {
      out.complete = false;
      break;
    }
  }

  if (out.complete) {
    out.rays = std::move(rays);
  } else {
    for (auto& r : rays) {
      bool nonneg = std::all_of(r.begin(), r.end(), [](const Rational& v) { return sgn(v) >= 0; });
      if (nonneg && is_extreme_ray(a, r)) out.rays.push_back(std::move(r));
    }
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

bool is_extreme_ray(const Matrix& a, const Vector& x) {
  const std::size_t n = a.cols();
  if (x.size() != n) return false;
  bool nonzero = false;
  Matrix m = a;
  if (m.rows() == 0) m = Matrix(0, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(x[j]) < 0) return false;
    if (sgn(x[j]) == 0) {
      Vector e(n, Rational(0));
      e[j] = 1;
      m.append_row(e);
    } else {
      nonzero = true;
    }
  }
  if (!nonzero) return false;
  for (const auto& v : a.multiply(x)) {
    if (sgn(v) != 0) return false;
  }
  return kernel_basis(m).size() == 1;
}

}  // namespace tilenorm
