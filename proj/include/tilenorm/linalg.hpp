#pragma once

#include "tilenorm/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tilenorm {

using Vector = std::vector<Rational>;

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  void append_row(const Vector& row);
  Vector multiply(const Vector& x) const;
  // y^T A
  Vector left_multiply(const Vector& y) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

EchelonForm reduced_row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> kernel_basis(const Matrix& m);

// Outcome of  A x = b, x >= 0.
struct Feasibility {
  bool feasible = false;
  Vector point;   // x when feasible
  Vector farkas;  // y with y^T A >= 0 and y^T b < 0 when infeasible
};

// Two-phase simplex in exact arithmetic with Bland's pivoting rule.
Feasibility solve_feasibility(const Matrix& a, const Vector& b);

bool check_farkas(const Matrix& a, const Vector& b, const Vector& y);

struct RayEnumeration {
  std::vector<Vector> rays;  // primitive integer generators, sorted
  bool complete = true;
};

// Extreme rays of the pointed cone {x : A x = 0, x >= 0} by the double
// description method. Stops early (complete = false) once the working ray
// set exceeds max_rays.
RayEnumeration nonneg_kernel_rays(const Matrix& a, std::size_t max_rays);

// x is an extreme ray of {A x = 0, x >= 0}: the kernel restricted to the
// support of x is one-dimensional.
bool is_extreme_ray(const Matrix& a, const Vector& x);

}  // namespace tilenorm
