#pragma once

#include <optional>
#include <vector>

#include "dgideal/field.hpp"

namespace dgideal {

/* Dense matrix over a Field. Storage is field-agnostic (entries are canonical
   Scalars); every operation that computes takes the field explicitly. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Scalar& at(int r, int c) const { return a_[r * cols_ + c]; }
  Scalar& at(int r, int c) { return a_[r * cols_ + c]; }

  std::vector<Scalar> col(int c) const;
  void set_col(int c, const std::vector<Scalar>& v);

  bool is_zero() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_neg(const Field& f, const Matrix& a);
Matrix mat_scale(const Field& f, const Scalar& c, const Matrix& a);
Matrix mat_hcat(const Matrix& a, const Matrix& b);
Matrix mat_transpose(const Matrix& a);
std::vector<Scalar> mat_apply(const Field& f, const Matrix& a, const std::vector<Scalar>& v);

/* Exact Gaussian elimination. Pivoting is deterministic: first nonzero entry
   scanning rows top to bottom, columns left to right. */
struct Rref {
  Matrix m;
  std::vector<int> pivot_cols;
};
Rref rref(const Field& f, Matrix a);
int rank(const Field& f, const Matrix& a);

/* Columns span ker(a); one column per free column of the rref, in ascending
   free-column order, with the free coordinate set to 1. */
Matrix kernel_basis(const Field& f, const Matrix& a);

/* Solve a x = b; nullopt when inconsistent. Free coordinates are set to 0,
   so the answer is deterministic. */
std::optional<std::vector<Scalar>> solve(const Field& f, const Matrix& a, const std::vector<Scalar>& b);
/* Solve a X = B columnwise. */
std::optional<Matrix> solve_many(const Field& f, const Matrix& a, const Matrix& b);

}  // namespace dgideal
