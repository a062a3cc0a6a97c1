#include "dgideal/matrix.hpp"

#include <stdexcept>

namespace dgideal {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  Field q = Field::rationals();  // 1 is canonical in every field
  for (int i = 0; i < n; ++i) m.at(i, i) = q.one();
  return m;
}

std::vector<Scalar> Matrix::col(int c) const {
  std::vector<Scalar> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_col(int c, const std::vector<Scalar>& v) {
  if ((int)v.size() != rows_) throw std::invalid_argument("set_col: size mismatch");
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool Matrix::is_zero() const {
  for (const Scalar& s : a_)
    if (s.raw() != 0) return false;
  return true;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = f.add(a.at(i, j), b.at(i, j));
  return c;
}

Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b) {
  return mat_add(f, a, mat_neg(f, b));
}

Matrix mat_neg(const Field& f, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = f.neg(a.at(i, j));
  return c;
}

Matrix mat_scale(const Field& f, const Scalar& s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = f.mul(s, a.at(i, j));
  return c;
}

Matrix mat_hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("mat_hcat: row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Matrix mat_transpose(const Matrix& a) {
  Matrix c(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(j, i) = a.at(i, j);
  return c;
}

std::vector<Scalar> mat_apply(const Field& f, const Matrix& a, const std::vector<Scalar>& v) {
  if ((int)v.size() != a.cols()) throw std::invalid_argument("mat_apply: size mismatch");
  std::vector<Scalar> w(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a.at(i, j))) w[i] = f.add(w[i], f.mul(a.at(i, j), v[j]));
  return w;
}

Rref rref(const Field& f, Matrix a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = -1;
    for (int r = row; r < a.rows(); ++r)
      if (!f.is_zero(a.at(r, col))) { p = r; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
    Scalar piv = f.inv(a.at(row, col));
    for (int j = 0; j < a.cols(); ++j) a.at(row, j) = f.mul(piv, a.at(row, j));
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || f.is_zero(a.at(r, col))) continue;
      Scalar c = a.at(r, col);
      for (int j = 0; j < a.cols(); ++j)
        a.at(r, j) = f.sub(a.at(r, j), f.mul(c, a.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const Field& f, const Matrix& a) { return (int)rref(f, a).pivot_cols.size(); }

Matrix kernel_basis(const Field& f, const Matrix& a) {
  Rref r = rref(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  int nfree = a.cols() - (int)r.pivot_cols.size();
  Matrix k(a.cols(), nfree);
  int out = 0;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    k.at(c, out) = f.one();
    for (int pr = 0; pr < (int)r.pivot_cols.size(); ++pr)
      k.at(r.pivot_cols[pr], out) = f.neg(r.m.at(pr, c));
    ++out;
  }
  return k;
}

std::optional<std::vector<Scalar>> solve(const Field& f, const Matrix& a,
                                         const std::vector<Scalar>& b) {
  if ((int)b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix ab(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) ab.at(i, j) = a.at(i, j);
    ab.at(i, a.cols()) = b[i];
  }
  Rref r = rref(f, ab);
  for (int c : r.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  /* free coordinates zero, pivot coordinates read off the reduced rhs */
  std::vector<Scalar> x(a.cols());
  for (int pr = 0; pr < (int)r.pivot_cols.size(); ++pr)
    x[r.pivot_cols[pr]] = r.m.at(pr, a.cols());
  return x;
}

std::optional<Matrix> solve_many(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_many: row mismatch");
  Matrix x(a.cols(), b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    auto xi = solve(f, a, b.col(c));
    if (!xi) return std::nullopt;
    x.set_col(c, *xi);
  }
  return x;
}

}  // namespace dgideal
