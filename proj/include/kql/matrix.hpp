#pragma once

// Scalar-generic dense linear algebra used by every computational module.
// Two scalar kinds share this interface: exact rationals (Rat) and
// double-precision complex numbers (Cx) with a rank tolerance.
//
// Rank decisions use full pivoting: at each elimination step the pivot is
// the largest remaining entry by magnitude, and for the approximate scalar
// a pivot counts only while |pivot| > tol * |first pivot|.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "kql/rational.hpp"

namespace kql {

inline constexpr double kDefaultTolerance = 1e-9;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static constexpr bool exact = true;
  static double magnitude(const Rat& x) { return std::abs(x.get_d()); }
  static bool isZero(const Rat& x, double /*tol*/, double /*scale*/) {
    return sgn(x) == 0;
  }
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
};

template <>
struct ScalarTraits<Cx> {
  static constexpr bool exact = false;
  static double magnitude(const Cx& x) { return std::abs(x); }
  static bool isZero(const Cx& x, double tol, double scale) {
    return std::abs(x) <= tol * std::max(scale, 1.0);
  }
  static Cx zero() { return Cx(0.0, 0.0); }
  static Cx one() { return Cx(1.0, 0.0); }
};

template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols,
                                        ScalarTraits<S>::zero()) {
    if (rows < 0 || cols < 0) throw PreconditionError("negative matrix shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ScalarTraits<S>::one();
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const S& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  bool sameShape(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix product shape");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& a = at(i, k);
        if (ScalarTraits<S>::exact && sgnIsZero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    requireSameShape(o);
    Matrix out(rows_, cols_);
    for (size_t t = 0; t < data_.size(); ++t) out.data_[t] = data_[t] + o.data_[t];
    return out;
  }
  Matrix operator-(const Matrix& o) const {
    requireSameShape(o);
    Matrix out(rows_, cols_);
    for (size_t t = 0; t < data_.size(); ++t) out.data_[t] = data_[t] - o.data_[t];
    return out;
  }
  Matrix operator-() const {
    Matrix out(rows_, cols_);
    for (size_t t = 0; t < data_.size(); ++t) out.data_[t] = -data_[t];
    return out;
  }
  Matrix scaled(const S& c) const {
    Matrix out(rows_, cols_);
    for (size_t t = 0; t < data_.size(); ++t) out.data_[t] = data_[t] * c;
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  Matrix col(int j) const {
    Matrix out(rows_, 1);
    for (int i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
    return out;
  }

  Matrix cols(const std::vector<int>& idx) const {
    Matrix out(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < out.cols(); ++j)
      for (int i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    return out;
  }

  double maxMagnitude() const {
    double m = 0.0;
    for (const S& x : data_) m = std::max(m, ScalarTraits<S>::magnitude(x));
    return m;
  }

  bool isZero(double tol = kDefaultTolerance) const {
    for (const S& x : data_)
      if (!ScalarTraits<S>::isZero(x, tol, 1.0)) return false;
    return true;
  }

 private:
  static bool sgnIsZero(const Rat& x) { return sgn(x) == 0; }
  static bool sgnIsZero(const Cx& x) { return x == Cx(0.0, 0.0); }
  void requireSameShape(const Matrix& o) const {
    if (!sameShape(o)) throw PreconditionError("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<S> data_;
};

template <class S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() == 0 && a.rows() == 0) return b;
  if (b.cols() == 0 && b.rows() == 0) return a;
  if (a.rows() != b.rows()) throw PreconditionError("hstack row mismatch");
  Matrix<S> out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() == 0 && a.rows() == 0) return b;
  if (b.cols() == 0 && b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw PreconditionError("vstack col mismatch");
  Matrix<S> out(a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
  }
  return out;
}

// Row-reduced echelon form with full pivot search; rows end up permuted so
// that pivot t sits in row t. Column order is untouched, pivot columns are
// reported instead.
template <class S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<int> pivotCols;
  int rank = 0;
};

// pivotLimit restricts the pivot search to the first pivotLimit columns
// (used for augmented systems); -1 searches everywhere.
template <class S>
Echelon<S> eliminate(Matrix<S> m, double tol = kDefaultTolerance,
                     int pivotLimit = -1) {
  Echelon<S> e;
  const int nr = m.rows(), nc = m.cols();
  const int pc = pivotLimit < 0 ? nc : pivotLimit;
  std::vector<bool> colUsed(nc, false);
  double firstPivot = 0.0;
  int row = 0;
  while (row < nr) {
    int bi = -1, bj = -1;
    double best = 0.0;
    for (int i = row; i < nr; ++i)
      for (int j = 0; j < pc; ++j) {
        if (colUsed[j]) continue;
        double mag = ScalarTraits<S>::magnitude(m.at(i, j));
        if (mag > best) {
          best = mag;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0 || best == 0.0) break;
    if (!ScalarTraits<S>::exact) {
      if (row == 0)
        firstPivot = best;
      else if (best <= tol * firstPivot)
        break;
    }
    if (bi != row)
      for (int j = 0; j < nc; ++j) std::swap(m.at(bi, j), m.at(row, j));
    const S piv = m.at(row, bj);
    for (int j = 0; j < nc; ++j) m.at(row, j) = m.at(row, j) / piv;
    for (int i = 0; i < nr; ++i) {
      if (i == row) continue;
      const S f = m.at(i, bj);
      if (ScalarTraits<S>::magnitude(f) == 0.0) continue;
      for (int j = 0; j < nc; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    colUsed[bj] = true;
    e.pivotCols.push_back(bj);
    ++row;
  }
  e.rank = row;
  e.reduced = std::move(m);
  return e;
}

template <class S>
int rank(const Matrix<S>& m, double tol = kDefaultTolerance) {
  return eliminate(m, tol).rank;
}

// Basis of the right kernel, returned as columns; count = cols - rank.
template <class S>
Matrix<S> kernelBasis(const Matrix<S>& m, double tol = kDefaultTolerance) {
  Echelon<S> e = eliminate(m, tol);
  const int nc = m.cols();
  std::vector<bool> isPivot(nc, false);
  for (int c : e.pivotCols) isPivot[c] = true;
  std::vector<int> freeCols;
  for (int j = 0; j < nc; ++j)
    if (!isPivot[j]) freeCols.push_back(j);
  Matrix<S> basis(nc, static_cast<int>(freeCols.size()));
  for (int t = 0; t < static_cast<int>(freeCols.size()); ++t) {
    const int f = freeCols[t];
    basis.at(f, t) = ScalarTraits<S>::one();
    for (int p = 0; p < e.rank; ++p)
      basis.at(e.pivotCols[p], t) = -e.reduced.at(p, f);
  }
  return basis;
}

// Particular solution of m*x = rhs; inconsistency is a value, not a fault.
template <class S>
std::optional<Matrix<S>> solve(const Matrix<S>& m, const Matrix<S>& rhs,
                               double tol = kDefaultTolerance) {
  if (m.rows() != rhs.rows()) throw PreconditionError("solve row mismatch");
  Matrix<S> aug = hstack(m, rhs);
  if (aug.rows() == 0) return Matrix<S>(m.cols(), rhs.cols());
  const int nc = m.cols();
  Echelon<S> e = eliminate(std::move(aug), tol, nc);
  const double scale = std::max(m.maxMagnitude(), rhs.maxMagnitude());
  for (int i = e.rank; i < e.reduced.rows(); ++i)
    for (int j = nc; j < e.reduced.cols(); ++j)
      if (!ScalarTraits<S>::isZero(e.reduced.at(i, j), tol, scale))
        return std::nullopt;
  Matrix<S> x(nc, rhs.cols());
  for (int p = 0; p < e.rank; ++p)
    for (int j = 0; j < rhs.cols(); ++j)
      x.at(e.pivotCols[p], j) = e.reduced.at(p, nc + j);
  return x;
}

// Canonical basis of the column span: RREF applied to the transpose, nonzero
// rows returned as columns. Equal subspaces get byte-equal bases over Rat.
template <class S>
Matrix<S> canonicalSpan(const Matrix<S>& columns,
                        double tol = kDefaultTolerance) {
  Echelon<S> e = eliminate(columns.transpose(), tol);
  Matrix<S> out(columns.rows(), e.rank);
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < columns.rows(); ++j)
      out.at(j, i) = e.reduced.at(i, j);
  return out;
}

template <class S>
Matrix<S> subspaceSum(const Matrix<S>& a, const Matrix<S>& b,
                      double tol = kDefaultTolerance) {
  if (a.cols() == 0) return canonicalSpan(b, tol);
  if (b.cols() == 0) return canonicalSpan(a, tol);
  return canonicalSpan(hstack(a, b), tol);
}

template <class S>
Matrix<S> subspaceIntersect(const Matrix<S>& a, const Matrix<S>& b,
                            double tol = kDefaultTolerance) {
  if (a.rows() != b.rows()) throw PreconditionError("ambient dim mismatch");
  if (a.cols() == 0 || b.cols() == 0) return Matrix<S>(a.rows(), 0);
  Matrix<S> k = kernelBasis(hstack(a, -b), tol);
  Matrix<S> coeff(a.cols(), k.cols());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < k.cols(); ++j) coeff.at(i, j) = k.at(i, j);
  return canonicalSpan(a * coeff, tol);
}

template <class S>
bool inSpan(const Matrix<S>& v, const Matrix<S>& basis,
            double tol = kDefaultTolerance) {
  if (basis.cols() == 0) return v.isZero(tol);
  return solve(basis, v, tol).has_value();
}

template <class S>
bool sameSubspace(const Matrix<S>& a, const Matrix<S>& b,
                  double tol = kDefaultTolerance) {
  int ra = rank(a, tol), rb = rank(b, tol);
  if (ra != rb) return false;
  if (a.cols() == 0 || b.cols() == 0) return ra == rb;
  return rank(hstack(a, b), tol) == ra;
}

inline Matrix<Cx> toComplex(const Matrix<Rat>& m) {
  Matrix<Cx> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = toComplex(m.at(i, j));
  return out;
}

inline const Matrix<Cx>& toComplex(const Matrix<Cx>& m) { return m; }

}  // namespace kql
