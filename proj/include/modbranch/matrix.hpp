#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modbranch/field.hpp"

namespace modbranch {

/// Dense matrix over an exact field F. Sized at construction; all
/// arithmetic goes through the field object.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, int rows, int cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        a_(checked_size(rows, cols), field_.zero()) {}

  static Matrix identity(F field, int d) {
    Matrix m(std::move(field), d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Elem& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int l = 0; l < a.cols_; ++l) {
        if (a.field_.is_zero(a.at(i, l))) continue;
        for (int j = 0; j < b.cols_; ++j)
          c.at(i, j) = a.field_.add(c.at(i, j),
                                    a.field_.mul(a.at(i, l), b.at(l, j)));
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum shape mismatch");
    Matrix c(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      c.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix difference shape mismatch");
    Matrix c(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      c.a_[i] = a.field_.sub(a.a_[i], b.a_[i]);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!a.field_.eq(a.a_[i], b.a_[i])) return false;
    return true;
  }

  Matrix pow(long long e) const {
    if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
    if (e < 0) throw std::invalid_argument("exponent must be >= 0");
    Matrix r = identity(field_, rows_);
    Matrix b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
  }

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("matrix dimensions must be >= 0");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }

  F field_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

namespace detail {

/// In-place reduced row echelon form. Returns the pivot columns.
template <class F>
std::vector<int> reduced_row_echelon(Matrix<F>& m) {
  const F& f = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    const auto scale = f.inv(m.at(row, col));
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), scale);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m.at(i, col))) continue;
      const auto factor = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(detail::reduced_row_echelon(m).size());
}

template <class F>
int nullity(const Matrix<F>& m) {
  return m.cols() - rank(m);
}

/// Basis of the right null space {x : m x = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(Matrix<F> m) {
  const F f = m.field();
  const auto pivots = detail::reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<typename F::Elem>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(m.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b for each column of b; nullopt when inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  const F f = a.field();
  Matrix<F> aug(f, a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  const auto pivots = detail::reduced_row_echelon(aug);
  for (int c : pivots)
    if (c >= a.cols()) return std::nullopt;

  Matrix<F> x(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      x.at(pivots[r], j) = aug.at(static_cast<int>(r), a.cols() + j);
  return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  auto x = solve(m, Matrix<F>::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) throw std::domain_error("matrix is singular");
  return *x;
}

/// Dimension of {X : X A_g = B_g X for all g}, where the pairs supply
/// (A_g, B_g). A_g is d_M x d_M, B_g is d_N x d_N, X is d_N x d_M. The
/// constraints are stacked into one homogeneous system over the entries
/// of X and the answer is its nullity.
template <class F>
int intertwiner_dim(const std::vector<std::pair<Matrix<F>, Matrix<F>>>& pairs) {
  if (pairs.empty())
    throw std::invalid_argument("intertwiner_dim needs at least one pair");
  const F f = pairs[0].first.field();
  const int dm = pairs[0].first.rows();
  const int dn = pairs[0].second.rows();
  for (const auto& [a, b] : pairs) {
    if (a.rows() != dm || a.cols() != dm || b.rows() != dn || b.cols() != dn)
      throw std::invalid_argument("intertwiner pairs have mismatched shapes");
  }

  // unknown X laid out row-major: entry (r, c) at index r * dm + c
  const int unknowns = dn * dm;
  Matrix<F> sys(f, static_cast<int>(pairs.size()) * unknowns, unknowns);
  int eq = 0;
  for (const auto& [a, b] : pairs) {
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) {
        // coefficient of X[r][l] is A[l][c]; of X[s][c] is -B[r][s]
        for (int l = 0; l < dm; ++l)
          sys.at(eq, r * dm + l) = f.add(sys.at(eq, r * dm + l), a.at(l, c));
        for (int s = 0; s < dn; ++s)
          sys.at(eq, s * dm + c) = f.sub(sys.at(eq, s * dm + c), b.at(r, s));
        ++eq;
      }
  }
  return nullity(sys);
}

}  // namespace modbranch
