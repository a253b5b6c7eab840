#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "frontsheaf/field.hpp"

namespace frontsheaf {

// Dense matrix over GF(p). Instance sizes here are tens of rows, so dense
// storage and cubic elimination are entirely adequate.
class FMatrix {
public:
  FMatrix(PrimeField field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  }

  static FMatrix identity(PrimeField field, int n) {
    FMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  const PrimeField& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int& at(int r, int c) {
    check(r, c);
    return a_[static_cast<size_t>(r) * cols_ + c];
  }
  int at(int r, int c) const {
    check(r, c);
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  void set(int r, int c, long long value) { at(r, c) = field_.reduce(value); }

  bool is_zero() const {
    for (int x : a_)
      if (x != 0) return false;
    return true;
  }

  FMatrix operator+(const FMatrix& o) const {
    require_same_shape(o);
    FMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
    return r;
  }

  FMatrix operator-(const FMatrix& o) const {
    require_same_shape(o);
    FMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
    return r;
  }

  FMatrix operator*(const FMatrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("field mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    FMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        int aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, o.at(k, j)));
      }
    return r;
  }

  FMatrix scaled(int s) const {
    FMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(field_.reduce(s), a_[i]);
    return r;
  }

  FMatrix negated() const { return scaled(field_.modulus() - 1); }

  FMatrix transposed() const {
    FMatrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const FMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const FMatrix& o) const { return !(*this == o); }

  // Row rank by exact Gauss-Jordan elimination over GF(p).
  int rank() const {
    FMatrix m(*this);
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pivot = -1;
      for (int i = r; i < rows_; ++i)
        if (m.at(i, c) != 0) { pivot = i; break; }
      if (pivot < 0) continue;
      if (pivot != r)
        for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
      int inv = field_.inv(m.at(r, c));
      for (int j = 0; j < cols_; ++j) m.at(r, j) = field_.mul(m.at(r, j), inv);
      for (int i = 0; i < rows_; ++i) {
        if (i == r) continue;
        int x = m.at(i, c);
        if (x == 0) continue;
        for (int j = 0; j < cols_; ++j)
          m.at(i, j) = field_.sub(m.at(i, j), field_.mul(x, m.at(r, j)));
      }
      ++r;
    }
    return r;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pivot = -1;
      for (int i = r; i < rows_; ++i)
        if (at(i, c) != 0) { pivot = i; break; }
      if (pivot < 0) continue;
      if (pivot != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(r, j));
      int inv = field_.inv(at(r, c));
      for (int j = 0; j < cols_; ++j) at(r, j) = field_.mul(at(r, j), inv);
      for (int i = 0; i < rows_; ++i) {
        if (i == r) continue;
        int x = at(i, c);
        if (x == 0) continue;
        for (int j = 0; j < cols_; ++j)
          at(i, j) = field_.sub(at(i, j), field_.mul(x, at(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

private:
  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index");
  }
  void require_same_shape(const FMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape/field mismatch");
  }

  PrimeField field_;
  int rows_, cols_;
  std::vector<int> a_;
};

// One solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<std::vector<int>> solve_linear(const FMatrix& A,
                                                    const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != A.rows())
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  const PrimeField& F = A.field();
  FMatrix aug(F, A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = F.reduce(b[i]);
  }
  std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  std::vector<int> x(A.cols(), 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), A.cols());
  return x;
}

// Basis of the kernel of A.
inline std::vector<std::vector<int>> nullspace(const FMatrix& A) {
  const PrimeField& F = A.field();
  FMatrix m = A;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(A.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (int c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(A.cols(), 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = F.neg(m.at(static_cast<int>(r), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace frontsheaf
