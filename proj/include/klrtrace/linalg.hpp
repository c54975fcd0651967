#pragma once

#include <map>
#include <vector>

#include "klrtrace/scalar.hpp"

namespace klrtrace {

// Sparse row vector over Q, keyed by column index. Zero entries are never
// stored.
using SparseVec = std::map<int, Scalar>;

inline void axpy(SparseVec& dst, const Scalar& c, const SparseVec& src) {
  if (c == 0) return;
  for (const auto& [j, v] : src) {
    auto it = dst.find(j);
    if (it == dst.end()) {
      dst.emplace(j, c * v);
    } else {
      it->second += c * v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

inline void scale(SparseVec& v, const Scalar& c) {
  if (c == 0) {
    v.clear();
    return;
  }
  for (auto& [j, x] : v) x *= c;
}

// Incremental row echelon span over Q. Pivot of each stored row is its
// smallest column index, normalized to 1; rows are not back-substituted,
// which keeps them sparse. reduce() still yields the canonical residual
// supported away from the pivot columns.
class RowSpace {
 public:
  RowSpace() = default;

  // Reduces v against the current span; returns the residual.
  SparseVec reduce(SparseVec v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Scalar c = -it->second;
      axpy(v, c, row->second);  // kills column it->first
      it = v.lower_bound(row->first);
    }
    return v;
  }

  // Inserts v; returns true if the rank grew.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int piv = v.begin()->first;
    Scalar inv = 1 / v.begin()->second;
    scale(v, inv);
    rows_.emplace(piv, std::move(v));
    return true;
  }

  bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }
  bool has_pivot(int col) const { return rows_.count(col) != 0; }

 private:
  std::map<int, SparseVec> rows_;  // pivot column -> row
};

// Nullspace basis of the linear map given by rows acting on coordinates
// 0..cols-1 (each row is a linear functional). Exact over Q.
inline std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows, int cols) {
  RowSpace space;
  for (const auto& r : rows) space.insert(r);
  // Back-substitute into reduced echelon form so each pivot row mentions no
  // other pivot column.
  std::map<int, SparseVec> rref(space.rows());
  for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
    for (auto& [p, row] : rref) {
      if (p >= it->first) break;
      auto hit = row.find(it->first);
      if (hit != row.end()) {
        Scalar c = -hit->second;
        axpy(row, c, it->second);
      }
    }
  }
  std::vector<SparseVec> basis;
  for (int j = 0; j < cols; ++j) {
    if (rref.count(j)) continue;
    // free column j: x_j = 1, pivot variables determined.
    SparseVec v;
    v[j] = 1;
    for (const auto& [p, row] : rref) {
      auto it = row.find(j);
      if (it != row.end()) v[p] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Dense matrix over Q, row-major. Used for operator blocks in finite
// dimensional representations.
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw Error("matrix shape mismatch in product");
    Matrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const Scalar& x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.c_; ++j) m.at(i, j) += x * o.at(k, j);
      }
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error("matrix shape mismatch in sum");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error("matrix shape mismatch in difference");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }

  Matrix operator*(const Scalar& c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= c;
    return m;
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != c_) throw Error("matrix apply: size mismatch");
    std::vector<Scalar> w(r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (at(i, j) != 0) w[i] += at(i, j) * v[j];
    return w;
  }

  int rank() const {
    RowSpace sp;
    for (int i = 0; i < r_; ++i) {
      SparseVec v;
      for (int j = 0; j < c_; ++j)
        if (at(i, j) != 0) v[j] = at(i, j);
      sp.insert(std::move(v));
    }
    return sp.rank();
  }

 private:
  int r_, c_;
  std::vector<Scalar> a_;
};

}  // namespace klrtrace
