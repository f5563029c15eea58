#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quantinv/exactalg.hpp"

namespace quantinv {

inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
template <class T>
using SparseVec = std::vector<std::pair<std::size_t, T>>;

/// Accumulates scaled sparse contributions and emits a SparseVec.
template <class T>
class SparseAccumulator {
 public:
  void add(std::size_t i, const T& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = acc_.try_emplace(i, v);
    if (!inserted) it->second += v;
  }
  void add_scaled(const SparseVec<T>& v, const T& s) {
    for (const auto& [i, x] : v) add(i, x * s);
  }
  SparseVec<T> take() {
    SparseVec<T> out;
    out.reserve(acc_.size());
    for (auto& [i, x] : acc_)
      if (!is_zero(x)) out.emplace_back(i, std::move(x));
    acc_.clear();
    return out;
  }

 private:
  std::map<std::size_t, T> acc_;
};

/// Column-compressed sparse matrix over a ring T.
template <class T>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    data_.resize(cols);
  }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, T(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const SparseVec<T>& col(std::size_t j) const { return data_.at(j); }
  void set_col(std::size_t j, SparseVec<T> v) { data_.at(j) = std::move(v); }

  T get(std::size_t i, std::size_t j) const {
    for (const auto& [r, v] : data_.at(j))
      if (r == i) return v;
    return T(0);
  }

  void add(std::size_t i, std::size_t j, const T& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("SparseMatrix::add");
    if (is_zero(v)) return;
    auto& c = data_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it != c.end() && it->first == i) {
      it->second += v;
      if (is_zero(it->second)) c.erase(it);
    } else {
      c.insert(it, {i, v});
    }
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
  }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& c) { return c.empty(); });
  }

  SparseVec<T> apply(const SparseVec<T>& x) const {
    SparseAccumulator<T> acc;
    for (const auto& [j, xv] : x) acc.add_scaled(data_.at(j), xv);
    return acc.take();
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) t.data_[i].emplace_back(j, v);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> SparseMatrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    SparseMatrix<U> out(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      SparseVec<U> c;
      for (const auto& [i, v] : data_[j]) {
        U u = f(v);
        if (!is_zero(u)) c.emplace_back(i, std::move(u));
      }
      out.set_col(j, std::move(c));
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMatrix: dimension mismatch in product");
    SparseMatrix out(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) out.data_[j] = a.apply(b.data_[j]);
    return out;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("SparseMatrix: dimension mismatch in sum");
    SparseMatrix out(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
      SparseAccumulator<T> acc;
      for (const auto& [i, v] : a.data_[j]) acc.add(i, v);
      for (const auto& [i, v] : b.data_[j]) acc.add(i, v);
      out.data_[j] = acc.take();
    }
    return out;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return a + b.scaled(T(-1));
  }

  SparseMatrix scaled(const T& s) const {
    SparseMatrix out(rows_, cols_);
    if (is_zero(s)) return out;
    for (std::size_t j = 0; j < cols_; ++j) {
      SparseVec<T> c;
      for (const auto& [i, v] : data_[j]) {
        T x = v * s;
        if (!is_zero(x)) c.emplace_back(i, std::move(x));
      }
      out.data_[j] = std::move(c);
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

  /// Kronecker product with a's index most significant.
  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ja = 0; ja < a.cols_; ++ja)
      for (std::size_t jb = 0; jb < b.cols_; ++jb) {
        SparseVec<T> c;
        for (const auto& [ia, va] : a.data_[ja])
          for (const auto& [ib, vb] : b.data_[jb]) {
            T x = va * vb;
            if (!is_zero(x)) c.emplace_back(ia * b.rows_ + ib, std::move(x));
          }
        out.data_[ja * b.cols_ + jb] = std::move(c);
      }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec<T>> data_;
};

/// Row-major dense matrix over a field T, used for exact elimination.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// In-place reduced row echelon form with first-nonzero pivoting.
  /// Returns the pivot columns in increasing order.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(r, k));
      const T inv = T(1) / (*this)(r, c);
      for (std::size_t k = c; k < cols_; ++k)
        if (!is_zero((*this)(r, k))) (*this)(r, k) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || is_zero((*this)(i, c))) continue;
        const T f = (*this)(i, c);
        for (std::size_t k = c; k < cols_; ++k)
          if (!is_zero((*this)(r, k))) (*this)(i, k) -= f * (*this)(r, k);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    DenseMatrix m = *this;
    return m.rref().size();
  }

  /// Inverse of a square matrix, or nullopt if singular.
  std::optional<DenseMatrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("DenseMatrix::inverse: not square");
    const std::size_t n = rows_;
    DenseMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = T(1);
    }
    auto piv = aug.rref();
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    DenseMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  /// Basis of the right null space, one vector per free column.
  std::vector<std::vector<T>> kernel() const {
    DenseMatrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<T> v(cols_, T(0));
      v[f] = T(1);
      for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

/// Converts an exact RatFunc matrix to LaurentPoly, or nullopt if any entry
/// has a nontrivial denominator.
inline std::optional<SparseMatrix<LaurentPoly>> to_laurent(const SparseMatrix<RatFunc>& m) {
  SparseMatrix<LaurentPoly> out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVec<LaurentPoly> c;
    for (const auto& [i, v] : m.col(j)) {
      auto l = v.to_laurent();
      if (!l) return std::nullopt;
      c.emplace_back(i, std::move(*l));
    }
    out.set_col(j, std::move(c));
  }
  return out;
}

inline SparseMatrix<RatFunc> to_ratfunc(const SparseMatrix<LaurentPoly>& m) {
  return m.map([](const LaurentPoly& x) { return RatFunc(x); });
}

}  // namespace quantinv
