#pragma once

// Exact integer vectors and dense matrices.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "obk/error.hpp"

namespace obk {

using Integer = boost::multiprecision::cpp_int;
using Vector = std::vector<Integer>;

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

inline bool is_zero(Vector const& v) {
  return std::all_of(v.begin(), v.end(), [](Integer const& x) { return x == 0; });
}

// Vectors of different length compare and add as if zero-padded.
inline Vector add(Vector const& a, Vector const& b, Integer const& scale = 1) {
  Vector out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += scale * b[i];
  return out;
}

inline Vector scaled(Vector v, Integer const& s) {
  for (auto& x : v) x *= s;
  return v;
}

inline Vector padded(Vector v, std::size_t n) {
  if (v.size() < n) v.resize(n, 0);
  return v;
}

inline Integer dot(Vector const& a, Vector const& b) {
  Integer s = 0;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto const& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      for (auto x : row) data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(std::vector<Vector> const& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size() && c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

  static Matrix from_columns(std::vector<Vector> const& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < cols[c].size() && r < rows; ++r) m(r, c) = cols[c][r];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Integer const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  // Grows to the given shape, keeping existing entries in place.
  void resize(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < std::min(rows, rows_); ++r)
      for (std::size_t c = 0; c < std::min(cols, cols_); ++c) m(r, c) = (*this)(r, c);
    *this = std::move(m);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, Integer const& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, Integer const& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Integer const& x) { return x == 0; });
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Integer const& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend Vector operator*(Matrix const& a, Vector const& v) {
    Vector out(a.rows_, 0);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_ && k < v.size(); ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator-(Matrix const& a, Matrix const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in difference");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Fraction-free (Bareiss) determinant of a square matrix.
inline Integer determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Row-style integer echelon basis of the lattice spanned by `rows`.
// Used for membership tests in the relation lattice of a presentation.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::vector<Vector> const& generators, std::size_t dim) : dim_(dim) {
    for (auto const& g : generators) insert(padded(g, dim_));
  }

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  bool contains(Vector v) const {
    v = padded(std::move(v), dim_);
    for (auto const& [pivot, b] : basis_) {
      if (v[pivot] == 0) continue;
      if (v[pivot] % b[pivot] != 0) return false;
      Integer q = v[pivot] / b[pivot];
      for (std::size_t i = 0; i < dim_; ++i) v[i] -= q * b[i];
    }
    return is_zero(v);
  }

 private:
  void insert(Vector v) {
    for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
      auto& [pivot, b] = basis_[idx];
      if (v[pivot] == 0) continue;
      // Extended Euclid on the pivot column keeps the lattice unchanged.
      while (v[pivot] != 0) {
        Integer q = b[pivot] / v[pivot];
        for (std::size_t i = 0; i < dim_; ++i) b[i] -= q * v[i];
        std::swap(b, v);
      }
      if (b[pivot] < 0) b = scaled(std::move(b), -1);
    }
    auto first = std::find_if(v.begin(), v.end(), [](Integer const& x) { return x != 0; });
    if (first == v.end()) return;
    std::size_t pivot = static_cast<std::size_t>(first - v.begin());
    if (v[pivot] < 0) v = scaled(std::move(v), -1);
    // Keep pivots sorted so that reduction in `contains` is triangular.
    auto pos = std::find_if(basis_.begin(), basis_.end(), [&](auto const& e) { return e.first > pivot; });
    basis_.insert(pos, {pivot, std::move(v)});
    // A new pivot may sit left of existing ones; re-reduce those rows.
    reduce_tail(pivot);
  }

  void reduce_tail(std::size_t new_pivot) {
    std::vector<Vector> later;
    for (auto it = basis_.begin(); it != basis_.end();) {
      if (it->first > new_pivot && it->second[new_pivot] != 0) {
        later.push_back(std::move(it->second));
        it = basis_.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& v : later) insert(std::move(v));
  }

  std::size_t dim_ = 0;
  std::vector<std::pair<std::size_t, Vector>> basis_;
};

inline std::string to_string(Integer const& x) { return x.str(); }

}  // namespace obk
