#pragma once

#include "hyperkunneth/errors.hpp"
#include "hyperkunneth/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hyperkunneth {

/// Sorted (index, value) pairs with no stored zeros.
template <class Scalar>
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

template <class Scalar>
SparseVector<Scalar> sparse_from_dense(const std::vector<Scalar>& dense) {
  SparseVector<Scalar> out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(i, dense[i]);
  return out;
}

template <class Scalar>
std::vector<Scalar> sparse_to_dense(const SparseVector<Scalar>& v, std::size_t size) {
  std::vector<Scalar> out(size, Scalar(0));
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

/// s*a + t*b for scalars with ordinary ring operators (Integer, Rational).
template <class Scalar>
SparseVector<Scalar> sparse_combine(const Scalar& s, const SparseVector<Scalar>& a,
                                    const Scalar& t, const SparseVector<Scalar>& b) {
  SparseVector<Scalar> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      if (s != 0) out.emplace_back(ia->first, s * ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      if (t != 0) out.emplace_back(ib->first, t * ib->second);
      ++ib;
    } else {
      Scalar x = s * ia->second + t * ib->second;
      if (x != 0) out.emplace_back(ia->first, std::move(x));
      ++ia;
      ++ib;
    }
  }
  return out;
}

/// a + c*b
template <class Scalar>
SparseVector<Scalar> sparse_axpy(const SparseVector<Scalar>& a, const Scalar& c,
                                 const SparseVector<Scalar>& b) {
  if (c == 0) return a;
  return sparse_combine(Scalar(1), a, c, b);
}

template <class Scalar>
SparseVector<Scalar> sparse_scale(const SparseVector<Scalar>& a, const Scalar& c) {
  SparseVector<Scalar> out;
  if (c == 0) return out;
  out.reserve(a.size());
  for (const auto& [i, x] : a) out.emplace_back(i, c * x);
  return out;
}

/// Column-major sparse matrix. Dimensions are fixed at construction and
/// stored entries are always nonzero.
template <class Scalar>
class SparseMatrix {
 public:
  using Column = SparseVector<Scalar>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix from_columns(std::size_t rows, std::vector<Column> columns) {
    SparseMatrix m(rows, 0);
    for (auto& c : columns) m.append_column(std::move(c));
    return m;
  }

  /// Row-major dense literal, convenient in tests: {{2, 4}, {6, 8}}.
  static SparseMatrix from_rows(const std::vector<std::vector<Scalar>>& dense) {
    std::size_t r = dense.size();
    std::size_t c = r == 0 ? 0 : dense.front().size();
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (dense[i].size() != c) throw UsageError("ragged matrix literal");
      for (std::size_t j = 0; j < c; ++j)
        if (dense[i][j] != 0) m.columns_[j].emplace_back(i, dense[i][j]);
    }
    return m;
  }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Scalar(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  bool empty() const { return columns_.empty(); }

  const Column& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<Column>& columns() const { return columns_; }

  Scalar at(std::size_t i, std::size_t j) const {
    const auto& c = columns_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != c.end() && it->first == i) return it->second;
    return Scalar(0);
  }

  void set(std::size_t i, std::size_t j, const Scalar& value) {
    if (i >= rows_) throw UsageError("row index out of range");
    auto& c = columns_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const auto& e, std::size_t k) { return e.first < k; });
    bool present = it != c.end() && it->first == i;
    if (value == 0) {
      if (present) c.erase(it);
    } else if (present) {
      it->second = value;
    } else {
      c.insert(it, {i, value});
    }
  }

  void append_column(Column c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].first >= rows_) throw UsageError("column entry outside matrix rows");
      if (k > 0 && c[k - 1].first >= c[k].first) throw UsageError("column entries not sorted");
      if (c[k].second == 0) throw UsageError("explicit zero in sparse column");
    }
    columns_.push_back(std::move(c));
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  SparseMatrix transposed() const {
    SparseMatrix t(cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j)
      for (const auto& [i, x] : columns_[j]) t.columns_[i].emplace_back(j, x);
    return t;
  }

  std::vector<std::vector<Scalar>> to_dense() const {
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols(), Scalar(0)));
    for (std::size_t j = 0; j < cols(); ++j)
      for (const auto& [i, x] : columns_[j]) d[i][j] = x;
    return d;
  }

  /// this * v
  Column apply(const Column& v) const {
    Column acc;
    for (const auto& [j, x] : v) {
      if (j >= cols()) throw UsageError("vector longer than matrix width");
      acc = sparse_axpy(acc, x, columns_[j]);
    }
    return acc;
  }

  SparseMatrix operator*(const SparseMatrix& rhs) const {
    if (cols() != rhs.rows()) throw UsageError("matrix product dimension mismatch");
    SparseMatrix out(rows_, 0);
    for (const auto& c : rhs.columns_) out.columns_.push_back(apply(c));
    return out;
  }

  /// Columns of `this` followed by the columns of `rhs`.
  SparseMatrix hconcat(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw UsageError("hconcat row mismatch");
    SparseMatrix out = *this;
    out.columns_.insert(out.columns_.end(), rhs.columns_.begin(), rhs.columns_.end());
    return out;
  }

  bool operator==(const SparseMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

using SparseIntMatrix = SparseMatrix<Integer>;
using IntVector = SparseVector<Integer>;

}  // namespace hyperkunneth
