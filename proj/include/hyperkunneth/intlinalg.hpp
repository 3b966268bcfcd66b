#pragma once

// Exact integer lattice algebra over arbitrary-precision integers:
// column echelon / Hermite normal form, kernels, lattice membership,
// sums and intersections of lattices, and Smith normal form.
//
// Conventions. A lattice is the integer column span of a matrix. The
// leading row of a nonzero column is its smallest row index with a nonzero
// entry. The canonical (Hermite) basis of a lattice has columns sorted by
// strictly increasing leading row, positive leading entries, and every entry
// sitting in another column's leading row reduced into [0, that pivot).

#include "hyperkunneth/errors.hpp"
#include "hyperkunneth/integer.hpp"
#include "hyperkunneth/sparse_matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace hyperkunneth {

/// Incremental integer column echelon form built from unimodular column
/// operations. Each inserted vector is reduced against the stored basis;
/// when tracking is on, every vector carries a tag that undergoes the same
/// operations, so a vector that reduces to zero yields its tag as a relation.
class ColumnEchelon {
 public:
  struct Entry {
    IntVector column;
    IntVector tag;
  };

  explicit ColumnEchelon(std::size_t rows) : by_pivot_(rows) {}

  /// Returns the tag of the residual when `v` reduces to zero.
  std::optional<IntVector> insert(IntVector v, IntVector tag = {}) {
    while (!v.empty()) {
      std::size_t r = v.front().first;
      if (r >= by_pivot_.size()) throw UsageError("vector longer than echelon height");
      auto& slot = by_pivot_[r];
      if (!slot) {
        if (v.front().second < 0) {
          v = sparse_scale(v, Integer(-1));
          tag = sparse_scale(tag, Integer(-1));
        }
        slot = Entry{std::move(v), std::move(tag)};
        ++rank_;
        return std::nullopt;
      }
      const Integer bp = slot->column.front().second;
      const Integer vp = v.front().second;
      if (vp % bp == 0) {
        Integer q = -(vp / bp);
        v = sparse_axpy(v, q, slot->column);
        tag = sparse_axpy(tag, q, slot->tag);
      } else {
        // [b v] <- [b v] * [[s, vp/g], [t, -bp/g]], determinant -1.
        auto [g, s, t] = extended_gcd(bp, vp);
        Integer vg = vp / g, bg = bp / g;
        IntVector nb = sparse_combine(s, slot->column, t, v);
        IntVector nv = sparse_combine(vg, slot->column, Integer(-bg), v);
        IntVector nbt = sparse_combine(s, slot->tag, t, tag);
        IntVector nvt = sparse_combine(vg, slot->tag, Integer(-bg), tag);
        slot->column = std::move(nb);
        slot->tag = std::move(nbt);
        v = std::move(nv);
        tag = std::move(nvt);
      }
    }
    return tag;
  }

  /// Reduce `v` against the basis without modifying it. Returns the
  /// coefficients (combination of stored tags) when `v` lies in the lattice.
  std::optional<IntVector> reduce(IntVector v) const {
    IntVector coeffs;
    while (!v.empty()) {
      std::size_t r = v.front().first;
      if (r >= by_pivot_.size() || !by_pivot_[r]) return std::nullopt;
      const Entry& e = *by_pivot_[r];
      const Integer& p = e.column.front().second;
      if (v.front().second % p != 0) return std::nullopt;
      Integer q = v.front().second / p;
      v = sparse_axpy(v, Integer(-q), e.column);
      coeffs = sparse_axpy(coeffs, q, e.tag);
    }
    return coeffs;
  }

  std::size_t rank() const { return rank_; }
  std::size_t height() const { return by_pivot_.size(); }

  /// Stored columns in increasing leading-row order.
  std::vector<const Entry*> entries() const {
    std::vector<const Entry*> out;
    out.reserve(rank_);
    for (const auto& e : by_pivot_)
      if (e) out.push_back(&*e);
    return out;
  }

 private:
  std::vector<std::optional<Entry>> by_pivot_;
  std::size_t rank_ = 0;
};

namespace detail {

inline std::vector<IntVector> reduce_to_hermite(std::vector<IntVector> cols) {
  // cols are in echelon order with positive pivots.
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      std::size_t r = cols[j].front().first;
      const Integer& p = cols[j].front().second;
      auto it = std::lower_bound(cols[i].begin(), cols[i].end(), r,
                                 [](const auto& e, std::size_t k) { return e.first < k; });
      if (it == cols[i].end() || it->first != r) continue;
      Integer q = floor_div(it->second, p);
      if (q != 0) cols[i] = sparse_axpy(cols[i], Integer(-q), cols[j]);
    }
  }
  return cols;
}

}  // namespace detail

/// Canonical basis of the column lattice of `a` (zero columns dropped).
inline SparseIntMatrix hermite_normal_form(const SparseIntMatrix& a) {
  ColumnEchelon e(a.rows());
  for (const auto& c : a.columns()) e.insert(c);
  std::vector<IntVector> cols;
  for (const auto* entry : e.entries()) cols.push_back(entry->column);
  return SparseIntMatrix::from_columns(a.rows(), detail::reduce_to_hermite(std::move(cols)));
}

/// Basis of the column lattice in echelon form, without the off-pivot
/// reduction. Cheaper than the Hermite form; not canonical.
inline SparseIntMatrix echelon_basis(const SparseIntMatrix& a) {
  ColumnEchelon e(a.rows());
  for (const auto& c : a.columns()) e.insert(c);
  std::vector<IntVector> cols;
  for (const auto* entry : e.entries()) cols.push_back(entry->column);
  return SparseIntMatrix::from_columns(a.rows(), std::move(cols));
}

enum class BasisForm { hermite, echelon };

/// Basis of {x in Z^cols : a x = 0}. The basis comes from a unimodular
/// transform, so the lattice it spans is saturated.
inline SparseIntMatrix kernel_basis(const SparseIntMatrix& a, BasisForm form = BasisForm::hermite) {
  ColumnEchelon e(a.rows());
  std::vector<IntVector> relations;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (auto rel = e.insert(a.column(j), IntVector{{j, Integer(1)}})) relations.push_back(std::move(*rel));
  }
  auto k = SparseIntMatrix::from_columns(a.cols(), std::move(relations));
  return form == BasisForm::hermite ? hermite_normal_form(k) : echelon_basis(k);
}

/// Solves basis * c = v for many right-hand sides against one basis.
class LatticeSolver {
 public:
  explicit LatticeSolver(const SparseIntMatrix& basis) : echelon_(basis.rows()), cols_(basis.cols()) {
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      if (echelon_.insert(basis.column(j), IntVector{{j, Integer(1)}}))
        throw UsageError("lattice basis columns are linearly dependent");
    }
  }

  std::size_t rows() const { return echelon_.height(); }
  std::size_t cols() const { return cols_; }

  /// Coefficients in basis coordinates, or nullopt when v is not in the lattice.
  std::optional<IntVector> solve(const IntVector& v) const { return echelon_.reduce(v); }

  bool contains(const IntVector& v) const { return solve(v).has_value(); }

 private:
  ColumnEchelon echelon_;
  std::size_t cols_;
};

/// Coefficients c with basis * c = v exactly; nullopt is the NotInLattice outcome.
inline std::optional<std::vector<Integer>> express_in_basis(const std::vector<Integer>& v,
                                                            const SparseIntMatrix& basis) {
  if (v.size() != basis.rows()) throw UsageError("express_in_basis: vector length does not match basis rows");
  LatticeSolver solver(basis);
  auto c = solver.solve(sparse_from_dense(v));
  if (!c) return std::nullopt;
  return sparse_to_dense(*c, basis.cols());
}

inline SparseIntMatrix lattice_sum_basis(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows() != b.rows()) throw UsageError("lattice_sum_basis: row counts differ");
  return hermite_normal_form(a.hconcat(b));
}

/// Basis of span(a) ∩ span(b) from the kernel of the block matrix [a | -b].
inline SparseIntMatrix lattice_intersection_basis(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows() != b.rows()) throw UsageError("lattice_intersection_basis: row counts differ");
  SparseIntMatrix block = a;
  for (const auto& c : b.columns()) block.append_column(sparse_scale(c, Integer(-1)));
  SparseIntMatrix k = kernel_basis(block, BasisForm::echelon);
  SparseIntMatrix out(a.rows(), 0);
  for (const auto& rel : k.columns()) {
    IntVector left;
    for (const auto& [j, x] : rel)
      if (j < a.cols()) left.emplace_back(j, x);
    auto v = a.apply(left);
    if (!v.empty()) out.append_column(std::move(v));
  }
  return hermite_normal_form(out);
}

/// Normalizes positive integers to a divisibility chain with the same
/// product and the same isomorphism type of ⊕ Z/d_i. Ones are kept.
inline std::vector<Integer> divisibility_chain(std::vector<Integer> d) {
  for (auto& x : d) {
    if (x == 0) throw UsageError("divisibility_chain: zero factor");
    x = abs_value(x);
  }
  std::sort(d.begin(), d.end());
  auto first = std::find_if(d.begin(), d.end(), [](const Integer& x) { return x != 1; });
  std::size_t start = static_cast<std::size_t>(first - d.begin());
  for (std::size_t i = start; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

struct SNFResult {
  std::vector<Integer> d;  ///< invariant factors, d_i | d_{i+1}, all >= 1
  SparseIntMatrix left;    ///< unimodular, rows x rows
  SparseIntMatrix right;   ///< unimodular, cols x cols
  std::size_t rank = 0;
};

/// Smith normal form with transforms, left * a * right = diag(d) padded
/// with zeros. Dense elimination with a minimal-|value| pivot, the usual
/// remainder loop, and a divisibility repair step. Intended for small and
/// medium matrices; use invariant_factors() when transforms are not needed.
inline SNFResult smith_normal_form(const SparseIntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  auto D = a.to_dense();
  auto L = SparseIntMatrix::identity(m).to_dense();
  auto R = SparseIntMatrix::identity(n).to_dense();

  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(D[i], D[k]);
    std::swap(L[i], L[k]);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : D) std::swap(row[j], row[k]);
    for (auto& row : R) std::swap(row[j], row[k]);
  };
  // row_i += c * row_k
  auto add_row = [&](std::size_t i, std::size_t k, const Integer& c) {
    for (std::size_t j = 0; j < n; ++j)
      if (D[k][j] != 0) D[i][j] += c * D[k][j];
    for (std::size_t j = 0; j < m; ++j)
      if (L[k][j] != 0) L[i][j] += c * L[k][j];
  };
  // col_j += c * col_k
  auto add_col = [&](std::size_t j, std::size_t k, const Integer& c) {
    for (std::size_t i = 0; i < m; ++i)
      if (D[i][k] != 0) D[i][j] += c * D[i][k];
    for (std::size_t i = 0; i < n; ++i)
      if (R[i][k] != 0) R[i][j] += c * R[i][k];
  };

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D[i][j] != 0 && (pi == m || abs_value(D[i][j]) < abs_value(D[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        add_row(i, t, Integer(-(D[i][t] / D[t][t])));
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        add_col(j, t, Integer(-(D[t][j] / D[t][t])));
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to (t, t).
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (D[i][t] != 0 && abs_value(D[i][t]) < abs_value(D[bi][bj])) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[t][j] != 0 && abs_value(D[t][j]) < abs_value(D[bi][bj])) bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility repair: pull an offending row into the pivot row.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(t, bad, Integer(1));
    }
    if (D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : L[t]) x = -x;
    }
    ++t;
  }

  SNFResult out;
  for (std::size_t i = 0; i < t; ++i) out.d.push_back(D[i][i]);
  out.rank = out.d.size();
  out.left = SparseIntMatrix::from_rows(L);
  out.right = SparseIntMatrix::from_rows(R);
  if (m == 0) out.left = SparseIntMatrix(0, 0);
  if (n == 0) out.right = SparseIntMatrix(0, 0);
  return out;
}

/// Invariant factors only, by alternating column and row echelon passes on a
/// sparse matrix until it is diagonal, then normalizing the diagonal into a
/// divisibility chain. Independent of smith_normal_form's elimination order.
inline std::vector<Integer> invariant_factors(const SparseIntMatrix& a) {
  SparseIntMatrix m = a;
  for (int pass = 0;; ++pass) {
    if (pass > 100000) throw IntegrityError("invariant_factors: echelon alternation did not converge");
    SparseIntMatrix e = echelon_basis(m);
    bool diagonal = std::all_of(e.columns().begin(), e.columns().end(),
                                [](const IntVector& c) { return c.size() == 1; });
    if (diagonal) {
      std::vector<Integer> d;
      d.reserve(e.cols());
      for (const auto& c : e.columns()) d.push_back(abs_value(c.front().second));
      return divisibility_chain(std::move(d));
    }
    m = e.transposed();
  }
}

inline std::size_t integer_rank(const SparseIntMatrix& a) {
  ColumnEchelon e(a.rows());
  for (const auto& c : a.columns()) e.insert(c);
  return e.rank();
}

/// Fraction-free (Bareiss) determinant of a square matrix.
inline Integer determinant(const SparseIntMatrix& a) {
  if (a.rows() != a.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  auto M = a.to_dense();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && M[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(M[k], M[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

}  // namespace hyperkunneth
