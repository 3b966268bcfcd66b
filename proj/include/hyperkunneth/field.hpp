#pragma once

// Exact linear algebra over the rationals and over prime fields Z/p. A field
// policy supplies the arithmetic; values are stored in SparseMatrix /
// SparseVector containers like the integer code.

#include "hyperkunneth/errors.hpp"
#include "hyperkunneth/integer.hpp"
#include "hyperkunneth/sparse_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperkunneth {

struct RationalField {
  using value_type = Rational;

  value_type from_integer(const Integer& x) const { return Rational(x); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw UsageError("division by zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  std::string symbol() const { return "Q"; }
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw ValidationError("coefficient modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t modulus() const { return p_; }

  value_type from_integer(const Integer& x) const {
    Integer r = x % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type add(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) + b) % p_);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw UsageError("division by zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  bool is_zero(value_type a) const { return a == 0; }
  std::string symbol() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  std::uint32_t p_;
};

template <class Field>
using FieldVector = SparseVector<typename Field::value_type>;

template <class Field>
using FieldMatrix = SparseMatrix<typename Field::value_type>;

/// s*a + t*b
template <class Field>
FieldVector<Field> field_combine(const Field& f, const typename Field::value_type& s, const FieldVector<Field>& a,
                                 const typename Field::value_type& t, const FieldVector<Field>& b) {
  FieldVector<Field> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      auto x = f.mul(s, ia->second);
      if (!f.is_zero(x)) out.emplace_back(ia->first, std::move(x));
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      auto x = f.mul(t, ib->second);
      if (!f.is_zero(x)) out.emplace_back(ib->first, std::move(x));
      ++ib;
    } else {
      auto x = f.add(f.mul(s, ia->second), f.mul(t, ib->second));
      if (!f.is_zero(x)) out.emplace_back(ia->first, std::move(x));
      ++ia;
      ++ib;
    }
  }
  return out;
}

template <class Field>
FieldVector<Field> field_axpy(const Field& f, const FieldVector<Field>& a, const typename Field::value_type& c,
                              const FieldVector<Field>& b) {
  if (f.is_zero(c)) return a;
  return field_combine(f, f.from_integer(1), a, c, b);
}

template <class Field>
FieldVector<Field> to_field(const Field& f, const IntVector& v) {
  FieldVector<Field> out;
  for (const auto& [i, x] : v) {
    auto y = f.from_integer(x);
    if (!f.is_zero(y)) out.emplace_back(i, std::move(y));
  }
  return out;
}

template <class Field>
FieldMatrix<Field> to_field(const Field& f, const SparseIntMatrix& m) {
  FieldMatrix<Field> out(m.rows(), 0);
  for (const auto& c : m.columns()) out.append_column(to_field(f, c));
  return out;
}

template <class Field>
FieldVector<Field> field_apply(const Field& f, const FieldMatrix<Field>& m, const FieldVector<Field>& v) {
  FieldVector<Field> acc;
  for (const auto& [j, x] : v) acc = field_axpy(f, acc, x, m.column(j));
  return acc;
}

/// Integer matrix acting on a field vector (entries reduced on the fly).
template <class Field>
FieldVector<Field> field_apply(const Field& f, const SparseIntMatrix& m, const FieldVector<Field>& v) {
  FieldVector<Field> acc;
  for (const auto& [j, x] : v) acc = field_axpy(f, acc, x, to_field(f, m.column(j)));
  return acc;
}

/// Column echelon form over a field with normalized (unit) pivots.
template <class Field>
class FieldEchelon {
 public:
  using Vector = FieldVector<Field>;

  FieldEchelon(Field f, std::size_t rows) : f_(std::move(f)), by_pivot_(rows) {}

  /// Returns the tag of the residual when `v` reduces to zero.
  std::optional<Vector> insert(Vector v, Vector tag = {}) {
    while (!v.empty()) {
      std::size_t r = v.front().first;
      auto& slot = by_pivot_.at(r);
      if (!slot) {
        auto s = f_.inv(v.front().second);
        Vector zero;
        v = field_combine(f_, s, v, f_.from_integer(0), zero);
        tag = field_combine(f_, s, tag, f_.from_integer(0), zero);
        slot = Entry{std::move(v), std::move(tag)};
        ++rank_;
        return std::nullopt;
      }
      auto c = f_.neg(v.front().second);
      v = field_axpy(f_, v, c, slot->column);
      tag = field_axpy(f_, tag, c, slot->tag);
    }
    return tag;
  }

  bool contains(Vector v) const {
    while (!v.empty()) {
      const auto& slot = by_pivot_.at(v.front().first);
      if (!slot) return false;
      v = field_axpy(f_, v, f_.neg(v.front().second), slot->column);
    }
    return true;
  }

  std::size_t rank() const { return rank_; }

  std::vector<Vector> basis() const {
    std::vector<Vector> out;
    for (const auto& e : by_pivot_)
      if (e) out.push_back(e->column);
    return out;
  }

 private:
  struct Entry {
    Vector column;
    Vector tag;
  };
  Field f_;
  std::vector<std::optional<Entry>> by_pivot_;
  std::size_t rank_ = 0;
};

template <class Field>
std::size_t field_rank(const Field& f, const FieldMatrix<Field>& m) {
  FieldEchelon<Field> e(f, m.rows());
  for (const auto& c : m.columns()) e.insert(c);
  return e.rank();
}

template <class Field>
FieldMatrix<Field> field_kernel_basis(const Field& f, const FieldMatrix<Field>& m) {
  FieldEchelon<Field> e(f, m.rows());
  FieldMatrix<Field> out(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    FieldVector<Field> tag{{j, f.from_integer(1)}};
    if (auto rel = e.insert(m.column(j), std::move(tag))) out.append_column(std::move(*rel));
  }
  return out;
}

/// Independent columns spanning the column space.
template <class Field>
FieldMatrix<Field> field_span_basis(const Field& f, const FieldMatrix<Field>& m) {
  FieldEchelon<Field> e(f, m.rows());
  for (const auto& c : m.columns()) e.insert(c);
  return FieldMatrix<Field>::from_columns(m.rows(), e.basis());
}

}  // namespace hyperkunneth
