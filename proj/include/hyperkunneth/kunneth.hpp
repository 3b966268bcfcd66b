#pragma once

// Chains on simplices and on pairs of simplices, the Eilenberg-Zilber (shuffle)
// map μ and the Alexander-Whitney map ν between C(K) ⊗ C(K') and C(K × K'),
// the infimum of the tensor complex, and the Künneth verifications.

#include "hyperkunneth/abelian_group.hpp"
#include "hyperkunneth/errors.hpp"
#include "hyperkunneth/homology.hpp"
#include "hyperkunneth/hypergraph.hpp"
#include "hyperkunneth/intlinalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperkunneth {

/// Formal integer combination of simplices of one dimension.
struct ChainElement {
  int degree = 0;
  std::map<Simplex, Integer> terms;

  ChainElement() = default;
  explicit ChainElement(int n) : degree(n) {}
  ChainElement(int n, std::initializer_list<std::pair<Simplex, int>> list) : degree(n) {
    for (const auto& [s, c] : list) add(s, Integer(c));
  }

  void add(const Simplex& s, const Integer& c) {
    if (dimension(s) != degree) throw UsageError("chain term has the wrong dimension");
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(s, c);
    if (!fresh && (it->second += c) == 0) terms.erase(it);
  }

  bool is_zero() const { return terms.empty(); }

  ChainElement& operator+=(const ChainElement& o) {
    for (const auto& [s, c] : o.terms) add(s, c);
    return *this;
  }
  ChainElement& operator-=(const ChainElement& o) {
    for (const auto& [s, c] : o.terms) add(s, -c);
    return *this;
  }
  friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }
  friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }

  /// Zero chains compare equal whatever their recorded degree.
  bool operator==(const ChainElement& o) const { return terms == o.terms && (terms.empty() || degree == o.degree); }
};

/// Formal integer combination of pairs σ ⊗ τ with dim σ + dim τ = degree.
struct TensorChain {
  int degree = 0;
  std::map<std::pair<Simplex, Simplex>, Integer> terms;

  TensorChain() = default;
  explicit TensorChain(int n) : degree(n) {}

  void add(const Simplex& s, const Simplex& t, const Integer& c) {
    if (dimension(s) + dimension(t) != degree) throw UsageError("tensor term has the wrong degree");
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(std::make_pair(s, t), c);
    if (!fresh && (it->second += c) == 0) terms.erase(it);
  }

  bool is_zero() const { return terms.empty(); }

  TensorChain& operator+=(const TensorChain& o) {
    for (const auto& [st, c] : o.terms) add(st.first, st.second, c);
    return *this;
  }
  TensorChain& operator-=(const TensorChain& o) {
    for (const auto& [st, c] : o.terms) add(st.first, st.second, -c);
    return *this;
  }
  friend TensorChain operator+(TensorChain a, const TensorChain& b) { return a += b; }
  friend TensorChain operator-(TensorChain a, const TensorChain& b) { return a -= b; }

  bool operator==(const TensorChain& o) const { return terms == o.terms && (terms.empty() || degree == o.degree); }
};

/// A tensor chain written as Σ x_i ⊗ y_i.
struct DecomposedTensor {
  std::vector<std::pair<ChainElement, ChainElement>> parts;
};

/// Simplicial boundary; the facet omitting position j gets sign (-1)^j.
inline ChainElement boundary(const ChainElement& x) {
  ChainElement out(x.degree - 1);
  if (x.degree <= 0) return out;
  for (const auto& [s, c] : x.terms)
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
      out.add(f, j % 2 == 0 ? c : Integer(-c));
    }
  return out;
}

inline TensorChain tensor_product(const ChainElement& x, const ChainElement& y) {
  TensorChain out(x.degree + y.degree);
  for (const auto& [s, a] : x.terms)
    for (const auto& [t, b] : y.terms) out.add(s, t, a * b);
  return out;
}

/// (∂⊗∂')(x⊗y) = ∂x⊗y + (-1)^deg x · x⊗∂y.
inline TensorChain tensor_boundary(const TensorChain& t) {
  TensorChain out(t.degree - 1);
  for (const auto& [st, c] : t.terms) {
    const auto& [s, u] = st;
    ChainElement left(dimension(s)), right(dimension(u));
    left.add(s, Integer(1));
    right.add(u, Integer(1));
    if (dimension(s) > 0)
      for (const auto& [f, a] : boundary(left).terms) out.add(f, u, a * c);
    if (dimension(u) > 0) {
      Integer sign = dimension(s) % 2 == 0 ? c : Integer(-c);
      for (const auto& [f, b] : boundary(right).terms) out.add(s, f, b * sign);
    }
  }
  return out;
}

/// The two ambient complexes of a product and its vertex numbering.
class ProductContext {
 public:
  ProductContext(Hypergraph left, Hypergraph right)
      : left_(std::move(left)), right_(std::move(right)), layout_(left_.vertex_count(), right_.vertex_count()) {}

  const Hypergraph& left() const { return left_; }
  const Hypergraph& right() const { return right_; }
  const ProductLayout& layout() const { return layout_; }

 private:
  Hypergraph left_;
  Hypergraph right_;
  ProductLayout layout_;
};

/// μ(σ⊗τ) = Σ_γ (-1)^|γ| η(γ), extended bilinearly.
inline ChainElement ez_map(const TensorChain& t, const ProductContext& ctx) {
  ChainElement out(t.degree);
  for (const auto& [st, c] : t.terms) {
    const auto& [s, u] = st;
    if (!ctx.left().contains(s) || !ctx.right().contains(u))
      throw UsageError("ez_map: tensor term is not a pair of simplices of the factors");
    for (const auto& path : monotone_paths(dimension(s), dimension(u))) {
      Simplex eta = path_simplex(s, u, path, ctx.layout());
      out.add(eta, path_area(path) % 2 == 0 ? c : Integer(-c));
    }
  }
  return out;
}

/// ν((x0,y0)…(xn,yn)) = Σ_k [x0…xk] ⊗ [yk…yn], dropping degenerate factors.
inline TensorChain aw_map(const ChainElement& c, const ProductContext& ctx) {
  TensorChain out(c.degree);
  for (const auto& [s, coeff] : c.terms) {
    std::vector<ProductVertex> pts;
    for (auto v : s) pts.push_back(ctx.layout().vertex(v));
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].left < pts[i - 1].left || pts[i].right < pts[i - 1].right)
        throw UsageError("aw_map: simplex is not monotone in both coordinates");
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Simplex front, back;
      bool degenerate = false;
      for (std::size_t i = 0; i <= k; ++i) {
        if (i > 0 && pts[i].left == pts[i - 1].left) degenerate = true;
        front.push_back(pts[i].left);
      }
      for (std::size_t i = k; i < pts.size(); ++i) {
        if (i > k && pts[i].right == pts[i - 1].right) degenerate = true;
        back.push_back(pts[i].right);
      }
      if (!degenerate) out.add(front, back, coeff);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coordinates

/// Chain with the given coordinates over the degree-n simplices of `k`.
inline ChainElement chain_from_vector(const Hypergraph& k, int n, const IntVector& v) {
  ChainElement out(n);
  for (const auto& [i, x] : v) out.add(k.edges(n).at(i), x);
  return out;
}

inline IntVector chain_to_vector(const Hypergraph& k, const ChainElement& c) {
  IntVector v;
  for (const auto& [s, x] : c.terms) {
    auto i = k.index_of(s);
    if (!i) throw UsageError("chain term is not a simplex of the ambient complex");
    v.emplace_back(*i, x);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

/// C(K) ⊗ C(K') with basis, in degree n, the pairs (σ^p, τ^{n-p}) in blocks of
/// ascending p and lexicographic order inside each block.
class TensorComplex {
 public:
  TensorComplex(SimplicialComplex left, SimplicialComplex right)
      : left_(std::move(left)), right_(std::move(right)) {
    const int top = left_.dimension() + right_.dimension();
    offsets_.resize(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
      std::size_t at = 0;
      for (int p = 0; p <= n; ++p) {
        offsets_[static_cast<std::size_t>(n)].push_back(at);
        at += block_cols(p) * block_rows(n - p);
      }
      chain_.ranks.push_back(at);
    }
    for (int n = 0; n <= top; ++n) chain_.boundaries.push_back(build_boundary(n));
  }

  const SimplicialComplex& left() const { return left_; }
  const SimplicialComplex& right() const { return right_; }
  const ChainComplex& chain() const { return chain_; }
  int dimension() const { return static_cast<int>(chain_.ranks.size()) - 1; }

  std::size_t position(int p, std::size_t left_index, int q, std::size_t right_index) const {
    return offsets_.at(static_cast<std::size_t>(p + q)).at(static_cast<std::size_t>(p)) +
           left_index * block_rows(q) + right_index;
  }

  IntVector to_vector(const TensorChain& t) const {
    IntVector v;
    for (const auto& [st, c] : t.terms) {
      auto i = left_.index_of(st.first);
      auto j = right_.index_of(st.second);
      if (!i || !j) throw UsageError("tensor term is not a pair of simplices of the factors");
      v.emplace_back(position(dimension_of(st.first), *i, dimension_of(st.second), *j), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  TensorChain from_vector(int n, const IntVector& v) const {
    TensorChain t(n);
    const auto& offs = offsets_.at(static_cast<std::size_t>(n));
    for (const auto& [pos, c] : v) {
      int p = static_cast<int>(std::upper_bound(offs.begin(), offs.end(), pos) - offs.begin()) - 1;
      std::size_t local = pos - offs[static_cast<std::size_t>(p)];
      std::size_t w = block_rows(n - p);
      t.add(left_.edges(p).at(local / w), right_.edges(n - p).at(local % w), c);
    }
    return t;
  }

  /// Positions of the pairs σ ⊗ τ with σ ∈ h and τ ∈ h2.
  CellSubset pair_cells(const Hypergraph& h, const Hypergraph& h2) const {
    CellSubset cells(chain_.ranks.size());
    for (int p = 0; p <= h.dimension(); ++p)
      for (int q = 0; q <= h2.dimension(); ++q)
        for (const auto& s : h.edges(p))
          for (const auto& u : h2.edges(q))
            cells[static_cast<std::size_t>(p + q)].push_back(position(p, *left_.index_of(s), q, *right_.index_of(u)));
    for (auto& c : cells) std::sort(c.begin(), c.end());
    return cells;
  }

 private:
  static int dimension_of(const Simplex& s) { return hyperkunneth::dimension(s); }
  std::size_t block_cols(int p) const { return p <= left_.dimension() ? left_.edges(p).size() : 0; }
  std::size_t block_rows(int q) const { return q >= 0 && q <= right_.dimension() ? right_.edges(q).size() : 0; }

  SparseIntMatrix build_boundary(int n) {
    SparseIntMatrix d(n == 0 ? 0 : chain_.ranks[static_cast<std::size_t>(n) - 1], 0);
    for (int p = 0; p <= n; ++p) {
      if (block_cols(p) * block_rows(n - p) == 0) continue;
      for (const auto& s : left_.edges(p))
        for (const auto& u : right_.edges(n - p)) {
          TensorChain t(n);
          t.add(s, u, Integer(1));
          d.append_column(n == 0 ? IntVector{} : to_vector(tensor_boundary(t)));
        }
    }
    return d;
  }

  SimplicialComplex left_;
  SimplicialComplex right_;
  std::vector<std::vector<std::size_t>> offsets_;
  ChainComplex chain_;
};

// ---------------------------------------------------------------------------
// Infimum of the tensor complex

/// x ∈ Inf_n(D ⊗ D'): every term of x and of its boundary is a pair of
/// hyperedges. Checked directly on the chain.
inline bool in_inf_tensor(const TensorChain& x, const Hypergraph& h, const Hypergraph& h2) {
  auto inside = [&](const TensorChain& t) {
    for (const auto& [st, c] : t.terms)
      if (!h.contains(st.first) || !h2.contains(st.second)) return false;
    return true;
  };
  return inside(x) && inside(tensor_boundary(x));
}

/// x ∈ Inf_n of a hypergraph inside its associated complex.
inline bool in_inf(const ChainElement& x, const Hypergraph& h) {
  auto inside = [&](const ChainElement& c) {
    for (const auto& [s, a] : c.terms)
      if (!h.contains(s)) return false;
    return true;
  };
  return inside(x) && inside(boundary(x));
}

struct TensorInf {
  TensorComplex complex;
  GradedSubmodule<Integer> basis;  ///< degreewise tensor of the factors' Inf bases
};

namespace detail {

inline SparseIntMatrix tensor_of_bases(const TensorComplex& tc, int p, const SparseIntMatrix& x, int q,
                                       const SparseIntMatrix& y) {
  SparseIntMatrix out(tc.chain().rank(p + q), 0);
  for (const auto& a : x.columns())
    for (const auto& b : y.columns()) {
      IntVector col;
      col.reserve(a.size() * b.size());
      for (const auto& [i, u] : a)
        for (const auto& [j, v] : b) col.emplace_back(tc.position(p, i, q, j), u * v);
      out.append_column(std::move(col));
    }
  return out;
}

}  // namespace detail

/// Inf of the tensor complex, degrees 0..dim h + dim h2 + 1, as the tensor of
/// the two factors' Inf bases. With `verify`, also computes the Inf of the
/// graded submodule spanned by hyperedge pairs directly and requires the two
/// lattices to coincide (compared through Hermite normal forms).
inline TensorInf inf_tensor_basis(const Hypergraph& h, const Hypergraph& h2, bool verify = false) {
  TensorComplex tc(associated_complex(h), associated_complex(h2));
  auto left = inf_chain(h);
  auto right = inf_chain(h2);
  const int degrees = h.dimension() + h2.dimension() + 2;
  GradedSubmodule<Integer> b;
  for (int n = 0; n < degrees; ++n) {
    SparseIntMatrix block(tc.chain().rank(n), 0);
    for (int p = 0; p <= n; ++p) {
      if (left.rank(p) == 0 || right.rank(n - p) == 0) continue;
      block = block.hconcat(detail::tensor_of_bases(tc, p, left.basis[static_cast<std::size_t>(p)], n - p,
                                                    right.basis[static_cast<std::size_t>(n - p)]));
    }
    b.basis.push_back(std::move(block));
  }
  if (verify) {
    auto direct = inf_submodule(tc.chain(), tc.pair_cells(h, h2), degrees);
    for (int n = 0; n < degrees; ++n)
      if (!(hermite_normal_form(b.basis[static_cast<std::size_t>(n)]) == direct.basis[static_cast<std::size_t>(n)]))
        throw IntegrityError("Inf of the tensor complex differs from the tensor of the Infs in degree " +
                             std::to_string(n));
  }
  return {std::move(tc), std::move(b)};
}

/// Writes an element of Inf_n(D ⊗ D') as Σ x_i ⊗ y_i with every x_i in
/// Inf(h) and every y_i in Inf(h2); nullopt when the element is not in Inf.
inline std::optional<DecomposedTensor> decompose_inf_tensor(const TensorChain& g, const Hypergraph& h,
                                                            const Hypergraph& h2) {
  if (!in_inf_tensor(g, h, h2)) return std::nullopt;
  auto kh = associated_complex(h);
  auto kh2 = associated_complex(h2);
  TensorComplex tc(kh, kh2);
  auto left = inf_chain(h);
  auto right = inf_chain(h2);
  const int n = g.degree;
  struct Slot {
    int p;
    std::size_t i, j;
  };
  std::vector<Slot> slots;
  SparseIntMatrix all(tc.chain().rank(n), 0);
  for (int p = 0; p <= n; ++p) {
    if (left.rank(p) == 0 || right.rank(n - p) == 0) continue;
    all = all.hconcat(detail::tensor_of_bases(tc, p, left.basis[static_cast<std::size_t>(p)], n - p,
                                              right.basis[static_cast<std::size_t>(n - p)]));
    for (std::size_t i = 0; i < left.rank(p); ++i)
      for (std::size_t j = 0; j < right.rank(n - p); ++j) slots.push_back({p, i, j});
  }
  auto coeffs = LatticeSolver(all).solve(tc.to_vector(g));
  if (!coeffs) throw IntegrityError("element of Inf(D ⊗ D') is not in Inf(D) ⊗ Inf(D')");
  // Group the coefficients by the left factor.
  std::map<std::pair<int, std::size_t>, ChainElement> grouped;
  for (const auto& [k, c] : *coeffs) {
    const auto& s = slots[k];
    auto y = chain_from_vector(kh2, n - s.p, right.basis[static_cast<std::size_t>(n - s.p)].column(s.j));
    auto [it, fresh] = grouped.try_emplace({s.p, s.i}, ChainElement(n - s.p));
    for (const auto& [u, b] : y.terms) it->second.add(u, b * c);
  }
  DecomposedTensor out;
  for (auto& [key, y] : grouped) {
    if (y.is_zero()) continue;
    out.parts.emplace_back(chain_from_vector(kh, key.first, left.basis[static_cast<std::size_t>(key.first)].column(key.second)),
                           std::move(y));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Künneth verification

struct KunnethRow {
  int degree = 0;
  FGAbelianGroup tensor_part;  ///< ⊕_{p+q=n} H_p ⊗ H'_q
  FGAbelianGroup tor_part;     ///< ⊕_{p+q=n} Tor(H_p, H'_{q-1})
  FGAbelianGroup expected;     ///< tensor_part ⊕ tor_part
  FGAbelianGroup product;      ///< H_n of the ⊠ product
  bool pass = false;
};

struct KunnethReport {
  Coefficients coefficients = Coefficients::integers();
  HomologyTable left, right, product;
  std::vector<KunnethRow> rows;

  bool passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const KunnethRow& r) { return r.pass; });
  }
};

inline KunnethReport kunneth_from_tables(HomologyTable left, HomologyTable right, HomologyTable product) {
  KunnethReport r{product.coefficients, std::move(left), std::move(right), std::move(product), {}};
  for (int n = 0; n < static_cast<int>(r.product.groups.size()); ++n) {
    std::vector<FGAbelianGroup> tensors, tors;
    for (int p = 0; p <= n; ++p) {
      tensors.push_back(tensor(r.left.at(p), r.right.at(n - p)));
      tors.push_back(tor(r.left.at(p), r.right.at(n - p - 1)));
    }
    KunnethRow row;
    row.degree = n;
    row.tensor_part = direct_sum(tensors);
    row.tor_part = direct_sum(tors);
    row.expected = direct_sum(row.tensor_part, row.tor_part);
    row.product = r.product.at(n);
    row.pass = row.expected == row.product;
    r.rows.push_back(std::move(row));
  }
  return r;
}

/// Compares H_n(h ⊠ h2) with the Künneth prediction from H(h) and H(h2) in
/// every degree 0..dim(h ⊠ h2)+1. Over a field the Tor part vanishes.
inline KunnethReport kunneth_check(const Hypergraph& h, const Hypergraph& h2, Coefficients c = Coefficients::integers(),
                                   EmbeddedOptions opts = {}) {
  return kunneth_from_tables(embedded_homology(h, c, opts), embedded_homology(h2, c, opts),
                             embedded_homology(product_boxtimes(h, h2), c, opts));
}

struct BettiReport {
  Coefficients coefficients = Coefficients::rationals();
  std::vector<std::size_t> left, right, product, expected;
  bool passed() const { return product == expected; }
};

inline std::vector<std::size_t> betti_convolution(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                                  std::size_t length) {
  std::vector<std::size_t> out(length, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (i + j < length) out[i + j] += a[i] * b[j];
  return out;
}

/// Betti_n(h ⊠ h2) = Σ_{p+q=n} Betti_p(h) Betti_q(h2) over a field.
inline BettiReport field_kunneth_check(const Hypergraph& h, const Hypergraph& h2, Coefficients field,
                                       EmbeddedOptions opts = {}) {
  if (!field.is_field()) throw UsageError("field_kunneth_check needs field coefficients (q or zp:<p>)");
  BettiReport r;
  r.coefficients = field;
  r.left = embedded_homology(h, field, opts).betti();
  r.right = embedded_homology(h2, field, opts).betti();
  r.product = embedded_homology(product_boxtimes(h, h2), field, opts).betti();
  r.expected = betti_convolution(r.left, r.right, r.product.size());
  return r;
}

struct ChainMapReport {
  std::size_t tensor_basis = 0;   ///< Inf(D ⊗ D') basis elements checked
  std::size_t product_basis = 0;  ///< Inf(h ⊠ h2) basis elements checked
  std::size_t cycles = 0;         ///< cycles checked for μν(z) - z ∈ B
};

namespace detail {

inline std::string describe(const ChainElement& c) {
  std::string s;
  for (const auto& [simplex, x] : c.terms) {
    s += (x < 0 ? " - " : (s.empty() ? "" : " + "));
    if (abs_value(x) != 1) s += to_string(abs_value(x)) + "*";
    s += "[";
    for (std::size_t i = 0; i < simplex.size(); ++i) s += (i ? "," : "") + std::to_string(simplex[i]);
    s += "]";
  }
  return s.empty() ? "0" : s;
}

inline std::string describe(const TensorChain& t) {
  std::string s;
  for (const auto& [st, x] : t.terms) {
    s += (x < 0 ? " - " : (s.empty() ? "" : " + "));
    if (abs_value(x) != 1) s += to_string(abs_value(x)) + "*";
    ChainElement a(dimension(st.first)), b(dimension(st.second));
    a.add(st.first, Integer(1));
    b.add(st.second, Integer(1));
    s += describe(a) + "(x)" + describe(b);
  }
  return s.empty() ? "0" : s;
}

}  // namespace detail

/// On every basis element of Inf(D ⊗ D') and of Inf(h ⊠ h2): μ and ν land in
/// the respective Inf, commute with the boundaries, and ν∘μ = id. On a basis
/// of cycles of Inf(h ⊠ h2): μν(z) - z is a boundary inside Inf(h ⊠ h2).
/// Throws IntegrityError naming the first offending chain.
inline ChainMapReport restricted_chainmap_check(const Hypergraph& h, const Hypergraph& h2) {
  ChainMapReport report;
  TensorInf ti = inf_tensor_basis(h, h2);
  const TensorComplex& tc = ti.complex;
  ProductContext ctx(tc.left(), tc.right());

  Hypergraph prod = product_boxtimes(h, h2);
  SimplicialComplex kp = associated_complex(prod);
  ChainComplex cc = simplicial_chain_complex(kp);
  const int degrees = prod.dimension() + 2;
  auto inf_prod = inf_submodule(cc, hyperedge_cells(prod, kp), degrees);

  for (int n = 0; n < static_cast<int>(ti.basis.degrees()); ++n) {
    for (const auto& col : ti.basis.basis[static_cast<std::size_t>(n)].columns()) {
      TensorChain t = tc.from_vector(n, col);
      ChainElement m = ez_map(t, ctx);
      if (!in_inf(m, prod)) throw IntegrityError("μ leaves Inf(H ⊠ H') on " + detail::describe(t));
      if (!(boundary(m) == ez_map(tensor_boundary(t), ctx)))
        throw IntegrityError("μ does not commute with the boundary on " + detail::describe(t));
      if (!(aw_map(m, ctx) == t)) throw IntegrityError("ν∘μ is not the identity on " + detail::describe(t));
      ++report.tensor_basis;
    }
  }

  for (int n = 0; n < degrees; ++n) {
    const auto& basis = inf_prod.basis[static_cast<std::size_t>(n)];
    for (const auto& col : basis.columns()) {
      ChainElement z = chain_from_vector(kp, n, col);
      TensorChain a = aw_map(z, ctx);
      if (!in_inf_tensor(a, h, h2)) throw IntegrityError("ν leaves Inf(D ⊗ D') on " + detail::describe(z));
      if (!(tensor_boundary(a) == aw_map(boundary(z), ctx)))
        throw IntegrityError("ν does not commute with the boundary on " + detail::describe(z));
      ++report.product_basis;
    }

    // Cycles of Inf_n and boundaries of Inf_{n+1}, in ambient coordinates.
    SparseIntMatrix cycles = basis * kernel_basis(cc.boundary(n) * basis, BasisForm::echelon);
    SparseIntMatrix bounds = n + 1 < degrees
                                 ? echelon_basis(cc.boundary(n + 1) * inf_prod.basis[static_cast<std::size_t>(n) + 1])
                                 : SparseIntMatrix(cc.rank(n), 0);
    LatticeSolver in_bounds(bounds);
    for (const auto& col : cycles.columns()) {
      ChainElement z = chain_from_vector(kp, n, col);
      ChainElement back = ez_map(aw_map(z, ctx), ctx);
      if (!in_bounds.contains(chain_to_vector(kp, back - z)))
        throw IntegrityError("μ∘ν is not the identity in homology on " + detail::describe(z));
      ++report.cycles;
    }
  }
  return report;
}

}  // namespace hyperkunneth
