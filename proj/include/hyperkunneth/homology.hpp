#pragma once

// Boundary matrices, the infimum and supremum chain complexes of a graded
// subset of cells, and their homology over Z, Q and Z/p.
//
// Everything here works for any based chain complex together with a graded
// subset of its basis cells: a hypergraph inside its associated simplicial
// complex, or pairs of hyperedges inside a tensor product of chain complexes.

#include "hyperkunneth/abelian_group.hpp"
#include "hyperkunneth/errors.hpp"
#include "hyperkunneth/field.hpp"
#include "hyperkunneth/hypergraph.hpp"
#include "hyperkunneth/intlinalg.hpp"
#include "hyperkunneth/sparse_matrix.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hyperkunneth {

/// A chain complex of free modules with a chosen basis in each degree.
/// boundaries[n] is the matrix of ∂_n : C_n -> C_{n-1}; ∂_0 is the zero map
/// (homology is not reduced).
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<SparseIntMatrix> boundaries;

  std::size_t rank(int n) const {
    return n < 0 || static_cast<std::size_t>(n) >= ranks.size() ? 0 : ranks[static_cast<std::size_t>(n)];
  }

  /// ∂_n as a rank(n-1) x rank(n) matrix, also outside the stored range.
  SparseIntMatrix boundary(int n) const {
    if (n >= 0 && static_cast<std::size_t>(n) < boundaries.size()) return boundaries[static_cast<std::size_t>(n)];
    return SparseIntMatrix(rank(n - 1), rank(n));
  }
};

/// ∂_n of a simplicial complex in canonical simplex order; the facet that
/// omits vertex j enters with sign (-1)^j.
inline SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int n) {
  const auto& cells = k.edges(n);
  if (n <= 0) return SparseIntMatrix(0, cells.size());
  SparseIntMatrix out(k.edges(n - 1).size(), 0);
  for (const auto& s : cells) {
    IntVector col;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex facet = s;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(j));
      col.emplace_back(*k.index_of(facet), Integer(j % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.append_column(std::move(col));
  }
  return out;
}

inline ChainComplex simplicial_chain_complex(const SimplicialComplex& k) {
  ChainComplex cc;
  for (int n = 0; n <= k.dimension(); ++n) {
    cc.ranks.push_back(k.edges(n).size());
    cc.boundaries.push_back(boundary_matrix(k, n));
  }
  return cc;
}

/// Per degree, sorted indices of the distinguished basis cells.
using CellSubset = std::vector<std::vector<std::size_t>>;

/// Positions of the hyperedges of `h` among the simplices of `k` ⊇ h.
inline CellSubset hyperedge_cells(const Hypergraph& h, const SimplicialComplex& k) {
  CellSubset out(static_cast<std::size_t>(std::max(h.dimension(), k.dimension()) + 1));
  for (int n = 0; n <= h.dimension(); ++n) {
    for (const auto& e : h.edges(n)) {
      auto idx = k.index_of(e);
      if (!idx) throw UsageError("hyperedge missing from the ambient complex");
      out[static_cast<std::size_t>(n)].push_back(*idx);
    }
    std::sort(out[static_cast<std::size_t>(n)].begin(), out[static_cast<std::size_t>(n)].end());
  }
  return out;
}

/// Per-degree basis (matrix columns, in ambient coordinates) of a graded
/// submodule of a based chain complex. Sub-lattices need not be saturated.
template <class Scalar>
struct GradedSubmodule {
  std::vector<SparseMatrix<Scalar>> basis;

  std::size_t degrees() const { return basis.size(); }
  std::size_t rank(int n) const {
    return n < 0 || static_cast<std::size_t>(n) >= basis.size() ? 0 : basis[static_cast<std::size_t>(n)].cols();
  }
  bool operator==(const GradedSubmodule&) const = default;
};

namespace detail {

inline const std::vector<std::size_t>& cells_at(const CellSubset& cells, int n) {
  static const std::vector<std::size_t> none;
  if (n < 0 || static_cast<std::size_t>(n) >= cells.size()) return none;
  return cells[static_cast<std::size_t>(n)];
}

/// Matrix whose columns are the unit vectors of `cells` in Z^ambient.
inline SparseIntMatrix unit_columns(std::size_t ambient, const std::vector<std::size_t>& cells) {
  SparseIntMatrix m(ambient, 0);
  for (auto c : cells) m.append_column(IntVector{{c, Integer(1)}});
  return m;
}

/// ∂_n restricted to the columns in `cells[n]` and projected onto the rows
/// outside `cells[n-1]`. Its kernel is Inf_n in cell coordinates.
inline SparseIntMatrix projected_boundary(const ChainComplex& cc, const CellSubset& cells, int n) {
  const auto& lower = cells_at(cells, n - 1);
  std::vector<std::size_t> outside(cc.rank(n - 1), 0);
  std::size_t next = 0;
  std::vector<bool> in_lower(cc.rank(n - 1), false);
  for (auto c : lower) in_lower[c] = true;
  for (std::size_t r = 0; r < outside.size(); ++r) outside[r] = in_lower[r] ? SIZE_MAX : next++;
  SparseIntMatrix d = cc.boundary(n);
  SparseIntMatrix p(next, 0);
  for (auto c : cells_at(cells, n)) {
    IntVector col;
    for (const auto& [r, x] : d.column(c))
      if (outside[r] != SIZE_MAX) col.emplace_back(outside[r], x);
    p.append_column(std::move(col));
  }
  return p;
}

template <class Scalar>
SparseMatrix<Scalar> lift_rows(const SparseMatrix<Scalar>& m, std::size_t ambient, const std::vector<std::size_t>& rows) {
  SparseMatrix<Scalar> out(ambient, 0);
  for (const auto& c : m.columns()) {
    SparseVector<Scalar> lifted;
    lifted.reserve(c.size());
    for (const auto& [i, x] : c) lifted.emplace_back(rows[i], x);
    out.append_column(std::move(lifted));
  }
  return out;
}

}  // namespace detail

/// Inf_n = {x ∈ span(cells_n) : ∂x ∈ span(cells_{n-1})} for n = 0..degrees-1,
/// with canonical (Hermite) bases.
inline GradedSubmodule<Integer> inf_submodule(const ChainComplex& cc, const CellSubset& cells, int degrees) {
  GradedSubmodule<Integer> m;
  for (int n = 0; n < degrees; ++n) {
    const auto& here = detail::cells_at(cells, n);
    SparseIntMatrix k = n == 0 ? SparseIntMatrix::identity(here.size())
                               : kernel_basis(detail::projected_boundary(cc, cells, n), BasisForm::hermite);
    m.basis.push_back(detail::lift_rows(k, cc.rank(n), here));
  }
  return m;
}

/// Sup_n = span(cells_n) + ∂_{n+1} span(cells_{n+1}).
inline GradedSubmodule<Integer> sup_submodule(const ChainComplex& cc, const CellSubset& cells, int degrees) {
  GradedSubmodule<Integer> m;
  for (int n = 0; n < degrees; ++n) {
    auto own = detail::unit_columns(cc.rank(n), detail::cells_at(cells, n));
    auto up = cc.boundary(n + 1) * detail::unit_columns(cc.rank(n + 1), detail::cells_at(cells, n + 1));
    m.basis.push_back(lattice_sum_basis(own, up));
  }
  return m;
}

template <class Field>
GradedSubmodule<typename Field::value_type> inf_submodule(const ChainComplex& cc, const CellSubset& cells,
                                                          int degrees, const Field& f) {
  GradedSubmodule<typename Field::value_type> m;
  for (int n = 0; n < degrees; ++n) {
    const auto& here = detail::cells_at(cells, n);
    FieldMatrix<Field> k = n == 0 ? to_field(f, SparseIntMatrix::identity(here.size()))
                                  : field_kernel_basis(f, to_field(f, detail::projected_boundary(cc, cells, n)));
    m.basis.push_back(detail::lift_rows(k, cc.rank(n), here));
  }
  return m;
}

template <class Field>
GradedSubmodule<typename Field::value_type> sup_submodule(const ChainComplex& cc, const CellSubset& cells,
                                                          int degrees, const Field& f) {
  GradedSubmodule<typename Field::value_type> m;
  for (int n = 0; n < degrees; ++n) {
    auto own = detail::unit_columns(cc.rank(n), detail::cells_at(cells, n));
    auto up = cc.boundary(n + 1) * detail::unit_columns(cc.rank(n + 1), detail::cells_at(cells, n + 1));
    m.basis.push_back(field_span_basis(f, to_field(f, own.hconcat(up))));
  }
  return m;
}

/// ∂(m_n) ⊆ m_{n-1} for every degree, checked by lattice membership.
inline bool has_chain_property(const ChainComplex& cc, const GradedSubmodule<Integer>& m) {
  for (int n = 1; n < static_cast<int>(m.degrees()); ++n) {
    LatticeSolver lower(m.basis[static_cast<std::size_t>(n - 1)]);
    SparseIntMatrix d = cc.boundary(n);
    for (const auto& x : m.basis[static_cast<std::size_t>(n)].columns())
      if (!lower.contains(d.apply(x))) return false;
  }
  return true;
}

/// Homology of a sub-chain-complex over Z. For each n: the boundary in
/// submodule coordinates, its kernel Z_n, the image of degree n+1 expressed in
/// a basis of Z_n, and the quotient read off a Smith normal form.
inline std::vector<FGAbelianGroup> submodule_homology(const ChainComplex& cc, const GradedSubmodule<Integer>& m) {
  const int top = static_cast<int>(m.degrees());
  // coords[n]: ∂_n restricted to m_n, in m_{n-1} coordinates.
  std::vector<SparseIntMatrix> coords(static_cast<std::size_t>(top) + 1);
  coords[0] = SparseIntMatrix(0, m.rank(0));
  for (int n = 1; n < top; ++n) {
    LatticeSolver lower(m.basis[static_cast<std::size_t>(n - 1)]);
    SparseIntMatrix d = cc.boundary(n);
    SparseIntMatrix c(m.rank(n - 1), 0);
    for (const auto& x : m.basis[static_cast<std::size_t>(n)].columns()) {
      auto y = lower.solve(d.apply(x));
      if (!y) throw IntegrityError("boundary leaves the submodule in degree " + std::to_string(n - 1));
      c.append_column(std::move(*y));
    }
    coords[static_cast<std::size_t>(n)] = std::move(c);
  }
  coords[static_cast<std::size_t>(top)] = SparseIntMatrix(m.rank(top - 1), 0);

  std::vector<FGAbelianGroup> out;
  for (int n = 0; n < top; ++n) {
    SparseIntMatrix cycles = kernel_basis(coords[static_cast<std::size_t>(n)], BasisForm::echelon);
    LatticeSolver in_cycles(cycles);
    SparseIntMatrix relations(cycles.cols(), 0);
    for (const auto& b : coords[static_cast<std::size_t>(n) + 1].columns()) {
      auto r = in_cycles.solve(b);
      if (!r) throw IntegrityError("boundary is not a cycle in degree " + std::to_string(n));
      relations.append_column(std::move(*r));
    }
    out.push_back(from_presentation(relations, cycles.cols()));
  }
  return out;
}

/// Betti numbers of a sub-chain-complex over a field:
/// dim m_n - rank ∂(m_n) - rank ∂(m_{n+1}).
template <class Field>
std::vector<std::size_t> submodule_betti(const ChainComplex& cc, const GradedSubmodule<typename Field::value_type>& m,
                                         const Field& f) {
  const int top = static_cast<int>(m.degrees());
  std::vector<std::size_t> image_rank(static_cast<std::size_t>(top) + 1, 0);
  for (int n = 1; n < top; ++n) {
    SparseIntMatrix d = cc.boundary(n);
    FieldMatrix<Field> img(cc.rank(n - 1), 0);
    for (const auto& x : m.basis[static_cast<std::size_t>(n)].columns()) img.append_column(field_apply(f, d, x));
    image_rank[static_cast<std::size_t>(n)] = field_rank(f, img);
  }
  std::vector<std::size_t> betti;
  for (int n = 0; n < top; ++n) {
    std::size_t k = m.rank(n);
    betti.push_back(k - image_rank[static_cast<std::size_t>(n)] - image_rank[static_cast<std::size_t>(n) + 1]);
  }
  return betti;
}

/// Coefficient ring: Z, Q, or Z/p for a prime p.
class Coefficients {
 public:
  enum class Kind { integers, rationals, prime_field };

  static Coefficients integers() { return Coefficients(Kind::integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::rationals, 0); }
  static Coefficients prime_field(std::uint32_t p) {
    PrimeField check(p);
    return Coefficients(Kind::prime_field, p);
  }

  /// `z`, `q`, or `zp:<p>`.
  static Coefficients parse(const std::string& tag) {
    if (tag == "z" || tag == "Z") return integers();
    if (tag == "q" || tag == "Q") return rationals();
    if (tag.rfind("zp:", 0) == 0) {
      std::string digits = tag.substr(3);
      if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("malformed prime in coefficient tag '" + tag + "'");
      return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw UsageError("unknown coefficient tag '" + tag + "' (expected z, q or zp:<p>)");
  }

  Kind kind() const { return kind_; }
  std::uint32_t prime() const { return p_; }
  bool is_field() const { return kind_ != Kind::integers; }

  std::string tag() const {
    switch (kind_) {
      case Kind::integers: return "z";
      case Kind::rationals: return "q";
      case Kind::prime_field: return "zp:" + std::to_string(p_);
    }
    return "";
  }

  /// Symbol for a free summand in rendered groups.
  std::string free_symbol() const {
    switch (kind_) {
      case Kind::integers: return "Z";
      case Kind::rationals: return "Q";
      case Kind::prime_field: return "GF(" + std::to_string(p_) + ")";
    }
    return "";
  }

  bool operator==(const Coefficients&) const = default;

 private:
  Coefficients(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Homology per degree. Over a field every group is free (its rank is the
/// Betti number).
struct HomologyTable {
  Coefficients coefficients = Coefficients::integers();
  std::vector<FGAbelianGroup> groups;

  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> b;
    for (const auto& g : groups) b.push_back(g.rank());
    return b;
  }

  FGAbelianGroup at(int n) const {
    if (n < 0 || static_cast<std::size_t>(n) >= groups.size()) return {};
    return groups[static_cast<std::size_t>(n)];
  }

  bool operator==(const HomologyTable&) const = default;
};

enum class Construction { infimum, supremum };

struct EmbeddedOptions {
  bool verify = false;  ///< also run the supremum pipeline and compare
};

namespace detail {

inline HomologyTable groups_from_betti(Coefficients c, const std::vector<std::size_t>& betti) {
  HomologyTable t{c, {}};
  for (auto b : betti) t.groups.push_back(FGAbelianGroup::free(b));
  return t;
}

inline HomologyTable subset_homology(const ChainComplex& cc, const CellSubset& cells, int degrees, Coefficients c,
                                     Construction how) {
  switch (c.kind()) {
    case Coefficients::Kind::integers: {
      auto m = how == Construction::infimum ? inf_submodule(cc, cells, degrees) : sup_submodule(cc, cells, degrees);
      return {c, submodule_homology(cc, m)};
    }
    case Coefficients::Kind::rationals: {
      RationalField f;
      auto m = how == Construction::infimum ? inf_submodule(cc, cells, degrees, f)
                                            : sup_submodule(cc, cells, degrees, f);
      return groups_from_betti(c, submodule_betti(cc, m, f));
    }
    case Coefficients::Kind::prime_field: {
      PrimeField f(c.prime());
      auto m = how == Construction::infimum ? inf_submodule(cc, cells, degrees, f)
                                            : sup_submodule(cc, cells, degrees, f);
      return groups_from_betti(c, submodule_betti(cc, m, f));
    }
  }
  throw UsageError("unknown coefficients");
}

inline std::string render_groups(const HomologyTable& t) {
  std::string s;
  for (std::size_t n = 0; n < t.groups.size(); ++n)
    s += "  H_" + std::to_string(n) + " = " + t.groups[n].to_string(t.coefficients.free_symbol()) + "\n";
  return s;
}

}  // namespace detail

/// Infimum chain complex of a hypergraph, degrees 0..dim+1, with the
/// associated simplicial complex as ambient.
inline GradedSubmodule<Integer> inf_chain(const Hypergraph& h) {
  auto k = associated_complex(h);
  return inf_submodule(simplicial_chain_complex(k), hyperedge_cells(h, k), h.dimension() + 2);
}

inline GradedSubmodule<Integer> sup_chain(const Hypergraph& h) {
  auto k = associated_complex(h);
  return sup_submodule(simplicial_chain_complex(k), hyperedge_cells(h, k), h.dimension() + 2);
}

/// Embedded homology of a hypergraph in degrees 0..dim(h)+1.
inline HomologyTable embedded_homology(const Hypergraph& h, Coefficients c = Coefficients::integers(),
                                       EmbeddedOptions opts = {}) {
  auto k = associated_complex(h);
  auto cc = simplicial_chain_complex(k);
  auto cells = hyperedge_cells(h, k);
  const int degrees = h.dimension() + 2;
  HomologyTable inf = detail::subset_homology(cc, cells, degrees, c, Construction::infimum);
  if (opts.verify) {
    HomologyTable sup = detail::subset_homology(cc, cells, degrees, c, Construction::supremum);
    if (!(sup == inf))
      throw IntegrityError("infimum and supremum homology differ\n infimum:\n" + detail::render_groups(inf) +
                           " supremum:\n" + detail::render_groups(sup));
  }
  return inf;
}

/// Ordinary simplicial homology by the rank/torsion formula
/// H_n = Z^(c_n - rank ∂_n - rank ∂_{n+1}) ⊕ torsion(∂_{n+1}); an independent
/// route from the kernel/quotient pipeline above.
inline HomologyTable classical_homology(const SimplicialComplex& k, Coefficients c = Coefficients::integers()) {
  auto cc = simplicial_chain_complex(k);
  const int degrees = k.dimension() + 2;
  HomologyTable t{c, {}};
  if (c.kind() == Coefficients::Kind::integers) {
    std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(degrees) + 1);
    for (int n = 1; n <= degrees; ++n) factors[static_cast<std::size_t>(n)] = invariant_factors(cc.boundary(n));
    for (int n = 0; n < degrees; ++n) {
      std::size_t free = cc.rank(n) - factors[static_cast<std::size_t>(n)].size() -
                         factors[static_cast<std::size_t>(n) + 1].size();
      t.groups.emplace_back(free, factors[static_cast<std::size_t>(n) + 1]);
    }
    return t;
  }
  auto ranks = [&](const auto& f) {
    std::vector<std::size_t> r(static_cast<std::size_t>(degrees) + 1, 0);
    for (int n = 1; n <= degrees; ++n) r[static_cast<std::size_t>(n)] = field_rank(f, to_field(f, cc.boundary(n)));
    std::vector<std::size_t> betti;
    for (int n = 0; n < degrees; ++n)
      betti.push_back(cc.rank(n) - r[static_cast<std::size_t>(n)] - r[static_cast<std::size_t>(n) + 1]);
    return betti;
  };
  if (c.kind() == Coefficients::Kind::rationals) return detail::groups_from_betti(c, ranks(RationalField{}));
  return detail::groups_from_betti(c, ranks(PrimeField(c.prime())));
}

}  // namespace hyperkunneth
