#pragma once

#include "hyperkunneth/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hyperkunneth {

using VertexIndex = std::uint32_t;

/// Strictly increasing vertex indices. Used for hyperedges and simplices
/// alike; the dimension is size() - 1.
using Simplex = std::vector<VertexIndex>;

inline int dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : s) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Vertex {
  std::string token;
  VertexIndex index = 0;
};

/// Splits a vertex token into its `|`-separated components.
inline std::vector<std::string_view> token_components(std::string_view token) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto bar = token.find('|', start);
    parts.push_back(token.substr(start, bar == std::string_view::npos ? bar : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return parts;
}

/// Total order on vertex tokens: lexicographic, component-wise on the
/// `|`-separated parts. For plain tokens this is ordinary string order; for
/// product tokens `left|right` it is the lexicographic pair order.
inline bool token_less(std::string_view a, std::string_view b) {
  auto pa = token_components(a), pb = token_components(b);
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

/// A finite hypergraph over a totally ordered vertex set. Hyperedges are
/// nonempty, duplicate-free, graded by dimension and kept in lexicographic
/// order of their vertex sequences. Every vertex lies in some hyperedge.
class Hypergraph {
 public:
  /// `vertices` lists the tokens in their total order (index = position).
  Hypergraph(std::vector<std::string> vertices, std::vector<Simplex> edges) : vertices_(std::move(vertices)) {
    if (edges.empty()) throw ValidationError("hypergraph has no hyperedges");
    {
      std::unordered_set<std::string> seen;
      for (const auto& t : vertices_)
        if (!seen.insert(t).second) throw ValidationError("duplicate vertex token '" + t + "'");
    }
    std::vector<bool> covered(vertices_.size(), false);
    for (auto& e : edges) {
      if (e.empty()) throw ValidationError("empty hyperedge");
      std::sort(e.begin(), e.end());
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] >= vertices_.size()) throw ValidationError("hyperedge references an unknown vertex");
        if (k > 0 && e[k] == e[k - 1])
          throw ValidationError("repeated vertex '" + vertices_[e[k]] + "' within one hyperedge");
        covered[e[k]] = true;
      }
      std::size_t d = e.size() - 1;
      if (by_dim_.size() <= d) by_dim_.resize(d + 1);
      by_dim_[d].push_back(std::move(e));
    }
    for (std::size_t v = 0; v < covered.size(); ++v)
      if (!covered[v]) throw ValidationError("vertex '" + vertices_[v] + "' lies in no hyperedge");
    lookup_.resize(by_dim_.size());
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
      auto& list = by_dim_[d];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      lookup_[d].reserve(list.size());
      for (std::size_t i = 0; i < list.size(); ++i) lookup_[d].emplace(list[i], i);
    }
  }

  /// Builds a hypergraph from token lists; vertex order is token_less.
  static Hypergraph from_token_edges(const std::vector<std::vector<std::string>>& edges) {
    std::vector<std::string> tokens;
    for (const auto& e : edges) tokens.insert(tokens.end(), e.begin(), e.end());
    std::sort(tokens.begin(), tokens.end(), [](const auto& a, const auto& b) { return token_less(a, b); });
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    std::unordered_map<std::string, VertexIndex> index;
    for (std::size_t i = 0; i < tokens.size(); ++i) index.emplace(tokens[i], static_cast<VertexIndex>(i));
    std::vector<Simplex> simplices;
    simplices.reserve(edges.size());
    for (const auto& e : edges) {
      Simplex s;
      for (const auto& t : e) s.push_back(index.at(t));
      simplices.push_back(std::move(s));
    }
    return Hypergraph(std::move(tokens), std::move(simplices));
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertex_tokens() const { return vertices_; }
  Vertex vertex(VertexIndex i) const { return {vertices_.at(i), i}; }

  /// Largest hyperedge dimension.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  /// Hyperedges of dimension `d` in canonical order (empty when none).
  const std::vector<Simplex>& edges(int d) const {
    static const std::vector<Simplex> none;
    if (d < 0 || static_cast<std::size_t>(d) >= by_dim_.size()) return none;
    return by_dim_[static_cast<std::size_t>(d)];
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& l : by_dim_) n += l.size();
    return n;
  }

  std::vector<Simplex> all_edges() const {
    std::vector<Simplex> out;
    for (const auto& l : by_dim_) out.insert(out.end(), l.begin(), l.end());
    return out;
  }

  /// Position of `s` within edges(dimension(s)).
  std::optional<std::size_t> index_of(const Simplex& s) const {
    if (s.empty() || s.size() > lookup_.size()) return std::nullopt;
    const auto& m = lookup_[s.size() - 1];
    auto it = m.find(s);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  std::vector<std::string> tokens_of(const Simplex& s) const {
    std::vector<std::string> out;
    for (auto v : s) out.push_back(vertices_.at(v));
    return out;
  }

  bool operator==(const Hypergraph& other) const {
    return vertices_ == other.vertices_ && by_dim_ == other.by_dim_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> lookup_;
};

/// Every facet of a simplex of dimension >= 1 is present.
inline bool is_closed(const Hypergraph& h) {
  for (int d = 1; d <= h.dimension(); ++d)
    for (const auto& s : h.edges(d))
      for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex facet = s;
        facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
        if (!h.contains(facet)) return false;
      }
  return true;
}

/// A hypergraph closed under taking nonempty subsets.
class SimplicialComplex : public Hypergraph {
 public:
  explicit SimplicialComplex(Hypergraph h) : Hypergraph(std::move(h)) {
    if (!is_closed(*this)) throw ValidationError("simplex set is not closed under taking faces");
  }
};

/// Downward closure: all nonempty subsets of all hyperedges.
inline SimplicialComplex associated_complex(const Hypergraph& h) {
  std::unordered_set<Simplex, SimplexHash> faces;
  for (const auto& e : h.all_edges()) {
    const std::size_t n = e.size();
    if (n > 24) throw UsageError("hyperedge too large for face enumeration");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex f;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) f.push_back(e[k]);
      faces.insert(std::move(f));
    }
  }
  return SimplicialComplex(Hypergraph(h.vertex_tokens(), std::vector<Simplex>(faces.begin(), faces.end())));
}

// ---------------------------------------------------------------------------
// Products

/// A vertex of a product: a pair (vertex of the left factor, vertex of the
/// right factor). Pairs are ordered lexicographically.
struct ProductVertex {
  VertexIndex left = 0;
  VertexIndex right = 0;
  auto operator<=>(const ProductVertex&) const = default;
};

/// Index arithmetic for the vertex set V × V' in lexicographic pair order.
class ProductLayout {
 public:
  ProductLayout(std::size_t left_count, std::size_t right_count)
      : left_count_(left_count), right_count_(right_count) {}

  std::size_t left_count() const { return left_count_; }
  std::size_t right_count() const { return right_count_; }
  std::size_t vertex_count() const { return left_count_ * right_count_; }

  VertexIndex index(ProductVertex v) const {
    return static_cast<VertexIndex>(v.left * right_count_ + v.right);
  }
  ProductVertex vertex(VertexIndex i) const {
    return {static_cast<VertexIndex>(i / right_count_), static_cast<VertexIndex>(i % right_count_)};
  }

 private:
  std::size_t left_count_;
  std::size_t right_count_;
};

/// `left|right` tokens for every pair, in lexicographic pair order.
inline std::vector<std::string> product_tokens(const Hypergraph& h, const Hypergraph& h2) {
  std::vector<std::string> out;
  out.reserve(h.vertex_count() * h2.vertex_count());
  for (const auto& a : h.vertex_tokens())
    for (const auto& b : h2.vertex_tokens()) out.push_back(a + "|" + b);
  return out;
}

/// A monotone staircase from (0,0) to (p,q); steps[k] is true for a step to
/// the right (first coordinate) and false for a step up.
using LatticePath = std::vector<bool>;

inline std::vector<LatticePath> monotone_paths(int p, int q) {
  std::vector<LatticePath> out;
  if (p < 0 || q < 0) return out;
  // Start from ups-then-rights, which is the smallest arrangement with
  // false < true, and walk all permutations.
  LatticePath steps(static_cast<std::size_t>(p + q), false);
  std::fill(steps.begin() + q, steps.end(), true);
  do {
    out.push_back(steps);
  } while (std::next_permutation(steps.begin(), steps.end()));
  return out;
}

/// Number of grid squares below the path: each right step contributes the
/// current height.
inline std::size_t path_area(const LatticePath& path) {
  std::size_t height = 0, area = 0;
  for (bool right : path) {
    if (right)
      area += height;
    else
      ++height;
  }
  return area;
}

/// The simplex η(γ) visited by `path` on the grid σ × τ.
inline Simplex path_simplex(const Simplex& sigma, const Simplex& tau, const LatticePath& path,
                            const ProductLayout& layout) {
  Simplex out;
  out.reserve(path.size() + 1);
  std::size_t i = 0, j = 0;
  out.push_back(layout.index({sigma[0], tau[0]}));
  for (bool right : path) {
    right ? ++i : ++j;
    out.push_back(layout.index({sigma.at(i), tau.at(j)}));
  }
  return out;
}

/// The product H ⊠ H': for every σ ∈ H and τ ∈ H', all hyperedges η(γ)
/// over monotone lattice paths γ on the dim σ × dim τ grid.
inline Hypergraph product_boxtimes(const Hypergraph& h, const Hypergraph& h2) {
  ProductLayout layout(h.vertex_count(), h2.vertex_count());
  std::vector<Simplex> edges;
  for (int p = 0; p <= h.dimension(); ++p) {
    for (int q = 0; q <= h2.dimension(); ++q) {
      if (h.edges(p).empty() || h2.edges(q).empty()) continue;
      auto paths = monotone_paths(p, q);
      for (const auto& sigma : h.edges(p))
        for (const auto& tau : h2.edges(q))
          for (const auto& path : paths) edges.push_back(path_simplex(sigma, tau, path, layout));
    }
  }
  return Hypergraph(product_tokens(h, h2), std::move(edges));
}

/// Cartesian product K × K' of simplicial complexes, realized as the
/// downward closure of K ⊠ K'.
inline SimplicialComplex product_complex(const Hypergraph& k, const Hypergraph& k2) {
  if (!is_closed(k) || !is_closed(k2)) throw ValidationError("product_complex: inputs must be simplicial complexes");
  return associated_complex(product_boxtimes(k, k2));
}

}  // namespace hyperkunneth
