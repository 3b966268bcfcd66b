#pragma once

#include "hyperkunneth/integer.hpp"
#include "hyperkunneth/intlinalg.hpp"
#include "hyperkunneth/sparse_matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hyperkunneth {

/// A finitely generated abelian group Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k held in
/// canonical form: t_i >= 2 and t_i | t_{i+1}. Two values compare equal
/// exactly when the groups are isomorphic.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  /// Accepts any torsion multiset; factors equal to 1 are dropped, the rest
  /// regrouped into a divisibility chain. A factor 0 contributes a free Z.
  FGAbelianGroup(std::size_t rank, std::vector<Integer> factors) : rank_(rank) {
    std::vector<Integer> nonzero;
    for (auto& f : factors) {
      if (f == 0)
        ++rank_;
      else
        nonzero.push_back(abs_value(f));
    }
    for (auto& d : divisibility_chain(std::move(nonzero)))
      if (d != 1) torsion_.push_back(std::move(d));
  }

  static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup(rank, {}); }
  static FGAbelianGroup cyclic(const Integer& order) { return FGAbelianGroup(0, {order}); }

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

  /// `Z^2 + Z/2 + Z/4`, `Z`, or `0`. The free symbol is replaced for field
  /// coefficients (e.g. `Q^3`).
  std::string to_string(const std::string& free_symbol = "Z") const {
    if (is_trivial()) return "0";
    std::string out;
    if (rank_ > 0) out = rank_ == 1 ? free_symbol : free_symbol + "^" + std::to_string(rank_);
    for (const auto& t : torsion_) {
      if (!out.empty()) out += " + ";
      out += "Z/" + t.str();
    }
    return out;
  }

  bool operator==(const FGAbelianGroup&) const = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Z^ambient_rank / column-span(relations).
inline FGAbelianGroup from_presentation(const SparseIntMatrix& relations, std::size_t ambient_rank) {
  if (relations.rows() != ambient_rank)
    throw UsageError("from_presentation: relation rows must equal the ambient rank");
  auto d = invariant_factors(relations);
  const std::size_t free = ambient_rank - d.size();
  return FGAbelianGroup(free, std::move(d));
}

inline FGAbelianGroup direct_sum(std::span<const FGAbelianGroup> groups) {
  std::size_t rank = 0;
  std::vector<Integer> factors;
  for (const auto& g : groups) {
    rank += g.rank();
    factors.insert(factors.end(), g.torsion().begin(), g.torsion().end());
  }
  return FGAbelianGroup(rank, std::move(factors));
}

inline FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  const FGAbelianGroup both[] = {a, b};
  return direct_sum(std::span<const FGAbelianGroup>(both));
}

inline FGAbelianGroup tensor(const FGAbelianGroup& g, const FGAbelianGroup& h) {
  std::vector<Integer> factors;
  for (const auto& a : g.torsion())
    for (std::size_t k = 0; k < h.rank(); ++k) factors.push_back(a);
  for (const auto& b : h.torsion())
    for (std::size_t k = 0; k < g.rank(); ++k) factors.push_back(b);
  for (const auto& a : g.torsion())
    for (const auto& b : h.torsion()) factors.push_back(gcd(a, b));
  return FGAbelianGroup(g.rank() * h.rank(), std::move(factors));
}

/// Tor over Z. Free summands are flat and contribute nothing.
inline FGAbelianGroup tor(const FGAbelianGroup& g, const FGAbelianGroup& h) {
  std::vector<Integer> factors;
  for (const auto& a : g.torsion())
    for (const auto& b : h.torsion()) factors.push_back(gcd(a, b));
  return FGAbelianGroup(0, std::move(factors));
}

}  // namespace hyperkunneth
