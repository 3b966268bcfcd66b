#pragma once

#include "hyperkunneth/errors.hpp"
#include "hyperkunneth/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hyperkunneth {

/// Seeded generator with platform-independent derived draws (the standard
/// distributions are implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi]; the modulo bias is irrelevant at these ranges.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent per-instance seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Includes every vertex subset of size 1..max_dim+1 independently with
/// probability `density`, then drops vertices left uncovered. When nothing
/// was drawn, one random candidate is forced in.
inline Hypergraph random_hypergraph(std::size_t n_vertices, int max_dim, double density, std::uint64_t seed) {
  if (n_vertices < 1 || n_vertices > 20) throw UsageError("random_hypergraph: n_vertices must be in [1, 20]");
  if (max_dim < 0) throw UsageError("random_hypergraph: max_dim must be >= 0");
  if (!(density >= 0.0 && density <= 1.0)) throw UsageError("random_hypergraph: density must be in [0, 1]");

  std::vector<Simplex> candidates;
  const std::size_t max_size = std::min<std::size_t>(n_vertices, static_cast<std::size_t>(max_dim) + 1);
  for (std::uint32_t mask = 1; mask < (1u << n_vertices); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size > max_size) continue;
    Simplex s;
    for (VertexIndex v = 0; v < n_vertices; ++v)
      if (mask & (1u << v)) s.push_back(v);
    candidates.push_back(std::move(s));
  }
  std::sort(candidates.begin(), candidates.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  Rng rng(seed);
  std::vector<Simplex> chosen;
  for (const auto& c : candidates)
    if (rng.uniform() < density) chosen.push_back(c);
  if (chosen.empty())
    chosen.push_back(candidates[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(candidates.size()) - 1))]);

  const std::size_t width = std::to_string(n_vertices - 1).size();
  std::vector<std::vector<std::string>> edges;
  for (const auto& s : chosen) {
    std::vector<std::string> tokens;
    for (auto v : s) {
      std::string digits = std::to_string(v);
      tokens.push_back("v" + std::string(width - digits.size(), '0') + digits);
    }
    edges.push_back(std::move(tokens));
  }
  return Hypergraph::from_token_edges(edges);
}

/// The 6-vertex triangulation of the real projective plane (vertices 1..6).
inline SimplicialComplex real_projective_plane() {
  static const char* triangles[10][3] = {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "5"}, {"1", "4", "6"},
                                         {"1", "5", "6"}, {"2", "3", "6"}, {"2", "4", "5"}, {"2", "5", "6"},
                                         {"3", "4", "5"}, {"3", "4", "6"}};
  std::vector<std::vector<std::string>> edges;
  for (const auto& t : triangles) edges.push_back({t[0], t[1], t[2]});
  return associated_complex(Hypergraph::from_token_edges(edges));
}

/// Keeps each hyperedge of `h` independently with probability `keep`; at
/// least one hyperedge survives.
inline Hypergraph random_subhypergraph(const Hypergraph& h, double keep, std::uint64_t seed) {
  if (!(keep >= 0.0 && keep <= 1.0)) throw UsageError("random_subhypergraph: keep must be in [0, 1]");
  Rng rng(seed);
  auto all = h.all_edges();
  std::vector<std::vector<std::string>> edges;
  for (const auto& e : all)
    if (rng.uniform() < keep) edges.push_back(h.tokens_of(e));
  if (edges.empty())
    edges.push_back(h.tokens_of(all[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(all.size()) - 1))]));
  return Hypergraph::from_token_edges(edges);
}

}  // namespace hyperkunneth
