#pragma once

// Randomized verification of the product constructions and the Künneth
// formula on pairs of small random hypergraphs, with greedy shrinking of
// failing instances.

#include "hyperkunneth/errors.hpp"
#include "hyperkunneth/homology.hpp"
#include "hyperkunneth/hypergraph.hpp"
#include "hyperkunneth/hypergraph_io.hpp"
#include "hyperkunneth/kunneth.hpp"
#include "hyperkunneth/random.hpp"
#include "hyperkunneth/report.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace hyperkunneth {

struct FuzzConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_vertices = 6;
  int max_dim = 3;
  double density = 0.3;
  /// Probability that a factor is a random sub-hypergraph of the 6-vertex
  /// projective plane instead of a uniform random hypergraph; these carry
  /// 2-torsion often enough to exercise the Tor terms.
  double projective_fraction = 0.0;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Names of the per-instance checks, in the order they run.
inline const std::vector<std::string>& fuzz_check_names() {
  static const std::vector<std::string> names{
      "closure-equality",  // K(H ⊠ H') equals K_H × K_H' enumerated as monotone chains
      "inf-sup",           // Inf and Sup homology agree over Z, for both factors and the product
      "tensor-inf",        // Inf(D ⊗ D') equals Inf(D) ⊗ Inf(D') as lattices
      "chain-maps",        // μ, ν restricted to Inf: boundaries, ν∘μ = id, μ∘ν ≃ id in homology
      "kunneth-z",         "kunneth-q", "kunneth-z2", "kunneth-z3",
      "betti-q",           "betti-z2",  "betti-z3",
  };
  return names;
}

struct FuzzInstance {
  Hypergraph left;
  Hypergraph right;
};

/// The pair of hypergraphs for instance `index`; reproducible from
/// (config, index) alone.
inline FuzzInstance fuzz_instance(const FuzzConfig& cfg, std::size_t index) {
  Rng rng(mix_seed(cfg.seed, index));
  auto one = [&]() {
    if (cfg.projective_fraction > 0.0 && rng.uniform() < cfg.projective_fraction)
      return random_subhypergraph(real_projective_plane(), 0.9, rng.next());
    auto n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(cfg.max_vertices)));
    int d = static_cast<int>(rng.between(0, cfg.max_dim));
    return random_hypergraph(n, d, cfg.density, rng.next());
  };
  Hypergraph a = one();
  Hypergraph b = one();
  return {std::move(a), std::move(b)};
}

namespace detail {

/// Every set of vertex pairs forming a chain for the componentwise order whose
/// projections are simplices of k and k2: the Cartesian product of the two
/// complexes, built without lattice paths.
inline std::set<std::vector<std::string>> monotone_chain_product(const Hypergraph& k, const Hypergraph& k2) {
  std::set<std::vector<std::string>> out;
  std::vector<ProductVertex> chain;
  auto projections_ok = [&]() {
    Simplex a, b;
    for (const auto& v : chain) {
      if (a.empty() || a.back() != v.left) a.push_back(v.left);
      if (b.empty() || b.back() != v.right) b.push_back(v.right);
    }
    return k.contains(a) && k2.contains(b);
  };
  std::function<void()> grow = [&]() {
    std::vector<std::string> tokens;
    for (const auto& v : chain) tokens.push_back(k.vertex_tokens()[v.left] + "|" + k2.vertex_tokens()[v.right]);
    out.insert(tokens);
    const ProductVertex last = chain.back();
    for (VertexIndex i = last.left; i < k.vertex_count(); ++i)
      for (VertexIndex j = last.right; j < k2.vertex_count(); ++j) {
        if (i == last.left && j == last.right) continue;
        chain.push_back({i, j});
        if (projections_ok()) grow();
        chain.pop_back();
      }
  };
  for (VertexIndex i = 0; i < k.vertex_count(); ++i)
    for (VertexIndex j = 0; j < k2.vertex_count(); ++j) {
      chain = {{i, j}};
      if (projections_ok()) grow();
    }
  return out;
}

inline std::set<std::vector<std::string>> token_simplices(const Hypergraph& h) {
  std::set<std::vector<std::string>> out;
  for (const auto& e : h.all_edges()) out.insert(h.tokens_of(e));
  return out;
}

inline std::string run_check(const std::string& name, const Hypergraph& h, const Hypergraph& h2) {
  auto kunneth = [&](Coefficients c) -> std::string {
    auto r = kunneth_check(h, h2, c);
    if (r.passed()) return {};
    for (const auto& row : r.rows)
      if (!row.pass)
        return "degree " + std::to_string(row.degree) + ": expected " +
               row.expected.to_string(c.free_symbol()) + ", product has " + row.product.to_string(c.free_symbol());
    return "mismatch";
  };
  auto betti = [&](Coefficients c) -> std::string {
    auto r = field_kunneth_check(h, h2, c);
    if (r.passed()) return {};
    std::string s = "betti product";
    for (auto b : r.product) s += " " + std::to_string(b);
    s += ", expected";
    for (auto b : r.expected) s += " " + std::to_string(b);
    return s;
  };

  try {
    if (name == "closure-equality") {
      auto lhs = associated_complex(product_boxtimes(h, h2));
      auto rhs = product_complex(associated_complex(h), associated_complex(h2));
      auto chains = monotone_chain_product(associated_complex(h), associated_complex(h2));
      if (!(lhs == rhs)) return "closure of H ⊠ H' differs from product_complex";
      if (token_simplices(lhs) != chains) return "closure of H ⊠ H' differs from the monotone-chain product";
      return {};
    }
    if (name == "inf-sup") {
      EmbeddedOptions verify{true};
      embedded_homology(h, Coefficients::integers(), verify);
      embedded_homology(h2, Coefficients::integers(), verify);
      embedded_homology(product_boxtimes(h, h2), Coefficients::integers(), verify);
      return {};
    }
    if (name == "tensor-inf") {
      inf_tensor_basis(h, h2, true);
      return {};
    }
    if (name == "chain-maps") {
      restricted_chainmap_check(h, h2);
      return {};
    }
    if (name == "kunneth-z") return kunneth(Coefficients::integers());
    if (name == "kunneth-q") return kunneth(Coefficients::rationals());
    if (name == "kunneth-z2") return kunneth(Coefficients::prime_field(2));
    if (name == "kunneth-z3") return kunneth(Coefficients::prime_field(3));
    if (name == "betti-q") return betti(Coefficients::rationals());
    if (name == "betti-z2") return betti(Coefficients::prime_field(2));
    if (name == "betti-z3") return betti(Coefficients::prime_field(3));
  } catch (const IntegrityError& e) {
    return e.what();
  }
  throw UsageError("unknown fuzz check '" + name + "'");
}

/// The hypergraph on the edges of `h` other than `skip`, or nullopt when
/// nothing would remain.
inline std::optional<Hypergraph> without_edge(const Hypergraph& h, std::size_t skip) {
  auto edges = h.all_edges();
  if (edges.size() <= 1) return std::nullopt;
  std::vector<std::vector<std::string>> tokens;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (i != skip) tokens.push_back(h.tokens_of(edges[i]));
  return Hypergraph::from_token_edges(tokens);
}

}  // namespace detail

struct FuzzFailure {
  std::size_t index = 0;
  std::string check;
  std::string message;
  Hypergraph left;
  Hypergraph right;
  Hypergraph shrunk_left;
  Hypergraph shrunk_right;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<std::size_t> passes;  ///< per check, aligned with fuzz_check_names()
  std::vector<FuzzFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Removes hyperedges one at a time from either factor while `fails` keeps
/// holding, until no single removal preserves it.
inline std::pair<Hypergraph, Hypergraph> shrink_pair(
    Hypergraph h, Hypergraph h2, const std::function<bool(const Hypergraph&, const Hypergraph&)>& fails) {
  for (bool progress = true; progress;) {
    progress = false;
    for (int side = 0; side < 2 && !progress; ++side) {
      const Hypergraph& cur = side == 0 ? h : h2;
      for (std::size_t k = 0; k < cur.edge_count() && !progress; ++k) {
        auto smaller = detail::without_edge(cur, k);
        if (!smaller) continue;
        if (side == 0 ? fails(*smaller, h2) : fails(h, *smaller)) {
          (side == 0 ? h : h2) = std::move(*smaller);
          progress = true;
        }
      }
    }
  }
  return {std::move(h), std::move(h2)};
}

inline std::pair<Hypergraph, Hypergraph> shrink_failure(const std::string& check, Hypergraph h, Hypergraph h2) {
  return shrink_pair(std::move(h), std::move(h2), [&](const Hypergraph& a, const Hypergraph& b) {
    return !detail::run_check(check, a, b).empty();
  });
}

/// Runs every check on `count` random pairs. Instances run on worker threads;
/// results are collected by index so the report does not depend on timing.
inline FuzzReport run_fuzz(const FuzzConfig& cfg) {
  const auto& names = fuzz_check_names();
  struct Outcome {
    std::vector<std::string> messages;
  };
  std::vector<Outcome> outcomes(cfg.count);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cfg.count) return;
      try {
        auto inst = fuzz_instance(cfg, i);
        for (const auto& name : names) outcomes[i].messages.push_back(detail::run_check(name, inst.left, inst.right));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cfg.count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  FuzzReport report{cfg, std::vector<std::size_t>(names.size(), 0), {}};
  for (std::size_t i = 0; i < cfg.count; ++i)
    for (std::size_t c = 0; c < names.size(); ++c) {
      const auto& msg = outcomes[i].messages[c];
      if (msg.empty()) {
        ++report.passes[c];
        continue;
      }
      auto inst = fuzz_instance(cfg, i);
      auto [a, b] = shrink_failure(names[c], inst.left, inst.right);
      report.failures.push_back({i, names[c], msg, inst.left, inst.right, std::move(a), std::move(b)});
    }
  return report;
}

namespace detail {

inline std::string indent_edges(const Hypergraph& h) {
  std::string out;
  std::string text = write_text(h);
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    out += "    " + text.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return out;
}

inline std::string fuzz_header(const FuzzConfig& c) {
  char density[32];
  std::snprintf(density, sizeof density, "%g", c.density);
  char fraction[32];
  std::snprintf(fraction, sizeof fraction, "%g", c.projective_fraction);
  return "seed=" + std::to_string(c.seed) + " count=" + std::to_string(c.count) +
         " max-vertices=" + std::to_string(c.max_vertices) + " max-dim=" + std::to_string(c.max_dim) +
         " density=" + density + (c.projective_fraction > 0.0 ? std::string(" projective=") + fraction : std::string());
}

}  // namespace detail

inline std::string render_fuzz_text(const FuzzReport& r) {
  const auto& names = fuzz_check_names();
  std::string out = "fuzz " + detail::fuzz_header(r.config) + "\n";
  for (std::size_t c = 0; c < names.size(); ++c)
    out += detail::pad(names[c], 18) + std::to_string(r.passes[c]) + "/" + std::to_string(r.config.count) + "\n";
  out += "failures: " + std::to_string(r.failures.size()) + "\n";
  for (const auto& f : r.failures) {
    out += "instance " + std::to_string(f.index) + " " + f.check + ": " + f.message + "\n";
    out += "  minimized left:\n" + detail::indent_edges(f.shrunk_left);
    out += "  minimized right:\n" + detail::indent_edges(f.shrunk_right);
  }
  return out;
}

inline nlohmann::json fuzz_json(const FuzzReport& r) {
  const auto& names = fuzz_check_names();
  nlohmann::json passes = nlohmann::json::object();
  for (std::size_t c = 0; c < names.size(); ++c) passes[names[c]] = r.passes[c];
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"index", f.index},
                        {"check", f.check},
                        {"message", f.message},
                        {"left", to_json(f.left)},
                        {"right", to_json(f.right)},
                        {"minimized_left", to_json(f.shrunk_left)},
                        {"minimized_right", to_json(f.shrunk_right)}});
  return {{"seed", r.config.seed},
          {"count", r.config.count},
          {"max_vertices", r.config.max_vertices},
          {"max_dim", r.config.max_dim},
          {"density", r.config.density},
          {"projective_fraction", r.config.projective_fraction},
          {"passes", passes},
          {"failures", failures},
          {"pass", r.passed()}};
}

}  // namespace hyperkunneth
