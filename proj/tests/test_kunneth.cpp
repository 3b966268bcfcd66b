#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hyperkunneth;

namespace {

Hypergraph H(std::vector<std::vector<std::string>> edges) { return Hypergraph::from_token_edges(edges); }

struct Term {
  Simplex left, right;
  int c;
};

TensorChain T(int n, std::initializer_list<Term> terms) {
  TensorChain t(n);
  for (const auto& x : terms) t.add(x.left, x.right, Integer(x.c));
  return t;
}

// Vertex indices follow token order: v1 = 0, v2 = 1, v3 = 2 and likewise for w.
Hypergraph tensor_left() { return H({{"v1"}, {"v3"}, {"v1", "v2"}, {"v2", "v3"}, {"v1", "v3"}}); }
Hypergraph tensor_right() { return H({{"w2"}, {"w3"}, {"w1", "w2"}, {"w2", "w3"}, {"w1", "w3"}}); }

const Simplex v1{0}, v2{1}, v3{2}, v12{0, 1}, v23{1, 2}, v13{0, 2};
const Simplex w1{0}, w2{1}, w3{2}, w12{0, 1}, w23{1, 2}, w13{0, 2};

TensorChain example_g() {
  return T(2, {{v12, w23, 1}, {v13, w13, 1}, {v23, w23, 1}, {v13, w12, -1}, {v13, w23, 1}});
}

std::vector<std::pair<Hypergraph, Hypergraph>> random_pairs(std::size_t count, std::uint64_t seed) {
  FuzzConfig cfg;
  cfg.seed = seed;
  cfg.max_vertices = 4;
  cfg.max_dim = 2;
  cfg.density = 0.4;
  std::vector<std::pair<Hypergraph, Hypergraph>> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto inst = fuzz_instance(cfg, i);
    out.emplace_back(inst.left, inst.right);
  }
  return out;
}

}  // namespace

TEST(ShuffleMap, IntervalSquareTable) {
  auto i = associated_complex(H({{"0", "1"}}));
  ProductContext ctx(i, i);
  // Product vertex (a, b) has index 2a + b.
  EXPECT_EQ(ez_map(T(2, {{{0, 1}, {0, 1}, 1}}), ctx), ChainElement(2, {{{0, 2, 3}, 1}, {{0, 1, 3}, -1}}));
  EXPECT_EQ(ez_map(T(1, {{{0}, {0, 1}, 1}}), ctx), ChainElement(1, {{{0, 1}, 1}}));
  EXPECT_EQ(ez_map(T(1, {{{0, 1}, {1}, 1}}), ctx), ChainElement(1, {{{1, 3}, 1}}));
  EXPECT_EQ(ez_map(T(0, {{{1}, {0}, 1}}), ctx), ChainElement(0, {{{2}, 1}}));
  EXPECT_THROW(ez_map(T(1, {{{0, 1}, {2}, 1}}), ctx), UsageError);
}

TEST(AlexanderWhitney, IntervalSquareTable) {
  auto i = associated_complex(H({{"0", "1"}}));
  ProductContext ctx(i, i);
  EXPECT_EQ(aw_map(ChainElement(2, {{{0, 2, 3}, 1}}), ctx), T(2, {{{0, 1}, {0, 1}, 1}}));
  EXPECT_TRUE(aw_map(ChainElement(2, {{{0, 1, 3}, 1}}), ctx).is_zero());
  EXPECT_EQ(aw_map(ChainElement(1, {{{0, 3}, 1}}), ctx), T(1, {{{0}, {0, 1}, 1}, {{0, 1}, {1}, 1}}));
  EXPECT_EQ(aw_map(ChainElement(1, {{{0, 2}, 1}}), ctx), T(1, {{{0, 1}, {0}, 1}}));
  EXPECT_EQ(aw_map(ChainElement(1, {{{2, 3}, 1}}), ctx), T(1, {{{1}, {0, 1}, 1}}));
  EXPECT_EQ(aw_map(ChainElement(0, {{{3}, 1}}), ctx), T(0, {{{1}, {1}, 1}}));
  EXPECT_THROW(aw_map(ChainElement(1, {{{1, 2}, 1}}), ctx), UsageError);
}

TEST(ChainMaps, FullComplexesCommuteWithBoundaryAndSplit) {
  for (std::uint64_t s = 0; s < 25; ++s) {
    auto k = associated_complex(random_hypergraph(4, 2, 0.5, s));
    auto k2 = associated_complex(random_hypergraph(3, 2, 0.5, s + 50));
    ProductContext ctx(k, k2);
    auto prod = product_complex(k, k2);
    for (int p = 0; p <= k.dimension(); ++p)
      for (int q = 0; q <= k2.dimension(); ++q)
        for (const auto& a : k.edges(p))
          for (const auto& b : k2.edges(q)) {
            TensorChain t(p + q);
            t.add(a, b, Integer(1));
            auto m = ez_map(t, ctx);
            EXPECT_EQ(aw_map(m, ctx), t);
            EXPECT_EQ(boundary(m), ez_map(tensor_boundary(t), ctx));
            for (const auto& [simplex, c] : m.terms) EXPECT_TRUE(prod.contains(simplex));
          }
    for (int n = 0; n <= prod.dimension(); ++n)
      for (const auto& s2 : prod.edges(n)) {
        ChainElement z(n);
        z.add(s2, Integer(1));
        EXPECT_EQ(tensor_boundary(aw_map(z, ctx)), aw_map(boundary(z), ctx));
      }
  }
}

TEST(TensorBoundary, SquaresToZero) {
  auto k = associated_complex(H({{"a", "b", "c"}}));
  auto k2 = associated_complex(H({{"x", "y", "z"}}));
  TensorComplex tc(k, k2);
  for (int n = 2; n <= tc.dimension(); ++n)
    EXPECT_EQ((tc.chain().boundary(n - 1) * tc.chain().boundary(n)).nonzeros(), 0u);
  auto t = T(3, {{{0, 1}, {0, 1, 2}, 1}, {{0, 1, 2}, {1, 2}, -2}});
  EXPECT_TRUE(tensor_boundary(tensor_boundary(t)).is_zero());
  EXPECT_EQ(tc.from_vector(3, tc.to_vector(t)), t);
}

TEST(TensorInf, ExampleMembership) {
  auto h = tensor_left(), h2 = tensor_right();
  EXPECT_TRUE(in_inf_tensor(example_g(), h, h2));
  EXPECT_TRUE(in_inf_tensor(T(2, {{v13, w23, 1}}), h, h2));
  for (const auto& single : {T(2, {{v12, w23, 1}}), T(2, {{v13, w13, 1}}), T(2, {{v23, w23, 1}}), T(2, {{v13, w12, 1}})})
    EXPECT_FALSE(in_inf_tensor(single, h, h2));
}

TEST(TensorInf, ExampleDecomposition) {
  auto h = tensor_left(), h2 = tensor_right();
  // The hand decomposition is valid.
  ChainElement path(1, {{v12, 1}, {v23, 1}});
  ChainElement diff(1, {{w13, 1}, {w12, -1}});
  EXPECT_TRUE(in_inf(path, h));
  EXPECT_TRUE(in_inf(diff, h2));
  EXPECT_EQ(tensor_product(path, ChainElement(1, {{w23, 1}})) + tensor_product(ChainElement(1, {{v13, 1}}), diff) +
                T(2, {{v13, w23, 1}}),
            example_g());

  auto d = decompose_inf_tensor(example_g(), h, h2);
  ASSERT_TRUE(d.has_value());
  TensorChain sum(2);
  for (const auto& [x, y] : d->parts) {
    EXPECT_TRUE(in_inf(x, h));
    EXPECT_TRUE(in_inf(y, h2));
    sum += tensor_product(x, y);
  }
  EXPECT_EQ(sum, example_g());
  EXPECT_FALSE(decompose_inf_tensor(T(2, {{v12, w23, 1}}), h, h2).has_value());
}

TEST(TensorInf, ChainMapOnExample) {
  auto h = tensor_left(), h2 = tensor_right();
  auto k = associated_complex(h), k2 = associated_complex(h2);
  ProductContext ctx(k, k2);
  auto g1 = T(2, {{v12, w23, 1}, {v23, w23, 1}});
  EXPECT_EQ(tensor_boundary(g1), T(1, {{v3, w23, 1}, {v1, w23, -1}, {v12, w3, -1}, {v12, w2, 1}, {v23, w3, -1}, {v23, w2, 1}}));
  auto at = [](unsigned v, unsigned w) { return static_cast<VertexIndex>(3 * v + w); };
  ChainElement expect(1, {{{at(0, 1), at(1, 1)}, 1},
                          {{at(0, 1), at(0, 2)}, -1},
                          {{at(0, 2), at(1, 2)}, -1},
                          {{at(1, 1), at(2, 1)}, 1},
                          {{at(2, 1), at(2, 2)}, 1},
                          {{at(1, 2), at(2, 2)}, -1}});
  EXPECT_EQ(ez_map(tensor_boundary(g1), ctx), expect);
  EXPECT_EQ(boundary(ez_map(g1, ctx)), expect);
  EXPECT_TRUE(in_inf(ez_map(g1, ctx), product_boxtimes(h, h2)));
  EXPECT_NO_THROW(restricted_chainmap_check(h, h2));
}

TEST(TensorInf, TensorOfInfsEqualsInfOfTensor) {
  EXPECT_NO_THROW(inf_tensor_basis(tensor_left(), tensor_right(), true));
  for (const auto& [h, h2] : random_pairs(30, 7)) EXPECT_NO_THROW(inf_tensor_basis(h, h2, true));
}

TEST(ChainMaps, RestrictedToInfOnRandomPairs) {
  for (const auto& [h, h2] : random_pairs(30, 11)) {
    auto r = restricted_chainmap_check(h, h2);
    EXPECT_EQ(r.tensor_basis, [&] {
      std::size_t n = 0;
      auto ti = inf_tensor_basis(h, h2);
      for (const auto& b : ti.basis.basis) n += b.cols();
      return n;
    }());
  }
}

TEST(Boxtimes, PathUnderFaceTimesEdgeHasSixteenHyperedges) {
  auto h = H({{"v0"}, {"v0", "v1"}, {"v1", "v2"}, {"v0", "v1", "v2"}});
  auto h2 = H({{"w0"}, {"w1"}, {"w0", "w1"}});
  auto p = product_boxtimes(h, h2);
  EXPECT_EQ(p.edge_count(), 16u);
  std::set<std::vector<std::string>> expect;
  for (const auto& s : h.all_edges())
    for (const auto& t : h2.all_edges())
      for (const auto& path : oracle::paths(dimension(s), dimension(t))) {
        std::size_t i = 0, j = 0;
        std::vector<std::string> tokens{h.vertex_tokens()[s[0]] + "|" + h2.vertex_tokens()[t[0]]};
        for (bool r : path.right) {
          r ? ++i : ++j;
          tokens.push_back(h.vertex_tokens()[s[i]] + "|" + h2.vertex_tokens()[t[j]]);
        }
        expect.insert(tokens);
      }
  EXPECT_EQ(oracle::token_sets(p), expect);
  EXPECT_TRUE(expect.count({"v1|w1", "v2|w1"}));
  auto q = Coefficients::rationals();
  EXPECT_TRUE(kunneth_check(h, h2, q).passed());
}

TEST(Kunneth, ProjectivePlaneSquaredOverIntegers) {
  auto rp = real_projective_plane();
  auto r = kunneth_check(rp, rp);
  ASSERT_TRUE(r.passed());
  ASSERT_GE(r.rows.size(), 4u);
  EXPECT_EQ(r.rows[3].tor_part, FGAbelianGroup::cyclic(2));
  EXPECT_EQ(r.rows[3].product, FGAbelianGroup::cyclic(2));
  EXPECT_EQ(r.rows[1].product, FGAbelianGroup(0, {2, 2}));
  EXPECT_EQ(r.rows[2].product, FGAbelianGroup::cyclic(2));
  auto text = render_kunneth_text(r);
  EXPECT_NE(text.find("result: pass"), std::string::npos);
}

TEST(Kunneth, ProjectivePlaneTimesCircleMatchesClassical) {
  auto rp = real_projective_plane();
  auto circle = associated_complex(H({{"a", "b"}, {"b", "c"}, {"a", "c"}}));
  auto r = kunneth_check(rp, circle);
  EXPECT_TRUE(r.passed());
  auto classical = oracle::classical_homology(product_complex(rp, circle));
  for (std::size_t n = 0; n < classical.size(); ++n) EXPECT_EQ(r.rows.at(n).product, classical[n]);
}

TEST(Kunneth, PointIsUnit) {
  auto point = H({{"p"}});
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto h = random_hypergraph(5, 2, 0.4, s);
    auto r = kunneth_check(point, h);
    EXPECT_TRUE(r.passed());
    auto own = embedded_homology(h).groups;
    for (std::size_t n = 0; n < own.size(); ++n) EXPECT_EQ(r.product.at(static_cast<int>(n)), own[n]);
  }
}

TEST(Kunneth, RandomPairsOverEveryRing) {
  for (const auto& [h, h2] : random_pairs(20, 3))
    for (auto c : {Coefficients::integers(), Coefficients::rationals(), Coefficients::prime_field(2)})
      EXPECT_TRUE(kunneth_check(h, h2, c, {true}).passed());
}

TEST(FieldKunneth, BettiConvolution) {
  EXPECT_EQ(betti_convolution({1, 1}, {1, 1}, 4), (std::vector<std::size_t>{1, 2, 1, 0}));
  auto rp = real_projective_plane();
  auto r = field_kunneth_check(rp, rp, Coefficients::prime_field(2));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(std::vector<std::size_t>(r.product.begin(), r.product.begin() + 5), (std::vector<std::size_t>{1, 2, 3, 2, 1}));
  for (const auto& [h, h2] : random_pairs(15, 5))
    EXPECT_TRUE(field_kunneth_check(h, h2, Coefficients::rationals()).passed());
  EXPECT_THROW(field_kunneth_check(rp, rp, Coefficients::integers()), UsageError);
}

TEST(Rendering, ChainsAndTensors) {
  std::vector<std::string> tokens{"0|0", "0|1", "1|0", "1|1"};
  EXPECT_EQ(render_chain(tokens, ChainElement(2, {{{0, 2, 3}, 1}, {{0, 1, 3}, -1}})),
            "-{(0,0),(0,1),(1,1)} + {(0,0),(1,0),(1,1)}");
  EXPECT_EQ(render_chain(tokens, ChainElement(1)), "0");
  std::vector<std::string> plain{"a", "b"};
  EXPECT_EQ(render_tensor(plain, plain, T(1, {{{0}, {0, 1}, 2}})), "2*{a}(x){a,b}");
}
