#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hyperkunneth;
using oracle::Dense;

namespace {

SparseIntMatrix M(const Dense& d) { return SparseIntMatrix::from_rows(d); }

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

Dense product(const Dense& a, const Dense& b) {
  Dense out(a.size(), std::vector<Integer>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST(SmithNormalForm, Identity) {
  auto r = smith_normal_form(SparseIntMatrix::identity(3));
  EXPECT_EQ(r.d, ints({1, 1, 1}));
  EXPECT_EQ(r.rank, 3u);
}

TEST(SmithNormalForm, TwoByTwo) {
  // gcd of the entries is 2 and |det| = 8.
  auto a = M({{2, 4}, {6, 8}});
  EXPECT_EQ(smith_normal_form(a).d, ints({2, 4}));
  EXPECT_EQ(invariant_factors(a), ints({2, 4}));
  EXPECT_EQ(abs_value(determinant(a)), 8);
}

TEST(SmithNormalForm, ZeroMatrix) {
  EXPECT_TRUE(smith_normal_form(SparseIntMatrix(3, 2)).d.empty());
  EXPECT_TRUE(invariant_factors(SparseIntMatrix(3, 2)).empty());
  EXPECT_TRUE(smith_normal_form(SparseIntMatrix(0, 0)).d.empty());
}

TEST(SmithNormalForm, TransformsOnRandomMatrices) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto rows = static_cast<std::size_t>(rng.between(1, 6));
    auto cols = static_cast<std::size_t>(rng.between(1, 6));
    auto a = oracle::random_matrix(rng, rows, cols, -9, 9);
    auto r = smith_normal_form(a);
    for (std::size_t i = 0; i + 1 < r.d.size(); ++i) EXPECT_EQ(r.d[i + 1] % r.d[i], 0);
    EXPECT_EQ(product(product(r.left.to_dense(), a.to_dense()), r.right.to_dense()),
              oracle::diagonal(rows, cols, r.d));
    EXPECT_EQ(abs_value(determinant(r.left)), 1);
    EXPECT_EQ(abs_value(determinant(r.right)), 1);
    EXPECT_EQ(r.d, invariant_factors(a));
    EXPECT_EQ(r.rank, oracle::rational_rank(a.to_dense()));
  }
}

TEST(Hermite, CanonicalUnderUnimodularChange) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_matrix(rng, 4, 3, -5, 5);
    // Column operations: swap, negate, add a multiple.
    auto b = a.to_dense();
    for (int step = 0; step < 6; ++step) {
      auto i = static_cast<std::size_t>(rng.between(0, 2)), j = static_cast<std::size_t>(rng.between(0, 2));
      int c = static_cast<int>(rng.between(-3, 3));
      for (auto& row : b) {
        if (i == j)
          row[i] = -row[i];
        else
          row[i] += c * row[j];
      }
    }
    EXPECT_EQ(hermite_normal_form(a), hermite_normal_form(M(b)));
  }
}

TEST(Kernel, SingleRow) {
  auto k = kernel_basis(M({{1, -1}}));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k.to_dense(), (Dense{{1}, {1}}));
}

TEST(Kernel, TriangleCycle) {
  // ∂₁ of the triangle graph: edges ab, ac, bc over vertices a, b, c.
  auto d = M({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  auto k = kernel_basis(d);
  ASSERT_EQ(k.cols(), 1u);
  auto box = oracle::kernel_box(d.to_dense(), 3, 2);
  for (const auto& x : box) EXPECT_TRUE(express_in_basis(x, k).has_value());
  EXPECT_EQ(box.size(), 5u);  // multiples -2..2 of the oriented cycle
}

TEST(Kernel, FullRankIsEmpty) { EXPECT_EQ(kernel_basis(M({{2, 1}, {1, 1}})).cols(), 0u); }

TEST(Kernel, SaturatedOnRandomMatrices) {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto rows = static_cast<std::size_t>(rng.between(1, 3));
    auto a = oracle::random_matrix(rng, rows, 4, -3, 3);
    auto k = kernel_basis(a);
    auto box = oracle::kernel_box(a.to_dense(), 4, 2);
    for (const auto& x : box) EXPECT_TRUE(express_in_basis(x, k).has_value());
    EXPECT_EQ(k.cols(), 4 - oracle::rational_rank(a.to_dense()));
    for (const auto& c : k.columns()) EXPECT_TRUE(a.apply(c).empty());
  }
}

TEST(ExpressInBasis, Cases) {
  auto basis = M({{2, 0}, {0, 3}});
  EXPECT_EQ(express_in_basis(ints({0, 0}), basis), ints({0, 0}));
  EXPECT_EQ(express_in_basis(ints({4, 3}), basis), ints({2, 1}));
  EXPECT_EQ(express_in_basis(ints({1, 0}), M({{2}, {0}})), std::nullopt);
  EXPECT_THROW(express_in_basis(ints({1, 0, 0}), basis), UsageError);
}

TEST(LatticeSum, Cases) {
  auto a = M({{2, 0}, {0, 1}});
  EXPECT_EQ(lattice_sum_basis(a, a), hermite_normal_form(a));
  EXPECT_EQ(lattice_sum_basis(M({{2}, {0}}), M({{3}, {0}})).to_dense(), (Dense{{1}, {0}}));
  EXPECT_EQ(lattice_sum_basis(SparseIntMatrix(2, 0), a), hermite_normal_form(a));
}

TEST(LatticeIntersection, Cases) {
  auto a = M({{2, 0}, {0, 1}});
  EXPECT_EQ(lattice_intersection_basis(a, a), hermite_normal_form(a));
  EXPECT_EQ(lattice_intersection_basis(M({{1}, {0}}), M({{0}, {1}})).cols(), 0u);
  EXPECT_EQ(lattice_intersection_basis(a, M({{1}, {1}})).to_dense(), (Dense{{2}, {2}}));
}

TEST(LatticeIntersection, ModularLawAgainstBoxEnumeration) {
  // Membership in span(a) ∩ span(b) is checked on every vector of a small box
  // against direct membership in both lattices.
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = oracle::random_matrix(rng, 3, static_cast<std::size_t>(rng.between(1, 3)), -3, 3);
    auto b = oracle::random_matrix(rng, 3, static_cast<std::size_t>(rng.between(1, 3)), -3, 3);
    auto ea = echelon_basis(a), eb = echelon_basis(b);
    LatticeSolver in_a(ea), in_b(eb);
    auto meet = lattice_intersection_basis(a, b);
    auto join = lattice_sum_basis(a, b);
    LatticeSolver in_meet(meet), in_join(join);
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y)
        for (int z = -4; z <= 4; ++z) {
          IntVector v = sparse_from_dense(ints({x, y, z}));
          EXPECT_EQ(in_meet.contains(v), in_a.contains(v) && in_b.contains(v));
          if (in_a.contains(v) || in_b.contains(v)) EXPECT_TRUE(in_join.contains(v));
        }
    // Modular law with c ⊆ a: a ∩ (b + c) = (a ∩ b) + c.
    SparseIntMatrix sub(3, 0);
    sub.append_column(sparse_scale(a.column(0), Integer(2)));
    EXPECT_EQ(lattice_intersection_basis(a, lattice_sum_basis(b, sub)),
              lattice_sum_basis(lattice_intersection_basis(a, b), sub));
  }
}

TEST(DivisibilityChain, MatchesPrimeRegrouping) {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Integer> f;
    int n = static_cast<int>(rng.between(1, 5));
    for (int i = 0; i < n; ++i) f.push_back(rng.between(2, 1000));
    auto chain = divisibility_chain(f);
    std::vector<Integer> trimmed;
    for (auto& x : chain)
      if (x != 1) trimmed.push_back(x);
    EXPECT_EQ(trimmed, oracle::prime_regroup(f));
  }
}
