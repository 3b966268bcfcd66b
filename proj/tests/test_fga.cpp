#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hyperkunneth;

namespace {

FGAbelianGroup G(std::size_t rank, std::initializer_list<int> torsion) {
  return FGAbelianGroup(rank, std::vector<Integer>(torsion.begin(), torsion.end()));
}

FGAbelianGroup random_group(Rng& rng) {
  std::vector<Integer> t;
  int n = static_cast<int>(rng.between(0, 2));
  for (int i = 0; i < n; ++i) t.push_back(rng.between(2, 12));
  return FGAbelianGroup(static_cast<std::size_t>(rng.between(0, 2)), t);
}

}  // namespace

TEST(FromPresentation, Cases) {
  EXPECT_EQ(from_presentation(SparseIntMatrix(2, 0), 2), FGAbelianGroup::free(2));
  EXPECT_EQ(from_presentation(SparseIntMatrix::from_rows({{2}}), 1), FGAbelianGroup::cyclic(2));
  auto g = from_presentation(SparseIntMatrix::from_rows({{2, 0}, {0, 4}}), 2);
  EXPECT_EQ(g, G(0, {2, 4}));
  auto census = oracle::order_census(g.torsion());
  unsigned long total = 0;
  for (auto [order, count] : census) total += count;
  EXPECT_EQ(total, 8u);
  EXPECT_EQ(from_presentation(SparseIntMatrix::from_rows({{-1}}), 1), FGAbelianGroup());
  EXPECT_THROW(from_presentation(SparseIntMatrix(2, 1), 3), UsageError);
}

TEST(Tensor, Cases) {
  auto g = G(1, {6});
  EXPECT_EQ(tensor(FGAbelianGroup::free(1), g), g);
  EXPECT_EQ(tensor(G(0, {2}), G(0, {4})), G(0, {2}));
  EXPECT_EQ(tensor(G(0, {2}), G(0, {4})), oracle::tensor_by_presentation(G(0, {2}), G(0, {4})));
  EXPECT_EQ(tensor(G(0, {2}), G(0, {3})), FGAbelianGroup());
  EXPECT_EQ(oracle::tensor_by_presentation(G(0, {2}), G(0, {3})), FGAbelianGroup());
}

TEST(Tensor, MatchesPresentationOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_group(rng), b = random_group(rng);
    EXPECT_EQ(tensor(a, b), oracle::tensor_by_presentation(a, b)) << a.to_string() << " (x) " << b.to_string();
  }
}

TEST(Tor, Cases) {
  EXPECT_EQ(tor(FGAbelianGroup::free(3), G(1, {2, 4})), FGAbelianGroup());
  EXPECT_EQ(tor(G(0, {2}), G(0, {2})), G(0, {2}));
  EXPECT_EQ(oracle::annihilated(2, 2), 2u);
  EXPECT_EQ(tor(G(0, {4}), G(0, {6})), G(0, {2}));
  EXPECT_EQ(oracle::annihilated(4, 6), 2u);
}

TEST(Tor, CyclicOrdersMatchAnnihilatorCount) {
  for (unsigned long a = 2; a <= 30; ++a)
    for (unsigned long b = 2; b <= 30; ++b) {
      auto t = tor(FGAbelianGroup::cyclic(a), FGAbelianGroup::cyclic(b));
      unsigned long order = 1;
      for (const auto& x : t.torsion()) order *= static_cast<unsigned long>(x);
      EXPECT_EQ(order, oracle::annihilated(a, b));
      EXPECT_LE(t.torsion().size(), 1u);  // a subgroup of a cyclic group is cyclic
    }
}

TEST(DirectSum, Cases) {
  EXPECT_EQ(direct_sum(std::span<const FGAbelianGroup>()), FGAbelianGroup());
  EXPECT_EQ(direct_sum(G(0, {2}), G(0, {2})), G(0, {2, 2}));
  auto six = direct_sum(G(0, {2}), G(0, {3}));
  EXPECT_EQ(six, G(0, {6}));
  EXPECT_EQ(oracle::order_census(six.torsion()), oracle::order_census({2, 3}));
}

TEST(DirectSum, CensusAgreesWithFactorList) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> f;
    int n = static_cast<int>(rng.between(1, 3));
    for (int i = 0; i < n; ++i) f.push_back(rng.between(2, 12));
    FGAbelianGroup g(0, f);
    EXPECT_EQ(oracle::order_census(g.torsion()), oracle::order_census(f));
  }
}

TEST(Algebra, CommutativityAssociativityDistributivity) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = random_group(rng), b = random_group(rng), c = random_group(rng);
    EXPECT_EQ(tensor(a, b), tensor(b, a));
    EXPECT_EQ(direct_sum(a, b), direct_sum(b, a));
    EXPECT_EQ(tor(a, b), tor(b, a));
    EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
    EXPECT_EQ(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c)));
    EXPECT_EQ(tensor(a, direct_sum(b, c)), direct_sum(tensor(a, b), tensor(a, c)));
    EXPECT_EQ(tor(a, direct_sum(b, c)), direct_sum(tor(a, b), tor(a, c)));
  }
}

TEST(Canonical, IdempotentAndDropsUnits) {
  auto g = G(1, {1, 4, 6, 1});
  EXPECT_EQ(g, G(1, {2, 12}));
  EXPECT_EQ(FGAbelianGroup(g.rank(), g.torsion()), g);
  EXPECT_EQ(G(0, {0, 3}), G(1, {3}));
  EXPECT_EQ(g.to_string(), "Z + Z/2 + Z/12");
  EXPECT_EQ(FGAbelianGroup().to_string(), "0");
  EXPECT_EQ(FGAbelianGroup::free(3).to_string("Q"), "Q^3");
}
