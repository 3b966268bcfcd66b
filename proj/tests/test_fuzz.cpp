#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hyperkunneth;

TEST(Fuzz, InstancesAreReproducible) {
  FuzzConfig cfg;
  cfg.seed = 42;
  cfg.projective_fraction = 0.3;
  for (std::size_t i = 0; i < 20; ++i) {
    auto a = fuzz_instance(cfg, i), b = fuzz_instance(cfg, i);
    EXPECT_EQ(a.left, b.left);
    EXPECT_EQ(a.right, b.right);
  }
  FuzzConfig other = cfg;
  other.seed = 43;
  bool differs = false;
  for (std::size_t i = 0; i < 20; ++i) differs = differs || !(fuzz_instance(cfg, i).left == fuzz_instance(other, i).left);
  EXPECT_TRUE(differs);
}

TEST(Fuzz, ReportDoesNotDependOnThreads) {
  FuzzConfig cfg;
  cfg.count = 12;
  cfg.max_vertices = 4;
  cfg.threads = 1;
  auto one = run_fuzz(cfg);
  cfg.threads = 3;
  auto three = run_fuzz(cfg);
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(one.passes, three.passes);
  EXPECT_EQ(render_fuzz_text(one), render_fuzz_text(three));
  for (auto p : one.passes) EXPECT_EQ(p, 12u);
}

TEST(Fuzz, EmptyRun) {
  FuzzConfig cfg;
  cfg.count = 0;
  auto r = run_fuzz(cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.passes.size(), fuzz_check_names().size());
  EXPECT_NE(render_fuzz_text(r).find("failures: 0"), std::string::npos);
  EXPECT_EQ(fuzz_json(r)["failures"].size(), 0u);
}

TEST(Fuzz, UnknownCheckIsUsageError) {
  auto h = Hypergraph::from_token_edges({{"a"}});
  EXPECT_THROW(detail::run_check("nope", h, h), UsageError);
}

TEST(Shrink, ReachesMinimalPair) {
  auto h = Hypergraph::from_token_edges({{"a"}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}});
  auto h2 = Hypergraph::from_token_edges({{"x"}, {"y"}, {"x", "y"}});
  auto needs_ab = [](const Hypergraph& l, const Hypergraph&) {
    return oracle::token_sets(l).count({"a", "b"}) > 0;
  };
  auto [sh, sh2] = shrink_pair(h, h2, needs_ab);
  EXPECT_EQ(oracle::token_sets(sh), (std::set<std::vector<std::string>>{{"a", "b"}}));
  EXPECT_EQ(sh2.edge_count(), 1u);
}

TEST(Shrink, PassingCheckLeavesPairAlone) {
  auto h = Hypergraph::from_token_edges({{"a"}, {"a", "b"}, {"b", "c"}});
  auto h2 = Hypergraph::from_token_edges({{"x"}});
  auto [sh, sh2] = shrink_failure("inf-sup", h, h2);
  EXPECT_EQ(sh, h);
  EXPECT_EQ(sh2, h2);
}

TEST(Shrink, WithoutEdge) {
  auto h = Hypergraph::from_token_edges({{"a"}, {"a", "b"}});
  auto smaller = detail::without_edge(h, 1);
  ASSERT_TRUE(smaller.has_value());
  EXPECT_EQ(smaller->edge_count(), 1u);
  EXPECT_FALSE(detail::without_edge(*smaller, 0).has_value());
}
