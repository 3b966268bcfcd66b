#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace hyperkunneth;

TEST(TextFormat, CommentsBlankLinesAndTabs) {
  auto h = parse_hypergraph("# a comment\n\n  a\tb  # trailing\nb c\n\na\n");
  EXPECT_EQ(oracle::token_sets(h), (std::set<std::vector<std::string>>{{"a"}, {"a", "b"}, {"b", "c"}}));
}

TEST(TextFormat, Errors) {
  EXPECT_THROW(parse_hypergraph("a b\n{}\n"), FormatError);
  EXPECT_THROW(parse_hypergraph("a b\n[]\n"), FormatError);
  EXPECT_THROW(parse_hypergraph("# nothing\n\n"), ValidationError);
  EXPECT_THROW(parse_hypergraph("x x\n"), ValidationError);
  EXPECT_THROW(parse_hypergraph("a|\n"), FormatError);
  EXPECT_THROW(parse_hypergraph("|b\n"), FormatError);
  EXPECT_THROW(parse_hypergraph("a|b c\n"), ValidationError);
}

TEST(TextFormat, PipeTokensOrderByComponents) {
  // Whole-string order would put "a-|b" first since '-' sorts before '|'.
  auto h = parse_hypergraph("a-|b a|z\n");
  EXPECT_EQ(h.vertex_tokens(), (std::vector<std::string>{"a|z", "a-|b"}));
}

TEST(JsonFormat, EdgesAndVertices) {
  auto h = parse_hypergraph(R"({"vertices": ["a", "b", "c"], "edges": [["a","b","c"], ["a"]]})");
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.dimension(), 2);
  EXPECT_EQ(parse_hypergraph(R"({"edges": [["b","a"]]})").vertex_tokens(), (std::vector<std::string>{"a", "b"}));
}

TEST(JsonFormat, Errors) {
  EXPECT_THROW(parse_hypergraph("{"), FormatError);
  EXPECT_THROW(parse_hypergraph(R"({"vertices": []})"), FormatError);
  EXPECT_THROW(parse_hypergraph(R"({"edges": [[]]})"), FormatError);
  EXPECT_THROW(parse_hypergraph(R"({"edges": [[1, 2]]})"), FormatError);
  EXPECT_THROW(parse_hypergraph(R"({"edges": []})"), ValidationError);
  EXPECT_THROW(parse_hypergraph(R"({"vertices": ["a"], "edges": [["a","b"]]})"), ValidationError);
  EXPECT_THROW(parse_hypergraph(R"({"vertices": ["a","b","z"], "edges": [["a","b"]]})"), ValidationError);
  EXPECT_THROW(parse_hypergraph(R"({"edges": [["a","a"]]})"), ValidationError);
}

TEST(RoundTrip, TextAndJsonOnRandomHypergraphs) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto h = random_hypergraph(6, 3, 0.3, s);
    EXPECT_EQ(parse_hypergraph(write_text(h)), h);
    EXPECT_EQ(parse_hypergraph(write_json(h)), h);
    EXPECT_EQ(write_text(parse_hypergraph(write_text(h))), write_text(h));
  }
}

TEST(RoundTrip, ProductOutputReparses) {
  auto h = random_hypergraph(4, 2, 0.5, 3);
  auto h2 = random_hypergraph(3, 2, 0.5, 4);
  auto p = product_boxtimes(h, h2);
  EXPECT_EQ(parse_hypergraph(write_text(p)), p);
  EXPECT_EQ(parse_hypergraph(write_json(p)), p);
  auto k = associated_complex(p);
  EXPECT_EQ(Hypergraph(parse_hypergraph(write_text(k))), Hypergraph(k));
}

TEST(Files, ReadAndMissing) {
  const std::string path = ::testing::TempDir() + "hk_io_test.txt";
  {
    std::ofstream f(path);
    f << "u v\nv w\n";
  }
  EXPECT_EQ(read_hypergraph_file(path).edge_count(), 2u);
  std::remove(path.c_str());
  EXPECT_THROW(read_hypergraph_file(path), UsageError);
}
