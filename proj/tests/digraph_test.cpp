#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "hambypass/families.hpp"
#include "hambypass/io.hpp"
#include "oracles.hpp"

using namespace hambypass;

namespace {

Digraph c3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Digraph k22() { return generate({FamilyId::kstar_pq, 0, 0, 2, 2}); }

}  // namespace

TEST(BuildDigraph, TriangleHasThreeArcs) {
  const Digraph d = c3();
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d.arc_count(), 3);
  EXPECT_TRUE(d.has_arc(2, 0));
  EXPECT_FALSE(d.has_arc(0, 2));
}

TEST(BuildDigraph, SingleVertex) {
  const Digraph d(1);
  EXPECT_EQ(d.order(), 1);
  EXPECT_EQ(d.arc_count(), 0);
  EXPECT_TRUE(is_strong(d));
}

TEST(BuildDigraph, DuplicatesCollapse) {
  const Digraph d(2, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(d.arc_count(), 2);
}

TEST(BuildDigraph, RejectsLoopsAndRange) {
  EXPECT_THROW(Digraph(3, {{0, 0}}), construction_error);
  EXPECT_THROW(Digraph(3, {{0, 3}}), construction_error);
  EXPECT_THROW(Digraph(3, {{-1, 2}}), construction_error);
  EXPECT_THROW(Digraph(0), construction_error);
}

TEST(DegreeProfile, TriangleAndComplete) {
  const DegreeProfile t = degree_profile(c3());
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(t.out[v], 1);
    EXPECT_EQ(t.in[v], 1);
    EXPECT_EQ(t.total[v], 2);
  }
  const DegreeProfile k = degree_profile(complete_digraph(4));
  EXPECT_EQ(k.min_out, 3);
  EXPECT_EQ(k.min_in, 3);
  EXPECT_EQ(k.min_total, 6);
}

TEST(DegreeProfile, D7LowInDegrees) {
  const DegreeProfile p = degree_profile(generate({FamilyId::d7}));
  // x2, x4, x6 are vertices 1, 3, 5.
  EXPECT_EQ(p.in[1], 1);
  EXPECT_EQ(p.in[3], 1);
  EXPECT_EQ(p.in[5], 1);
  EXPECT_EQ(p.min_in, 1);
}

TEST(IsStrong, Basics) {
  EXPECT_TRUE(is_strong(c3()));
  EXPECT_FALSE(is_strong(Digraph(3, {{0, 1}, {1, 2}})));
  const Digraph d7 = generate({FamilyId::d7});
  EXPECT_TRUE(oracle::is_strong(d7));
  EXPECT_TRUE(is_strong(d7));
}

TEST(IsStrong, MatchesClosureAndIgnoresLabels) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    const Digraph d = oracle::random_digraph(rng, n, 0.35);
    ASSERT_EQ(is_strong(d), oracle::is_strong(d));
    const auto perm = oracle::random_permutation(rng, n);
    ASSERT_EQ(is_strong(relabel(d, perm)), is_strong(d));
  }
}

TEST(IsTwoStrong, CompleteVersusCycle) {
  EXPECT_TRUE(is_two_strong(complete_digraph(4)));
  EXPECT_FALSE(is_two_strong(directed_cycle(4)));
}

TEST(DominatedPairs, D7HasNoInDominatedPair) {
  const Digraph d7 = generate({FamilyId::d7});
  EXPECT_TRUE(dominated_nonadjacent_pairs(d7, DominationMode::in).empty());
  // x2 and x4 share the out-neighbour y.
  const auto out = dominated_nonadjacent_pairs(d7, DominationMode::out);
  ASSERT_FALSE(out.empty());
  EXPECT_EQ(out.front().x, 1);
  EXPECT_EQ(out.front().y, 3);
  EXPECT_EQ(out.front().common_out, std::vector<VertexId>{6});
}

TEST(DominatedPairs, CompleteHasNone) {
  for (auto mode : {DominationMode::in, DominationMode::out, DominationMode::either}) {
    EXPECT_TRUE(dominated_nonadjacent_pairs(complete_digraph(4), mode).empty());
  }
}

TEST(DominatedPairs, CompleteBipartiteSameSidePairs) {
  const auto pairs = dominated_nonadjacent_pairs(k22(), DominationMode::in);
  ASSERT_EQ(pairs.size(), 2U);
  EXPECT_EQ(pairs[0].x, 0);
  EXPECT_EQ(pairs[0].y, 1);
  EXPECT_EQ(pairs[0].common_in, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(pairs[1].x, 2);
  EXPECT_EQ(pairs[1].y, 3);
  EXPECT_EQ(pairs[1].adjacency_count, 0);
}

TEST(DominatedPairs, EitherIsUnionOfInAndOut) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 2 + trial % 7, 0.4);
    const auto in = dominated_nonadjacent_pairs(d, DominationMode::in);
    const auto out = dominated_nonadjacent_pairs(d, DominationMode::out);
    const auto either = dominated_nonadjacent_pairs(d, DominationMode::either);
    std::set<std::pair<int, int>> expected, got;
    for (const auto& p : in) expected.insert({p.x, p.y});
    for (const auto& p : out) expected.insert({p.x, p.y});
    for (const auto& p : either) {
      got.insert({p.x, p.y});
      ASSERT_LT(p.x, p.y);
      ASSERT_EQ(d.arcs_between(p.x, p.y), p.adjacency_count);
      for (VertexId z : p.common_in) ASSERT_TRUE(d.has_arc(z, p.x) && d.has_arc(z, p.y));
      for (VertexId z : p.common_out) ASSERT_TRUE(d.has_arc(p.x, z) && d.has_arc(p.y, z));
    }
    ASSERT_EQ(got, expected);
  }
}

TEST(Reverse, TriangleAndComplete) {
  const Digraph r = reverse(c3());
  EXPECT_TRUE(r.has_arc(1, 0));
  EXPECT_TRUE(r.has_arc(2, 1));
  EXPECT_TRUE(r.has_arc(0, 2));
  EXPECT_EQ(r.arc_count(), 3);
  EXPECT_EQ(reverse(complete_digraph(4)), complete_digraph(4));
}

TEST(Reverse, InvolutionSwapsSemiDegrees) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 1 + trial % 8, 0.3);
    const Digraph r = reverse(d);
    ASSERT_EQ(reverse(r), d);
    for (int v = 0; v < d.order(); ++v) {
      ASSERT_EQ(r.out_degree(v), d.in_degree(v));
      ASSERT_EQ(r.in_degree(v), d.out_degree(v));
      ASSERT_EQ(r.degree(v), d.degree(v));
    }
  }
}

TEST(Degrees, ArcCountEqualsDegreeSums) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 1 + trial % 9, 0.5);
    const DegreeProfile p = degree_profile(d);
    int out = 0, in = 0;
    for (int v = 0; v < d.order(); ++v) {
      out += p.out[v];
      in += p.in[v];
      ASSERT_EQ(p.total[v], p.out[v] + p.in[v]);
    }
    ASSERT_EQ(out, d.arc_count());
    ASSERT_EQ(in, d.arc_count());
  }
}

TEST(PairMask, EnumerationOrderIsLexicographicPairs) {
  // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,0), ...
  const Digraph d = Digraph::from_pair_mask(3, 0b000101);
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {1, 0}}));
}

TEST(TextFormat, WritesSortedArcs) {
  const Digraph d(3, {{2, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(to_text(d), "n 3\n0 1\n1 2\n2 0\n");
}

TEST(TextFormat, ReadsCommentsAndBlankLines) {
  const Digraph d = parse_digraph("# triangle\nn 3\n\n0 1\n# arc\n1 2\n2 0\n");
  EXPECT_EQ(d, c3());
}

TEST(TextFormat, ErrorsCarryLineNumbers) {
  try {
    parse_digraph("n 3\n0 1\n1 1\n");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    parse_digraph("n 3\n0 x\n");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_digraph("0 1\n"), parse_error);
  EXPECT_THROW(parse_digraph("n 2\n0 5\n"), parse_error);
  EXPECT_THROW(parse_digraph(""), parse_error);
}

TEST(TextFormat, RoundTripThroughTextAndJson) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 1 + trial % 10, 0.4);
    ASSERT_EQ(parse_digraph(to_text(d)), d);
    ASSERT_EQ(digraph_from_json(to_json(d)), d);
  }
}

TEST(InducedSubdigraph, KeepsArcsAmongChosenVertices) {
  const Digraph k = complete_digraph(5);
  const std::vector<VertexId> keep{1, 3, 4};
  EXPECT_EQ(induced_subdigraph(k, keep), complete_digraph(3));
}
