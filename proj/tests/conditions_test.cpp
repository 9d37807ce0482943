#include <random>

#include <gtest/gtest.h>

#include "hambypass/conditions.hpp"
#include "hambypass/families.hpp"
#include "oracles.hpp"

using namespace hambypass;

namespace {

// Degree bookkeeping straight from has_arc.
struct Degrees {
  explicit Degrees(const Digraph& d) : n(d.order()), out(n, 0), in(n, 0) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (d.has_arc(u, v)) {
          ++out[u];
          ++in[v];
        }
      }
    }
  }
  int tot(int v) const { return out[v] + in[v]; }
  int n;
  std::vector<int> out, in;
};

bool non_adjacent(const Digraph& d, int x, int y) { return !d.has_arc(x, y) && !d.has_arc(y, x); }

bool common_in(const Digraph& d, int x, int y) {
  for (int z = 0; z < d.order(); ++z) {
    if (d.has_arc(z, x) && d.has_arc(z, y)) return true;
  }
  return false;
}

bool common_out(const Digraph& d, int x, int y) {
  for (int z = 0; z < d.order(); ++z) {
    if (d.has_arc(x, z) && d.has_arc(y, z)) return true;
  }
  return false;
}

bool oracle_meyniel(const Digraph& d, int slack) {
  const Degrees g(d);
  for (int x = 0; x < g.n; ++x) {
    for (int y = x + 1; y < g.n; ++y) {
      if (non_adjacent(d, x, y) && g.tot(x) + g.tot(y) < 2 * g.n - 1 - slack) return false;
    }
  }
  return true;
}

bool oracle_star(const Digraph& d) {
  const Degrees g(d);
  for (int x = 0; x < g.n; ++x) {
    for (int y = x + 1; y < g.n; ++y) {
      if (!non_adjacent(d, x, y) || !common_in(d, x, y)) continue;
      if (std::min(g.tot(x), g.tot(y)) < g.n - 1 || g.tot(x) + g.tot(y) < 2 * g.n - 1) return false;
    }
  }
  return true;
}

bool oracle_cross(const Digraph& d, bool with_sum) {
  const Degrees g(d);
  for (int x = 0; x < g.n; ++x) {
    for (int y = x + 1; y < g.n; ++y) {
      if (!non_adjacent(d, x, y) || (!common_in(d, x, y) && !common_out(d, x, y))) continue;
      const int cross = std::min(g.out[x] + g.in[y], g.in[x] + g.out[y]);
      if (with_sum) {
        if (g.tot(x) + g.tot(y) < 2 * g.n - 1 || cross < g.n - 1) return false;
      } else if (cross < g.n) {
        return false;
      }
    }
  }
  return true;
}

bool oracle_woodall(const Digraph& d) {
  const Degrees g(d);
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y) {
      if (x != y && !d.has_arc(x, y) && g.out[x] + g.in[y] < g.n) return false;
    }
  }
  return true;
}

bool oracle_nash_williams(const Digraph& d) {
  const Degrees g(d);
  for (int v = 0; v < g.n; ++v) {
    if (2 * g.out[v] < g.n || 2 * g.in[v] < g.n) return false;
  }
  return true;
}

}  // namespace

TEST(ConditionTokens, RoundTrip) {
  for (const char* t : {"nash-williams", "ghouila-houri", "woodall", "meyniel", "meyniel-minus-one", "thm5",
                        "bgl-star", "thm12-hypothesis", "thm13", "thm14", "oriented", "strong", "min-semi:2",
                        "min-out:3", "min-in:0"}) {
    EXPECT_EQ(to_token(parse_condition(t)), t);
  }
  EXPECT_EQ(parse_condition("min-in:2"), (ConditionId{ConditionKind::min_in, 2}));
}

TEST(ConditionTokens, Rejects) {
  EXPECT_THROW(parse_condition("meyniell"), usage_error);
  EXPECT_THROW(parse_condition("min-semi"), usage_error);
  EXPECT_THROW(parse_condition("min-semi:x"), usage_error);
  EXPECT_THROW(parse_condition("min-out:-1"), usage_error);
}

TEST(ConditionTokens, List) {
  const auto cs = parse_condition_list("strong,min-out:2");
  ASSERT_EQ(cs.size(), 2U);
  EXPECT_EQ(cs[1], (ConditionId{ConditionKind::min_out, 2}));
}

TEST(Meyniel, TriangleHoldsVacuously) {
  const auto r = check_condition(directed_cycle(3), {ConditionKind::meyniel});
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Meyniel, FourCycleFailsOnFirstNonAdjacentPair) {
  const auto r = check_condition(directed_cycle(4), {ConditionKind::meyniel});
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness->x, 0);
  EXPECT_EQ(r.witness->y, 2);
  EXPECT_EQ(r.witness->lhs, 4);
  EXPECT_EQ(r.witness->rhs, 7);
  EXPECT_EQ(format_report(r), "condition=meyniel holds=false witness=0,2 inequality=d(x)+d(y)>=2n-1 lhs=4 rhs=7");
}

TEST(NashWilliams, CompleteHoldsCycleFails) {
  EXPECT_TRUE(holds(complete_digraph(5), {ConditionKind::nash_williams}));
  const auto r = check_condition(directed_cycle(4), {ConditionKind::nash_williams});
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness->inequality, Inequality::out_half);
  EXPECT_EQ(r.witness->lhs, 2);
  EXPECT_EQ(r.witness->rhs, 4);
}

TEST(BglStar, CompleteBipartiteBalanced) {
  // Same-side pairs have degree n each: min >= n-1 and sum 2n >= 2n-1.
  EXPECT_TRUE(holds(generate({FamilyId::kstar_pq, 0, 0, 3, 3}), {ConditionKind::bgl_star}));
  // Unbalanced: the larger side has degree 2p < n-1.
  EXPECT_FALSE(holds(generate({FamilyId::kstar_pq, 0, 0, 2, 4}), {ConditionKind::bgl_star}));
}

TEST(BglStar, IgnoresPairsWithOnlyCommonOutNeighbour) {
  // 0 and 1 share the out-neighbour 2 but no in-neighbour.
  const Digraph d(3, {{0, 2}, {1, 2}, {2, 0}});
  EXPECT_TRUE(holds(d, {ConditionKind::bgl_star}));
  EXPECT_FALSE(holds(d, {ConditionKind::thm13}));
}

TEST(InDegreeHypothesis, ReportsFirstFailingPart) {
  const auto r = check_condition(directed_cycle(5), {ConditionKind::thm12_hypothesis});
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness->inequality, Inequality::min_out_k);
  EXPECT_EQ(r.witness->k, 2);
  EXPECT_TRUE(holds(complete_digraph(4), {ConditionKind::thm12_hypothesis}));
}

TEST(Strong, WitnessNamesUnreachableVertex) {
  const auto r = check_condition(Digraph(3, {{0, 1}, {1, 2}}), {ConditionKind::strong});
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness->inequality, Inequality::reachable);
  EXPECT_EQ(r.witness->x, 1);
  EXPECT_EQ(r.witness->y, 0);
}

TEST(Oriented, DetectsTwoCycle) {
  EXPECT_TRUE(holds(generate({FamilyId::t5}), {ConditionKind::oriented}));
  EXPECT_FALSE(holds(complete_digraph(3), {ConditionKind::oriented}));
}

TEST(Conditions, AgreeWithDirectArithmetic) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 2 + trial % 7, 0.35 + 0.1 * (trial % 6));
    ASSERT_EQ(holds(d, {ConditionKind::meyniel}), oracle_meyniel(d, 0));
    ASSERT_EQ(holds(d, {ConditionKind::meyniel_minus_one}), oracle_meyniel(d, 1));
    ASSERT_EQ(holds(d, {ConditionKind::bgl_star}), oracle_star(d));
    ASSERT_EQ(holds(d, {ConditionKind::thm13}), oracle_cross(d, false));
    ASSERT_EQ(holds(d, {ConditionKind::thm14}), oracle_cross(d, true));
    ASSERT_EQ(holds(d, {ConditionKind::woodall}), oracle_woodall(d));
    ASSERT_EQ(holds(d, {ConditionKind::nash_williams}), oracle_nash_williams(d));
    ASSERT_EQ(holds(d, {ConditionKind::strong}), oracle::is_strong(d));
  }
}

TEST(Conditions, WitnessesReallyFailAndSurviveRelabelling) {
  std::mt19937_64 rng(37);
  const std::vector<ConditionId> all{
      {ConditionKind::nash_williams}, {ConditionKind::ghouila_houri}, {ConditionKind::woodall},
      {ConditionKind::meyniel},       {ConditionKind::meyniel_minus_one}, {ConditionKind::thm5},
      {ConditionKind::bgl_star},      {ConditionKind::thm12_hypothesis},  {ConditionKind::thm13},
      {ConditionKind::thm14},         {ConditionKind::min_semi, 2},       {ConditionKind::min_out, 2},
      {ConditionKind::min_in, 3},     {ConditionKind::oriented},          {ConditionKind::strong}};
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 7;
    const Digraph d = oracle::random_digraph(rng, n, 0.6);
    const Digraph r = relabel(d, oracle::random_permutation(rng, n));
    for (ConditionId c : all) {
      const auto rep = check_condition(d, c);
      ASSERT_EQ(rep.holds, holds(r, c)) << to_token(c);
      if (!rep.holds) ASSERT_TRUE(witness_fails(d, *rep.witness)) << to_token(c);
    }
  }
}

TEST(Conditions, ImplicationsBetweenConditions) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const Digraph d = oracle::random_digraph(rng, 2 + trial % 6, 0.5 + 0.08 * (trial % 6));
    // Ghouila-Houri forces every degree sum to be at least 2n.
    if (holds(d, {ConditionKind::ghouila_houri})) ASSERT_TRUE(holds(d, {ConditionKind::meyniel}));
    if (holds(d, {ConditionKind::meyniel})) {
      ASSERT_TRUE(holds(d, {ConditionKind::meyniel_minus_one}));
    }
    if (holds(d, {ConditionKind::nash_williams})) ASSERT_TRUE(holds(d, {ConditionKind::ghouila_houri}));
  }
}
