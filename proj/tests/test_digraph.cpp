#include <gtest/gtest.h>

#include <random>

#include "posr/cayley.hpp"
#include "posr/named_groups.hpp"
#include "posr/refine.hpp"
#include "test_support.hpp"

using namespace posr;
using posr::testing::random_digraph;
using posr::testing::random_sets;

namespace {

Digraph cycle3() { return {3, {{0, 1}, {1, 2}, {2, 0}}}; }

ConnectionSets cyclic7_sets(const GroupTable& g) {
  auto w = WordSets::empty(2);
  w.cells[0][1] = {"1", "x", "x^2"};
  w.cells[1][0] = {"x", "x^3", "x^4"};
  return resolve(g, w);
}

}  // namespace

TEST(Digraph, MirrorsAdjacency) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    const auto d = random_digraph(8, 0.3, rng, true);
    for (Vertex u = 0; u < 8; ++u) {
      for (auto v : d.out_neighbors(u)) {
        const auto in = d.in_neighbors(v);
        EXPECT_TRUE(std::binary_search(in.begin(), in.end(), u));
      }
      EXPECT_TRUE(std::is_sorted(d.in_neighbors(u).begin(), d.in_neighbors(u).end()));
    }
  }
}

TEST(Digraph, RejectsDuplicatesAndRange) {
  EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), Error);
  EXPECT_THROW(Digraph(2, {{0, 2}}), Error);
  const Digraph loop(2, {{1, 1}});
  EXPECT_TRUE(loop.has_loops());
  EXPECT_FALSE(loop.is_oriented());
}

TEST(Digraph, EdgelistFormat) {
  EXPECT_EQ(to_edgelist(cycle3()), "n 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(to_edgelist(Digraph(2, {})), "n 2\n");
  const auto d = parse_edgelist("# comment\nn 3\n2 0\n0 1\n1 2\n");
  EXPECT_EQ(d, cycle3());
  EXPECT_THROW(parse_edgelist("3 1\n"), Error);
  EXPECT_THROW(parse_edgelist("n 3\n0\n"), Error);
  EXPECT_NE(to_dot(cycle3()).find("0 -> 1;"), std::string::npos);
}

TEST(Cayley, Cyclic7ArcCount) {
  const auto g = named_group(GroupSpec::cyclic(7));
  const auto pd = build_cayley(g, cyclic7_sets(g));
  EXPECT_EQ(pd.digraph.num_vertices(), 14U);
  EXPECT_EQ(pd.digraph.num_arcs(), 42U);
  const auto r = validate_sets(g, cyclic7_sets(g), 3);
  EXPECT_TRUE(r.oriented);
  EXPECT_TRUE(r.partite);
  EXPECT_TRUE(r.regular);
}

TEST(Cayley, ArcRuleIsLeftMultiplication) {
  const auto g = named_group(GroupSpec::dihedral(6));
  ConnectionSets c(2);
  const Element x = evaluate_word(g, "x");
  c.set(0, 1, {x});
  const auto pd = build_cayley(g, c);
  for (Element h = 0; h < g.order(); ++h) {
    EXPECT_TRUE(pd.digraph.has_arc(pd.vertex(0, h), pd.vertex(1, g.mul(x, h))));
  }
  EXPECT_EQ(pd.digraph.num_arcs(), 6U);
}

TEST(Cayley, EmptyCells) {
  const auto g = named_group(GroupSpec::of(GroupKind::quaternion8));
  const auto pd = build_cayley(g, ConnectionSets(3));
  EXPECT_EQ(pd.digraph.num_vertices(), 24U);
  EXPECT_EQ(pd.digraph.num_arcs(), 0U);
}

TEST(Cayley, Cyclic4ThreePartsIsRegular) {
  const auto g = named_group(GroupSpec::cyclic(4));
  auto w = WordSets::empty(3);
  w.cells[0][1] = {"1", "x"};
  w.cells[0][2] = {"1"};
  w.cells[1][0] = {"x^2"};
  w.cells[1][2] = {"1", "x"};
  w.cells[2][0] = {"x", "x^2"};
  w.cells[2][1] = {"x"};
  const auto pd = build_cayley(g, resolve(g, w));
  EXPECT_EQ(pd.digraph.num_vertices(), 12U);
  EXPECT_TRUE(pd.digraph.is_regular(3));
}

TEST(Cayley, ValidationExamples) {
  const auto g = named_group(GroupSpec::cyclic(5));
  auto w = WordSets::empty(2);
  w.cells[0][1] = {"1", "x", "x^2"};
  w.cells[1][0] = {"x", "x^2", "x^3"};
  EXPECT_FALSE(validate_sets(g, resolve(g, w), 3).oriented);
  w.cells[0][0] = {"x"};
  EXPECT_FALSE(validate_sets(g, resolve(g, w), 3).partite);
  ConnectionSets bad(2);
  bad.set(0, 1, {9});
  EXPECT_THROW(build_cayley(g, bad), Error);
  EXPECT_THROW(bad.set(0, 1, {1, 1}), Error);
}

TEST(Cayley, RightTranslationsAreSemiregularAutomorphisms) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const auto specs = posr::testing::small_group_specs();
    const auto g = named_group(specs[iter % specs.size()]);
    const std::size_t m = 1 + iter % 3;
    const auto c = random_sets(g, m, rng);
    const auto pd = build_cayley(g, c);
    const auto rs = right_translations(g, m);
    EXPECT_TRUE(perm::is_identity(rs[0]));
    for (Element s = 0; s < g.order(); ++s) {
      ASSERT_TRUE(pd.digraph.is_automorphism(rs[s]));
      for (Vertex v = 0; v < pd.digraph.num_vertices() && s != 0; ++v) ASSERT_NE(rs[s][v], v);
    }
    std::vector<bool> orbit(pd.digraph.num_vertices(), false);
    for (const auto& r : rs) orbit[r[0]] = true;
    for (Vertex v = 0; v < orbit.size(); ++v) EXPECT_EQ(orbit[v], pd.part_of(v) == 0);
  }
}

TEST(Cayley, ValidationMatchesBuiltDigraph) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 100; ++iter) {
    const auto specs = posr::testing::small_group_specs();
    const auto g = named_group(specs[iter % specs.size()]);
    const std::size_t m = 1 + iter % 3;
    const auto c = random_sets(g, m, rng);
    const auto pd = build_cayley(g, c);
    const auto rep = validate_sets(g, c, 2);
    EXPECT_EQ(pd.digraph.num_arcs(), [&] {
      std::size_t s = 0;
      for (const auto& cell : c.cells()) s += cell.size();
      return s * g.order();
    }());
    EXPECT_EQ(rep.oriented, pd.digraph.is_oriented());
    bool inside = false;
    for (const auto& [u, v] : pd.digraph.arcs()) inside = inside || pd.part_of(u) == pd.part_of(v);
    EXPECT_EQ(rep.partite, !inside);
    EXPECT_EQ(rep.regular, pd.digraph.is_regular(2));
    EXPECT_EQ(rep.connected, pd.digraph.is_weakly_connected());
  }
}

TEST(Cayley, WordsRoundTrip) {
  const auto g = named_group(GroupSpec::of(GroupKind::alternating4));
  auto w = WordSets::empty(2);
  w.cells[0][1] = {"1", "yx", "yxy"};
  w.cells[1][0] = {"1", "yx", "xyxy"};
  const auto c = resolve(g, w);
  EXPECT_EQ(resolve(g, to_words(g, c)), c);
}

TEST(OutBall, Examples) {
  EXPECT_EQ(out_ball(cycle3(), 0, 0), (std::vector<std::vector<Vertex>>{{0}}));
  EXPECT_EQ(out_ball(cycle3(), 0, 2), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
  EXPECT_THROW(out_ball(cycle3(), 3, 1), Error);
  const auto g = named_group(GroupSpec::cyclic(10));
  auto w = WordSets::empty(2);
  w.cells[0][1] = {"1", "x", "x^2"};
  w.cells[1][0] = {"x", "x^2", "x^4"};
  const auto pd = build_cayley(g, resolve(g, w));
  EXPECT_EQ(out_ball(pd.digraph, pd.vertex(0, 0), 2)[2].size(), 6U);
}

TEST(Refine, SpecExamples) {
  const Digraph digon(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(equitable_refine(digon, Coloring::uniform(2)).num_colors, 1U);
  const Digraph arc(2, {{0, 1}});
  const auto a = equitable_refine(arc, Coloring::uniform(2));
  EXPECT_EQ(a.num_colors, 2U);
  EXPECT_TRUE(a.equitable);
  const Digraph cyc_iso(4, {{0, 1}, {1, 2}, {2, 0}});
  const auto c = equitable_refine(cyc_iso, Coloring::uniform(4));
  EXPECT_EQ(c.num_colors, 2U);
  EXPECT_EQ(c.color[0], c.color[1]);
  EXPECT_EQ(c.color[1], c.color[2]);
  EXPECT_NE(c.color[0], c.color[3]);
}

TEST(Refine, EquitableIdempotentAndLabelIndependent) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + iter % 12;
    const auto d = random_digraph(n, 0.25, rng, iter % 5 == 0);
    const auto c = equitable_refine(d, Coloring::uniform(n));
    ASSERT_TRUE(is_equitable(d, c));
    std::vector<bool> used(c.num_colors, false);
    for (auto x : c.color) used[x] = true;
    for (bool u : used) ASSERT_TRUE(u);
    EXPECT_EQ(equitable_refine(d, c), c);

    Permutation p = perm::identity(n);
    std::shuffle(p.begin(), p.end(), rng);
    const auto cp = equitable_refine(d.relabeled(p), Coloring::uniform(n));
    for (Vertex v = 0; v < n; ++v) ASSERT_EQ(cp.color[p[v]], c.color[v]);
  }
}

TEST(Refine, CoarsestAmongEquitable) {
  // Refining a non-uniform start keeps the start's distinctions.
  const Digraph d(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(equitable_refine(d, Coloring::uniform(4)).num_colors, 1U);
  Coloring start{{0, 1, 0, 0}, 2, false};
  EXPECT_EQ(equitable_refine(d, start).num_colors, 4U);
}
