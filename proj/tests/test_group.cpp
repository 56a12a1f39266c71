#include <gtest/gtest.h>

#include "posr/group.hpp"
#include "posr/named_groups.hpp"

using namespace posr;

namespace {

std::vector<GroupSpec> named_specs() {
  return {GroupSpec::cyclic(1),
          GroupSpec::cyclic(7),
          GroupSpec::of(GroupKind::klein4),
          GroupSpec::of(GroupKind::elem_abelian_9),
          GroupSpec::dihedral(6),
          GroupSpec::dihedral(8),
          GroupSpec::dihedral(10),
          GroupSpec::dihedral(12),
          GroupSpec::of(GroupKind::quaternion8),
          GroupSpec::of(GroupKind::alternating4),
          GroupSpec::of(GroupKind::heisenberg27),
          GroupSpec::of(GroupKind::c4_semidirect_c4),
          GroupSpec::of(GroupKind::smallgroup_16_3),
          GroupSpec::of(GroupKind::smallgroup_32_2)};
}

}  // namespace

TEST(Permutation, ComposeActsLeftFirst) {
  const Permutation a{1, 2, 0};
  const Permutation b{1, 0, 2};
  // a sends 0 to 1, then b sends 1 to 0.
  EXPECT_EQ(perm::compose(a, b)[0], 0U);
  EXPECT_EQ(perm::compose(a, perm::inverse(a)), perm::identity(3));
}

TEST(Permutation, CycleNotationRoundTrip) {
  const auto p = perm::parse_cycles("(0 1 2)(3 4)", 5);
  EXPECT_EQ(p, (Permutation{1, 2, 0, 4, 3}));
  EXPECT_EQ(perm::parse_cycles(perm::to_cycles(p), 5), p);
  EXPECT_THROW(perm::parse_cycles("(0 0)", 3), Error);
}

TEST(StabilizerChain, SmallOrders) {
  EXPECT_EQ(group_order_from_generators(std::vector<Permutation>{perm::identity(4)}, 4), 1);
  EXPECT_EQ(group_order_from_generators(std::vector<Permutation>{perm::parse_cycles("(0 1 2 3 4)", 5)}, 5), 5);
  EXPECT_EQ(group_order_from_generators(
                std::vector<Permutation>{perm::parse_cycles("(0 1 2)", 3), perm::parse_cycles("(0 1)", 3)}, 3),
            6);
  // S_8 and A_8 from standard generators.
  EXPECT_EQ(group_order_from_generators(
                std::vector<Permutation>{perm::parse_cycles("(0 1 2 3 4 5 6 7)", 8), perm::parse_cycles("(0 1)", 8)}, 8),
            40320);
  EXPECT_EQ(group_order_from_generators(
                std::vector<Permutation>{perm::parse_cycles("(0 1 2)", 8), perm::parse_cycles("(1 2 3 4 5 6 7)", 8)}, 8),
            20160);
}

TEST(StabilizerChain, Membership) {
  const std::vector<Permutation> gens{perm::parse_cycles("(0 1 2 3)", 4), perm::parse_cycles("(0 2)", 4)};
  StabilizerChain c(gens, 4);
  EXPECT_EQ(c.order(), 8);
  EXPECT_TRUE(c.contains(perm::parse_cycles("(1 3)", 4)));
  EXPECT_FALSE(c.contains(perm::parse_cycles("(0 1)", 4)));
}

TEST(GroupTable, ClosureErrors) {
  EXPECT_THROW(group_from_permutations(std::vector<Permutation>{}), Error);
  const std::vector<Permutation> s7{perm::parse_cycles("(0 1 2 3 4 5 6)", 7), perm::parse_cycles("(0 1)", 7)};
  try {
    group_from_permutations(s7, {}, 100);
    FAIL() << "expected a closure cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::closure_cap_exceeded);
  }
}

TEST(GroupTable, S3FromPermutations) {
  const std::vector<Permutation> gens{perm::parse_cycles("(0 1 2)", 3), perm::parse_cycles("(0 1)", 3)};
  const auto g = group_from_permutations(gens);
  EXPECT_EQ(g.order(), 6U);
  EXPECT_TRUE(is_valid_group_table(g));
  EXPECT_FALSE(is_abelian(g));
  EXPECT_FALSE(is_cyclic(g));
  EXPECT_TRUE(are_isomorphic_groups(g, named_group(GroupSpec::dihedral(6))));
}

TEST(NamedGroups, OrdersTablesAndPresentations) {
  for (const auto& spec : named_specs()) {
    SCOPED_TRACE(to_token(spec));
    const auto g = named_group(spec);
    EXPECT_EQ(g.order(), expected_order(spec));
    EXPECT_TRUE(is_valid_group_table(g));
    EXPECT_TRUE(check_relations(g, presentation(spec)));
  }
}

TEST(NamedGroups, TokensRoundTrip) {
  for (const auto& spec : named_specs()) EXPECT_EQ(parse_group_spec(to_token(spec)), spec);
  EXPECT_EQ(parse_group_spec("z:5"), GroupSpec::cyclic(5));
  EXPECT_THROW(parse_group_spec("nonsense"), Error);
}

TEST(NamedGroups, PairwiseNonIsomorphicOrder16) {
  const auto a = named_group(GroupSpec::of(GroupKind::c4_semidirect_c4));
  const auto b = named_group(GroupSpec::of(GroupKind::smallgroup_16_3));
  const auto c4c4 = group_from_permutations(
      std::vector<Permutation>{perm::parse_cycles("(0 1 2 3)", 8), perm::parse_cycles("(4 5 6 7)", 8)});
  EXPECT_FALSE(are_isomorphic_groups(a, b));
  EXPECT_FALSE(are_isomorphic_groups(a, c4c4));
  EXPECT_FALSE(are_isomorphic_groups(b, c4c4));
  EXPECT_FALSE(is_abelian(a));
  EXPECT_FALSE(is_abelian(b));
}

TEST(NamedGroups, ElementOrders) {
  const auto d8 = named_group(GroupSpec::dihedral(8));
  EXPECT_EQ(element_order(d8, evaluate_word(d8, "x")), 4U);
  EXPECT_EQ(element_order(d8, evaluate_word(d8, "y")), 2U);
  const auto q8 = named_group(GroupSpec::of(GroupKind::quaternion8));
  EXPECT_EQ(evaluate_word(q8, "x^2"), evaluate_word(q8, "y^2"));
  EXPECT_NE(evaluate_word(q8, "x^2"), q8.identity());
  const auto he = named_group(GroupSpec::of(GroupKind::heisenberg27));
  EXPECT_EQ(evaluate_word(he, "z"), evaluate_word(he, "x^-1y^-1xy"));
}

TEST(Words, ParserHandlesGroupsAndInverses) {
  const auto g = named_group(GroupSpec::of(GroupKind::alternating4));
  EXPECT_EQ(evaluate_word(g, "(xy)^3"), g.identity());
  EXPECT_EQ(evaluate_word(g, "(xy)^-1"), g.mul(g.inv(evaluate_word(g, "y")), g.inv(evaluate_word(g, "x"))));
  EXPECT_EQ(evaluate_word(g, "1"), g.identity());
  EXPECT_EQ(evaluate_word(g, "x^-2"), evaluate_word(g, "x"));
  EXPECT_THROW(evaluate_word(g, "w"), Error);
  for (Element e = 0; e < g.order(); ++e) EXPECT_EQ(evaluate_word(g, g.word(e)), e);
}

TEST(Words, TableWordsUsePowers) {
  const auto z7 = named_group(GroupSpec::cyclic(7));
  EXPECT_EQ(z7.word(evaluate_word(z7, "x^3")), "x^3");
  for (auto spec : {GroupSpec::dihedral(10), GroupSpec::of(GroupKind::heisenberg27), GroupSpec::of(GroupKind::smallgroup_32_2)}) {
    const auto g = named_group(spec);
    for (Element e = 0; e < g.order(); ++e) {
      EXPECT_EQ(g.word(e).find('*'), std::string::npos);
      EXPECT_EQ(evaluate_word(g, g.word(e)), e);
    }
  }
  const std::vector<Permutation> gens{{1, 2, 3, 0}, {0, 3, 2, 1}};
  const std::vector<std::string> labels{"r", "s1"};
  const auto d8 = group_from_permutations(gens, labels);
  for (Element e = 0; e < d8.order(); ++e) EXPECT_EQ(evaluate_word(d8, d8.word(e)), e) << d8.word(e);
}

TEST(Phi, MembershipOfNamedGroups) {
  EXPECT_TRUE(in_phi(named_group(GroupSpec::of(GroupKind::quaternion8))));
  EXPECT_TRUE(in_phi(named_group(GroupSpec::dihedral(8))));
  EXPECT_TRUE(in_phi(named_group(GroupSpec::of(GroupKind::c4_semidirect_c4))));
  EXPECT_TRUE(in_phi(named_group(GroupSpec::of(GroupKind::smallgroup_16_3))));
  EXPECT_TRUE(in_phi(named_group(GroupSpec::of(GroupKind::smallgroup_32_2))));
  EXPECT_FALSE(in_phi(named_group(GroupSpec::of(GroupKind::alternating4))));
  EXPECT_FALSE(in_phi(named_group(GroupSpec::dihedral(10))));
  EXPECT_FALSE(in_phi(named_group(GroupSpec::of(GroupKind::klein4))));
  EXPECT_FALSE(in_phi(named_group(GroupSpec::cyclic(4))));
}

TEST(Automorphisms, CountsOfSmallGroups) {
  EXPECT_EQ(group_automorphisms(named_group(GroupSpec::of(GroupKind::klein4))).size(), 6U);
  EXPECT_EQ(group_automorphisms(named_group(GroupSpec::of(GroupKind::quaternion8))).size(), 24U);
  EXPECT_EQ(group_automorphisms(named_group(GroupSpec::dihedral(8))).size(), 8U);
  EXPECT_EQ(group_automorphisms(named_group(GroupSpec::cyclic(7))).size(), 6U);
}

TEST(GroupTable, DeterministicNumbering) {
  const std::vector<Permutation> gens{perm::parse_cycles("(0 1 2 3 4)", 5), perm::parse_cycles("(0 1)", 5)};
  const auto a = group_from_permutations(gens);
  const auto b = group_from_permutations(gens);
  ASSERT_EQ(a.order(), 120U);
  for (Element x = 0; x < a.order(); ++x) {
    for (Element y = 0; y < a.order(); ++y) ASSERT_EQ(a.mul(x, y), b.mul(x, y));
  }
}

TEST(GroupTable, LagrangeForNamedGroups) {
  for (const auto& spec : named_specs()) {
    const auto g = named_group(spec);
    for (Element e = 0; e < g.order(); ++e) EXPECT_EQ(g.order() % element_order(g, e), 0U);
  }
}
