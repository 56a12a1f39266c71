#ifndef POSR_CATALOG_HPP
#define POSR_CATALOG_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posr/autgroup.hpp"
#include "posr/cayley.hpp"
#include "posr/digraph.hpp"
#include "posr/error.hpp"
#include "posr/group.hpp"
#include "posr/named_groups.hpp"
#include "posr/search.hpp"

namespace posr {

// ---------------------------------------------------------------------------
// Word helpers

namespace detail {

/// Evaluates a word in x, y and z = x^-1 y^-1 x y with x, y bound to the given elements.
inline Element evaluate_on_pair(const GroupTable& g, std::string_view text, Element x, Element y) {
  const Element z = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
  const std::array<Generator, 3> gens{Generator{"x", x}, Generator{"y", y}, Generator{"z", z}};
  Element acc = g.identity();
  for (const auto& letter : parse_word(text, gens)) {
    const auto it = std::find_if(gens.begin(), gens.end(), [&](const Generator& s) { return s.label == letter.label; });
    acc = g.mul(acc, power(g, it->element, letter.exponent));
  }
  return acc;
}

using WordCell = std::vector<std::string>;

inline ConnectionSets two_part(const GroupTable& g, const WordCell& t01, const WordCell& t10, Element x, Element y) {
  ConnectionSets c(2);
  auto eval = [&](const WordCell& cell) {
    std::vector<Element> out;
    for (const auto& w : cell) out.push_back(evaluate_on_pair(g, w, x, y));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  c.set(0, 1, eval(t01));
  c.set(1, 0, eval(t10));
  return c;
}

inline WordSets two_part_words(WordCell t01, WordCell t10) {
  auto w = WordSets::empty(2);
  w.cells[0][1] = std::move(t01);
  w.cells[1][0] = std::move(t10);
  return w;
}

inline std::pair<Element, Element> labelled_pair(const GroupTable& g) {
  const auto x = g.generator("x");
  const auto y = g.generator("y");
  if (!x || !y) fail(Errc::no_candidate, "group has no generators labelled x and y");
  return {*x, *y};
}

inline bool passes(const GroupTable& g, const ConnectionSets& c, bool oriented) {
  const auto v = validate_sets(g, c, 3);
  return v.partite && v.regular && (!oriented || v.oriented);
}

inline void push_unique(std::vector<ConnectionSets>& out, ConnectionSets c) {
  if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cyclic constructions

/// The connection sets of the cyclic m-POSR constructions, as words in x.
inline WordSets cyclic_posr_words(std::size_t n, std::size_t m) {
  const bool ok = (m == 2 && n >= 7) || (m == 3 && n >= 4) || (m == 4 && n >= 3) || (m >= 5 && n >= 3);
  if (!ok) {
    fail(Errc::out_of_range, "no cyclic construction for n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  auto w = WordSets::empty(m);
  auto& t = w.cells;
  switch (m) {
    case 2:
      t[0][1] = {"1", "x", "x^2"};
      t[1][0] = n == 7 ? detail::WordCell{"x", "x^3", "x^4"} : detail::WordCell{"x", "x^2", "x^4"};
      break;
    case 3:
      t[0][1] = {"1", "x"};
      t[0][2] = {"1"};
      t[1][0] = {"x^2"};
      t[1][2] = {"1", "x"};
      t[2][0] = {"x", "x^2"};
      t[2][1] = {"x"};
      break;
    case 4:
      t[0][1] = t[1][2] = t[2][0] = {"1", "x"};
      t[3][0] = t[3][1] = t[2][3] = {"1"};
      t[0][3] = t[1][3] = {"x"};
      t[3][2] = {"x^2"};
      break;
    default:
      for (std::size_t i = 0; i < m; ++i) {
        t[i][(i + 1) % m] = {"1"};
        t[i][(i + m - 1) % m] = {"x"};
        t[i][(i + m - 2) % m] = {i == 2 ? "x" : "1"};
      }
  }
  return w;
}

inline ConnectionSets cyclic_posr_sets(std::size_t n, std::size_t m) {
  const auto w = cyclic_posr_words(n, m);
  return resolve(named_group(GroupSpec::cyclic(n)), w);
}

// ---------------------------------------------------------------------------
// Two-generated constructions

struct SetFamily {
  std::string name;
  detail::WordCell t01;
  detail::WordCell t10;
};

/// Witness sets for specific named groups, in the group's own x, y (and z).
inline std::vector<std::pair<GroupSpec, SetFamily>> named_2posr_families() {
  return {
      {GroupSpec::dihedral(8), {"D8", {"1", "x", "xy"}, {"x", "y", "x^3y"}}},
      {GroupSpec::dihedral(10), {"D10", {"1", "x", "x^2"}, {"x", "y", "xy"}}},
      {GroupSpec::of(GroupKind::elem_abelian_9), {"Z3^2", {"1", "x", "y"}, {"y", "x", "xy^2"}}},
      {GroupSpec::of(GroupKind::alternating4), {"A4", {"1", "yx", "yxy"}, {"1", "yx", "xyxy"}}},
      {GroupSpec::of(GroupKind::heisenberg27), {"He3", {"z", "x^2z^2", "x^2yz"}, {"x^2z^2", "z", "x^2y^2"}}},
  };
}

/// The families used for generic (o(x), o(y)), or nullopt when none applies.
inline std::optional<SetFamily> generic_2posr_family(std::size_t ox, std::size_t oy) {
  if (ox == 4 && oy == 2) return SetFamily{"o(x)=4, o(y)=2", {"1", "x", "xy"}, {"x", "y", "x^3y"}};
  if (ox == 4 && (oy == 3 || oy == 4)) return SetFamily{"o(x)=4, o(y) in {3,4}", {"1", "x", "y"}, {"x", "x^2", "y"}};
  if (ox == 5 && oy == 2) return SetFamily{"o(x)=5, o(y)=2", {"1", "x", "x^2"}, {"x", "y", "xy"}};
  if (ox == 5 && oy >= 3) return SetFamily{"o(x)=5, o(y)>=3", {"1", "x", "x^2"}, {"x", "y", "y^2"}};
  if (ox >= 6) return SetFamily{"o(x)>=6", {"1", "x", "y"}, {"x", "x^2", "x^3"}};
  return std::nullopt;
}

namespace detail {

/// A generating pair of g satisfying the named group's relations. When the
/// orders agree, this is an isomorphism onto the named group.
inline std::optional<std::pair<Element, Element>> presentation_pair(const GroupTable& g, const GroupSpec& spec) {
  if (g.order() != expected_order(spec)) return std::nullopt;
  const auto rel = presentation(spec);
  auto fits = [&](Element x, Element y) {
    const std::array<Element, 2> pair{x, y};
    if (subgroup_size(g, pair) != g.order()) return false;
    return std::all_of(rel.begin(), rel.end(), [&](const auto& r) {
      return evaluate_on_pair(g, r.first, x, y) == evaluate_on_pair(g, r.second, x, y);
    });
  };
  const auto x = g.generator("x");
  const auto y = g.generator("y");
  if (x && y && fits(*x, *y)) return std::pair{*x, *y};
  for (auto [a, b] : generating_pairs(g)) {
    if (fits(a, b)) return std::pair{a, b};
  }
  return std::nullopt;
}

}  // namespace detail

/// Candidate 2-POSR systems for a two-generated group, filtered to oriented,
/// partite, 3-regular ones: named-group matches first, then the generic
/// families for the labelled pair (x, y) and the swapped pair (y, x).
inline std::vector<ConnectionSets> two_gen_2posr_candidates(const GroupTable& g) {
  std::vector<ConnectionSets> out;
  for (const auto& [spec, fam] : named_2posr_families()) {
    if (auto p = detail::presentation_pair(g, spec)) {
      auto c = detail::two_part(g, fam.t01, fam.t10, p->first, p->second);
      if (detail::passes(g, c, true)) detail::push_unique(out, std::move(c));
    }
  }
  const auto x = g.generator("x");
  const auto y = g.generator("y");
  if (x && y) {
    for (auto [a, b] : {std::pair{*x, *y}, std::pair{*y, *x}}) {
      if (auto fam = generic_2posr_family(element_order(g, a), element_order(g, b))) {
        auto c = detail::two_part(g, fam->t01, fam->t10, a, b);
        if (detail::passes(g, c, true)) detail::push_unique(out, std::move(c));
      }
    }
  }
  if (out.empty()) fail(Errc::no_candidate, "no listed 2-POSR family applies");
  return out;
}

/// The m-POSR (m >= 3) built on a generating pair with o(x) >= 3 and y != x^-1:
/// T[i][i+1] = {1, x} for i != m-1, T[m-1][0] = {x, y}, T[i][i-1] = {x}.
inline ConnectionSets two_gen_mposr_sets(const GroupTable& g, std::size_t m) {
  if (m < 3) fail(Errc::precondition_failed, "two_gen_mposr_sets needs m >= 3");
  auto [x, y] = detail::labelled_pair(g);
  if (element_order(g, x) < 3) {
    if (element_order(g, y) < 3) fail(Errc::precondition_failed, "both generators have order at most 2");
    std::swap(x, y);
  }
  if (y == g.inv(x)) fail(Errc::precondition_failed, "y = x^-1, so the group is cyclic");
  ConnectionSets c(m);
  for (std::size_t i = 0; i < m; ++i) {
    c.set(i, (i + m - 1) % m, {x});
    if (i != m - 1) c.set(i, i + 1, {g.identity(), x});
  }
  c.set(m - 1, 0, {x, y});
  return c;
}

/// m-PDR candidates: the POSR constructions first, then the PDR-only systems
/// for D6 and the order-4 generator family. All are partite and 3-regular.
inline std::vector<ConnectionSets> pdr_candidates(const GroupTable& g, std::size_t m) {
  std::vector<ConnectionSets> out;
  auto add = [&](ConnectionSets c, bool oriented) {
    if (detail::passes(g, c, oriented)) detail::push_unique(out, std::move(c));
  };
  if (is_cyclic(g)) {
    try {
      add(cyclic_posr_sets(g.order(), m), true);
    } catch (const Error&) {
    }
  } else if (m == 2) {
    try {
      for (auto& c : two_gen_2posr_candidates(g)) add(std::move(c), true);
    } catch (const Error&) {
    }
  } else {
    try {
      add(two_gen_mposr_sets(g, m), true);
    } catch (const Error&) {
    }
  }
  if (m == 2 && !is_cyclic(g)) {
    const auto x = g.generator("x");
    const auto y = g.generator("y");
    if (x && y) {
      for (auto [a, b] : {std::pair{*x, *y}, std::pair{*y, *x}}) {
        const auto oa = element_order(g, a);
        const auto ob = element_order(g, b);
        if (oa == 3 && ob == 2) add(detail::two_part(g, {"1", "x", "x^2"}, {"1", "y", "xy"}, a, b), false);
        if (oa == 4) add(detail::two_part(g, {"1", "x", "y"}, {"1", "x^-1", "x^-2"}, a, b), false);
      }
    }
  }
  if (out.empty()) fail(Errc::no_candidate, "no listed PDR construction applies");
  return out;
}

/// Tries the listed candidates in order and falls back to the exhaustive
/// search; returns the first system that gives a representation.
inline std::optional<ConnectionSets> construct_witness(const GroupTable& g, std::size_t m, RepKind kind,
                                                       const SearchOptions& opt = {}) {
  std::vector<ConnectionSets> cands;
  try {
    if (kind == RepKind::pdr) {
      cands = pdr_candidates(g, m);
    } else if (is_cyclic(g)) {
      cands.push_back(cyclic_posr_sets(g.order(), m));
    } else if (m == 2) {
      cands = two_gen_2posr_candidates(g);
    } else {
      cands.push_back(two_gen_mposr_sets(g, m));
    }
  } catch (const Error&) {
  }
  for (auto& c : cands) {
    if (is_semiregular_rep_fast(build_cayley(g, c), opt.aut)) return std::move(c);
  }
  auto r = exists_mposr(g, m, 3, kind, opt);
  return r.sets;
}

// ---------------------------------------------------------------------------
// Fixed digraphs

struct NamedDigraph {
  std::string name;
  Digraph digraph;
  std::string note;
};

inline std::vector<NamedDigraph> fixed_digraphs() {
  auto make = [](std::size_t n, std::vector<Arc> arcs, int base) {
    for (auto& [u, v] : arcs) {
      u = static_cast<Vertex>(static_cast<int>(u) - base);
      v = static_cast<Vertex>(static_cast<int>(v) - base);
    }
    return Digraph(n, std::move(arcs));
  };
  std::vector<NamedDigraph> out;
  out.push_back({"fig1_9",
                 make(9,
                      {{0, 2}, {0, 5}, {0, 8}, {1, 0}, {1, 6}, {1, 8}, {2, 3}, {2, 4}, {2, 7},
                       {3, 0}, {3, 6}, {3, 7}, {4, 1}, {4, 3}, {4, 7}, {5, 1}, {5, 2}, {5, 4},
                       {6, 0}, {6, 2}, {6, 5}, {7, 1}, {7, 5}, {7, 8}, {8, 3}, {8, 4}, {8, 6}},
                      0),
                 "oriented, 9 vertices"});
  out.push_back({"fig1_10",
                 make(10,
                      {{0, 4}, {0, 5}, {0, 9}, {1, 3}, {1, 4}, {1, 7}, {2, 0}, {2, 1}, {2, 4}, {3, 2},
                       {3, 6}, {3, 8}, {4, 6}, {4, 8}, {4, 9}, {5, 1}, {5, 3}, {5, 7}, {6, 1}, {6, 2},
                       {6, 5}, {7, 0}, {7, 2}, {7, 9}, {8, 0}, {8, 5}, {8, 7}, {9, 3}, {9, 6}, {9, 8}},
                      0),
                 "oriented, 10 vertices"});
  out.push_back({"gamma7",
                 make(7,
                      {{0, 6}, {0, 4}, {0, 3}, {1, 4}, {1, 3}, {1, 6}, {2, 5}, {2, 0}, {2, 1}, {3, 6}, {3, 4},
                       {3, 1}, {4, 1}, {4, 5}, {4, 2}, {5, 2}, {5, 0}, {5, 3}, {6, 2}, {6, 0}, {6, 5}},
                      0),
                 "7 vertices, digons allowed"});
  out.push_back({"gamma8",
                 make(8,
                      {{1, 2}, {1, 5}, {1, 7}, {2, 3}, {2, 6}, {2, 8}, {3, 1}, {3, 4}, {3, 7}, {4, 2}, {4, 5}, {4, 8},
                       {5, 1}, {5, 6}, {5, 7}, {6, 3}, {6, 4}, {6, 8}, {7, 2}, {7, 4}, {7, 6}, {8, 1}, {8, 3}, {8, 5}},
                      1),
                 "source labels 1..8, stored as v-1"});
  return out;
}

inline NamedDigraph fixed_digraph(std::string_view name) {
  for (auto& d : fixed_digraphs()) {
    if (d.name == name) return d;
  }
  fail(Errc::invalid_parameter, "unknown fixed digraph '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Classification

struct Classification {
  bool admits = false;
  std::string citation;
};

inline std::string verdict_string(const Classification& c) { return c.admits ? "Yes" : "No"; }

namespace detail {

inline bool isomorphic_to_any(const GroupTable& g, std::initializer_list<GroupSpec> specs) {
  for (const auto& s : specs) {
    if (expected_order(s) == g.order() && are_isomorphic_groups(named_group(s), g)) return true;
  }
  return false;
}

}  // namespace detail

/// The verdict table for valency 3, evaluated literally.
inline Classification classify(const GroupTable& g, std::size_t m, RepKind kind) {
  if (m < 2) fail(Errc::invalid_parameter, "m must be at least 2");
  const std::size_t n = g.order();
  const bool posr = kind == RepKind::posr;
  if (n == 1) {
    if (posr) {
      if (m <= 8) return {false, "cyclic POSR exception \"5 <= m <= 8 and o(x) = 1\" (m <= 4 by the smaller-m cases)"};
      return {true, "trivial group POSR: 3-regular antisymmetric oriented digraph exists for m >= 9"};
    }
    if (m <= 6) return {false, "cyclic PDR exception \"3 <= m <= 6 and o(x) = 1\" (m = 2 by \"o(x) <= 4\")"};
    return {true, "trivial group PDR: 3-regular antisymmetric digraph exists for m >= 7"};
  }
  if (is_cyclic(g)) {
    if (posr) {
      if (m == 2 && n <= 6) return {false, "cyclic POSR exception \"m=2 and o(x) <= 6\""};
      if (m == 3 && n <= 3) return {false, "cyclic POSR exception \"m=3 and o(x) <= 3\""};
      if (m == 4 && n <= 2) return {false, "cyclic POSR exception \"m=4 and o(x) <= 2\""};
      return {true, "cyclic POSR: outside the exception list"};
    }
    if (m == 2 && n <= 4) return {false, "cyclic PDR exception \"m = 2 and o(x) <= 4\""};
    if (m == 3 && n <= 2) return {false, "cyclic PDR exception \"m=3 and o(x) <= 2\""};
    return {true, "cyclic PDR: outside the exception list"};
  }
  if (generating_pairs(g).empty()) fail(Errc::unsupported, "group is not two-generated");
  if (!posr) {
    if (m == 2 && detail::isomorphic_to_any(g, {GroupSpec::of(GroupKind::klein4)})) {
      return {false, "PDR exception \"G = Z^2_2 and m=2\""};
    }
    return {true, "two-generated PDR: outside the exception list"};
  }
  if (m >= 3) return {true, "two-generated POSR \"for every integer m >= 3\""};
  if (in_phi(g)) {
    if (detail::isomorphic_to_any(g, {GroupSpec::of(GroupKind::quaternion8), GroupSpec::of(GroupKind::c4_semidirect_c4),
                                      GroupSpec::of(GroupKind::smallgroup_16_3),
                                      GroupSpec::of(GroupKind::smallgroup_32_2)})) {
      return {false, "Phi-class 2-POSR exception \"Q_8, C_4:C_4, (C_2 x C_2):C_4, (C_4 x C_2):C_4\""};
    }
    return {true, "Phi-class 2-POSR: outside the exception list"};
  }
  if (detail::isomorphic_to_any(g, {GroupSpec::of(GroupKind::klein4), GroupSpec::dihedral(6)})) {
    return {false, "non-Phi 2-POSR exception \"G in {Z_2^2, D_6}\""};
  }
  return {true, "non-Phi 2-POSR: outside the exception list"};
}

inline Classification classify(const GroupSpec& spec, std::size_t m, RepKind kind) {
  return classify(named_group(spec), m, kind);
}

// ---------------------------------------------------------------------------
// Claims

enum class Expectation { exists_with_witness, exists_witness_unavailable, not_exists };

inline std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::exists_with_witness: return "ExistsWithWitness";
    case Expectation::exists_witness_unavailable: return "ExistsWitnessUnavailable";
    case Expectation::not_exists: return "NotExists";
  }
  return "?";
}

inline Expectation parse_expectation(std::string_view s) {
  if (s == "ExistsWithWitness") return Expectation::exists_with_witness;
  if (s == "ExistsWitnessUnavailable") return Expectation::exists_witness_unavailable;
  if (s == "NotExists") return Expectation::not_exists;
  fail(Errc::parse_error, "unknown expectation '" + std::string(s) + "'");
}

enum class Tier { standard, extended };

inline std::string to_string(Tier t) { return t == Tier::standard ? "default" : "extended"; }

inline Tier parse_tier(std::string_view s) {
  if (s == "default") return Tier::standard;
  if (s == "extended") return Tier::extended;
  fail(Errc::parse_error, "unknown tier '" + std::string(s) + "' (expected default or extended)");
}

struct Claim {
  std::string id;
  GroupSpec group;
  std::size_t m = 2;
  RepKind kind = RepKind::posr;
  Expectation expected = Expectation::not_exists;
  std::optional<WordSets> sets;
  std::string source;
  Tier tier = Tier::standard;

  friend bool operator==(const Claim&, const Claim&) = default;
};

inline std::string claim_id(const std::string& group_name, std::size_t m, RepKind kind, std::string_view tag = {}) {
  std::string id = group_name + "/m=" + std::to_string(m) + "/" + to_string(kind);
  if (!tag.empty()) id += "/" + std::string(tag);
  return id;
}

namespace detail {

inline WordSets trivial_words(const Digraph& d) {
  auto w = WordSets::empty(d.num_vertices());
  for (const auto& [u, v] : d.arcs()) w.cells[u][v] = {"1"};
  return w;
}

inline WordSets mposr_words(std::size_t m) {
  auto w = WordSets::empty(m);
  for (std::size_t i = 0; i < m; ++i) {
    w.cells[i][(i + m - 1) % m] = {"x"};
    if (i != m - 1) w.cells[i][i + 1] = {"1", "x"};
  }
  w.cells[m - 1][0] = {"x", "y"};
  return w;
}

}  // namespace detail

/// Every checked statement, in registration order.
inline std::vector<Claim> default_claims() {
  using E = Expectation;
  std::vector<Claim> c;
  auto add = [&](GroupSpec g, std::size_t m, RepKind k, E e, std::optional<WordSets> sets, std::string src,
                 Tier tier = Tier::standard, std::string_view tag = {}) {
    const std::string name = g.kind == GroupKind::from_permutations ? std::string(tag) : display_name(g);
    c.push_back({claim_id(name, m, k, g.kind == GroupKind::from_permutations ? std::string_view{} : tag), std::move(g), m, k, e,
                 std::move(sets), std::move(src), tier});
  };
  const auto P = RepKind::posr;
  const auto D = RepKind::pdr;
  const auto cyc = [](std::size_t n) { return GroupSpec::cyclic(n); };
  const auto of = [](GroupKind k) { return GroupSpec::of(k); };

  // Cyclic constructions.
  add(cyc(7), 2, P, E::exists_with_witness, cyclic_posr_words(7, 2), "cyclic 2-POSR, n=7: \"T_{1,0} = {x, x^3, x^4}\"");
  add(cyc(8), 2, P, E::exists_with_witness, cyclic_posr_words(8, 2), "cyclic 2-POSR, n >= 8: \"T_{1,0} = {x, x^2, x^4}\"");
  add(cyc(4), 3, P, E::exists_with_witness, cyclic_posr_words(4, 3), "cyclic 3-POSR: \"T_{1,0} = {x^2}, T_{1,2} = {1, x}\"");
  add(cyc(3), 4, P, E::exists_with_witness, cyclic_posr_words(3, 4), "cyclic 4-POSR: \"T_{0,1} = T_{1,2} = T_{2,0} = {1, x}\"");
  for (std::size_t m : {5, 6, 7, 8}) {
    add(cyc(3), m, P, E::exists_with_witness, cyclic_posr_words(3, m), "cyclic m-POSR, m >= 5: \"T_{j,j-2} = {1}, T_{2,0} = {x}\"");
  }

  // Two-generated 2-POSR constructions.
  for (const auto& [g, fam] : named_2posr_families()) {
    add(g, 2, P, E::exists_with_witness, detail::two_part_words(fam.t01, fam.t10), fam.name + " 2-POSR: explicit sets, \"A = R(G)\"");
  }
  add(GroupSpec::dihedral(12), 2, P, E::exists_with_witness, detail::two_part_words({"1", "x", "y"}, {"x", "x^2", "x^3"}),
      "2-POSR for o(x) >= 6: \"T_{1,0} = {x, x^2, x^3}\"");
  add(GroupSpec::permutations({"(0 1 2 3 4)", "(5 6 7 8 9)"}), 2, P, E::exists_with_witness,
      detail::two_part_words({"1", "x", "x^2"}, {"x", "y", "y^2"}), "2-POSR for o(x) = 5, o(y) >= 3: \"T_{1,0} = {x, y, y^2}\"", Tier::standard, "Z5^2");

  // Two-generated m-POSR, m >= 3.
  for (const auto& [g, m] : std::vector<std::pair<GroupSpec, std::size_t>>{
           {of(GroupKind::quaternion8), 3}, {GroupSpec::dihedral(8), 4}, {of(GroupKind::alternating4), 5},
           {GroupSpec::dihedral(8), 6}, {of(GroupKind::smallgroup_16_3), 3}}) {
    add(g, m, P, E::exists_with_witness, detail::mposr_words(m), "two-generated m-POSR: \"T_{i,i+1} = {1,x}, T_{m-1,0} = {x,y}\"");
  }

  // Fixed digraphs read as m-Cayley digraphs of the trivial group.
  const auto fixed = fixed_digraphs();
  add(cyc(1), 9, P, E::exists_with_witness, detail::trivial_words(fixed[0].digraph), "antisymmetric oriented 3-regular digraph on 9 vertices", Tier::standard, "fig1_9");
  add(cyc(1), 10, P, E::exists_with_witness, detail::trivial_words(fixed[1].digraph), "antisymmetric oriented 3-regular digraph on 10 vertices", Tier::standard, "fig1_10");
  add(cyc(1), 7, D, E::exists_with_witness, detail::trivial_words(fixed[2].digraph), "antisymmetric 3-regular digraph on 7 vertices", Tier::standard, "gamma7");
  add(cyc(1), 8, D, E::exists_with_witness, detail::trivial_words(fixed[3].digraph), "antisymmetric 3-regular digraph on 8 vertices", Tier::standard, "gamma8");

  // PDR constructions.
  add(GroupSpec::dihedral(6), 2, D, E::exists_with_witness, detail::two_part_words({"1", "x", "x^2"}, {"1", "y", "xy"}),
      "D6 2-PDR: \"T_{0,1} = {1, x, x^2} and T_{1,0} = {1, y, xy}\"");
  for (auto k : {GroupKind::quaternion8, GroupKind::c4_semidirect_c4, GroupKind::smallgroup_16_3, GroupKind::smallgroup_32_2}) {
    add(of(k), 2, D, E::exists_with_witness, detail::two_part_words({"1", "x", "y"}, {"1", "x^-1", "x^-2"}),
        "order-4 generator 2-PDR: \"T_{0,1} = {1, x, y} and T_{1,0} = {1, x^{-1}, x^{-2}}\"");
  }

  // Nonexistence, cyclic and trivial.
  for (std::size_t n = 1; n <= 6; ++n) add(cyc(n), 2, P, E::not_exists, std::nullopt, "cyclic POSR exception \"m=2 and o(x) <= 6\"");
  for (std::size_t n = 1; n <= 3; ++n) add(cyc(n), 3, P, E::not_exists, std::nullopt, "cyclic POSR exception \"m=3 and o(x) <= 3\"");
  for (std::size_t n = 1; n <= 2; ++n) add(cyc(n), 4, P, E::not_exists, std::nullopt, "cyclic POSR exception \"m=4 and o(x) <= 2\"");
  for (std::size_t m = 5; m <= 8; ++m) {
    add(cyc(1), m, P, E::not_exists, std::nullopt, "cyclic POSR exception \"5 <= m <= 8 and o(x)=1\"",
        m == 8 ? Tier::extended : Tier::standard);
  }
  for (std::size_t n = 1; n <= 4; ++n) add(cyc(n), 2, D, E::not_exists, std::nullopt, "cyclic PDR exception \"m = 2 and o(x) <= 4\"");
  for (std::size_t n = 1; n <= 2; ++n) add(cyc(n), 3, D, E::not_exists, std::nullopt, "cyclic PDR exception \"m=3 and o(x) <= 2\"");
  for (std::size_t m = 4; m <= 6; ++m) add(cyc(1), m, D, E::not_exists, std::nullopt, "cyclic PDR exception \"3 <= m <= 6 and o(x)=1\"");

  // Nonexistence, two-generated.
  add(of(GroupKind::klein4), 2, P, E::not_exists, std::nullopt, "non-Phi 2-POSR exception \"G in {Z_2^2, D_6}\"");
  add(of(GroupKind::klein4), 2, D, E::not_exists, std::nullopt, "PDR exception \"G = Z^2_2 and m=2\"");
  add(GroupSpec::dihedral(6), 2, P, E::not_exists, std::nullopt, "non-Phi 2-POSR exception \"G in {Z_2^2, D_6}\"");
  add(of(GroupKind::quaternion8), 2, P, E::not_exists, std::nullopt, "Phi-class 2-POSR exception \"Q_8\"");
  add(of(GroupKind::c4_semidirect_c4), 2, P, E::not_exists, std::nullopt, "Phi-class 2-POSR exception \"C_4 x| C_4\"", Tier::extended);
  add(of(GroupKind::smallgroup_16_3), 2, P, E::not_exists, std::nullopt, "Phi-class 2-POSR exception \"(C_2 x C_2) x| C_4\"", Tier::extended);
  add(of(GroupKind::smallgroup_32_2), 2, P, E::not_exists, std::nullopt, "Phi-class 2-POSR exception \"(C_4 x C_2) x| C_4\"", Tier::extended);

  // Existence stated without explicit sets.
  add(cyc(2), 5, P, E::exists_witness_unavailable, std::nullopt, "cyclic POSR, o(x)=2 is excepted only for m <= 4");
  add(of(GroupKind::klein4), 3, P, E::exists_witness_unavailable, std::nullopt, "Z_2^2 m-POSR \"except when m=2\"");
  add(cyc(5), 2, D, E::exists_witness_unavailable, std::nullopt, "cyclic PDR exception is \"m = 2 and o(x) <= 4\"");
  add(cyc(6), 2, D, E::exists_witness_unavailable, std::nullopt, "cyclic PDR exception is \"m = 2 and o(x) <= 4\"");
  add(cyc(3), 3, D, E::exists_witness_unavailable, std::nullopt, "cyclic PDR exception is \"m=3 and o(x) <= 2\"");
  add(cyc(2), 4, D, E::exists_witness_unavailable, std::nullopt, "cyclic PDR: o(x)=2 is excepted only for m <= 3");
  add(GroupSpec::permutations({"(0 1 2 3)", "(4 5 6 7)"}), 2, P, E::exists_witness_unavailable, std::nullopt,
      "Phi-class 2-POSR: Z4^2 is outside the exception list", Tier::standard, "Z4^2");
  add(of(GroupKind::klein4), 3, D, E::exists_witness_unavailable, std::nullopt, "Z_2^2 PDR is excepted only for m=2");
  return c;
}

// ---------------------------------------------------------------------------
// Verification suite

enum class ClaimStatus { pass, failed, skipped };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "Pass";
    case ClaimStatus::failed: return "Failed";
    case ClaimStatus::skipped: return "Skipped";
  }
  return "?";
}

struct SuiteBudget {
  Tier tier = Tier::standard;
  unsigned threads = 1;
  std::uint64_t max_candidates = 0;          // per search, 0: unlimited
  std::chrono::milliseconds time_limit{0};   // per search, 0: unlimited
  std::uint64_t confirm_candidates = 2'000'000;  // search cap for witness-unavailable claims, 0: skip
  std::string checkpoint_dir;
  const std::atomic<bool>* cancel = nullptr;
  std::ostream* progress = nullptr;
};

struct ClaimResult {
  Claim claim;
  ClaimStatus status = ClaimStatus::skipped;
  std::string detail;
  std::optional<SearchStatus> search;
  std::uint64_t candidates_examined = 0;
  std::uint64_t candidates_total = 0;
  std::optional<BigInt> aut_order;
  std::optional<WordSets> witness;  // counterexample, or the search confirmation
  bool aborted = false;
  std::chrono::milliseconds elapsed{0};
};

struct Report {
  Tier tier = Tier::standard;
  std::vector<ClaimResult> results;

  [[nodiscard]] std::size_t count(ClaimStatus s) const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [s](const ClaimResult& r) { return r.status == s; }));
  }
  [[nodiscard]] bool ok() const { return count(ClaimStatus::failed) == 0; }
  [[nodiscard]] bool any_aborted() const {
    return std::any_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.aborted; });
  }
};

namespace detail {

inline std::string validation_text(const ValidationReport& v) {
  return std::string("oriented=") + (v.oriented ? "true" : "false") + " partite=" + (v.partite ? "true" : "false") +
         " regular=" + (v.regular ? "true" : "false");
}

inline std::string checkpoint_file(const SuiteBudget& b, const std::string& id) {
  if (b.checkpoint_dir.empty()) return {};
  std::string name;
  for (char ch : id) name += (std::isalnum(static_cast<unsigned char>(ch)) != 0) ? ch : '_';
  return b.checkpoint_dir + "/" + name + ".json";
}

inline SearchOutcome run_search(const GroupTable& g, const Claim& c, const SearchOptions& opt) {
  if (g.order() == 1) return exists_antisymmetric_kregular(c.m, 3, c.kind == RepKind::posr, opt);
  return exists_mposr(g, c.m, 3, c.kind, opt);
}

inline WordSets witness_words(const GroupTable& g, const SearchOutcome& o) {
  if (o.sets) return to_words(g, *o.sets);
  return trivial_words(*o.digraph);
}

}  // namespace detail

inline ClaimResult verify_claim(const Claim& claim, const SuiteBudget& budget = {}) {
  ClaimResult r;
  r.claim = claim;
  const auto t0 = std::chrono::steady_clock::now();
  auto done = [&] {
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return r;
  };
  if (claim.tier == Tier::extended && budget.tier == Tier::standard) {
    r.detail = "extended tier";
    return done();
  }
  try {
    const auto g = named_group(claim.group);
    SearchOptions opt;
    opt.threads = budget.threads;
    opt.max_candidates = budget.max_candidates;
    opt.time_limit = budget.time_limit;
    opt.cancel = budget.cancel;
    opt.progress = budget.progress;
    opt.checkpoint_path = detail::checkpoint_file(budget, claim.id);
    switch (claim.expected) {
      case Expectation::exists_with_witness: {
        if (!claim.sets) fail(Errc::invalid_connection_sets, "claim carries no sets");
        const auto sets = resolve(g, *claim.sets);
        const auto v = validate_sets(g, sets, 3);
        if (!v.partite || !v.regular || (claim.kind == RepKind::posr && !v.oriented)) {
          r.status = ClaimStatus::failed;
          r.detail = "validation failed: " + detail::validation_text(v);
          return done();
        }
        const auto verdict = is_semiregular_rep(build_cayley(g, sets), g);
        r.aut_order = verdict.aut_order;
        if (verdict.is_representation) {
          r.status = ClaimStatus::pass;
          r.detail = "aut order " + verdict.aut_order.str() + " = |G|";
        } else {
          r.status = ClaimStatus::failed;
          r.detail = "aut order " + verdict.aut_order.str() + " != " + std::to_string(g.order());
          if (verdict.witness_extra_automorphism) r.detail += "; extra automorphism " + perm::to_cycles(*verdict.witness_extra_automorphism);
        }
        return done();
      }
      case Expectation::not_exists: {
        const auto o = detail::run_search(g, claim, opt);
        r.search = o.status;
        r.candidates_examined = o.candidates_examined;
        r.candidates_total = o.total;
        if (o.status == SearchStatus::exhausted_none) {
          r.status = ClaimStatus::pass;
          r.detail = "no witness among " + std::to_string(o.candidates_examined) + " candidates";
          if (o.up_to_group_automorphism) r.detail += " (up to group automorphism)";
        } else if (o.status == SearchStatus::found_witness) {
          r.status = ClaimStatus::failed;
          r.witness = detail::witness_words(g, o);
          r.detail = "witness found at candidate " + std::to_string(o.candidates_examined);
          if (o.digraph) r.detail += ": " + to_edgelist(*o.digraph);
        } else {
          r.aborted = true;
          r.detail = "search aborted: " + o.abort_reason;
        }
        return done();
      }
      case Expectation::exists_witness_unavailable: {
        const auto cls = classify(g, claim.m, claim.kind);
        if (!cls.admits) {
          r.status = ClaimStatus::failed;
          r.detail = "classification says No: " + cls.citation;
          return done();
        }
        r.status = ClaimStatus::pass;
        r.detail = "classified Yes: " + cls.citation;
        if (budget.confirm_candidates == 0) return done();
        opt.max_candidates = budget.max_candidates ? std::min(budget.max_candidates, budget.confirm_candidates)
                                                   : budget.confirm_candidates;
        opt.checkpoint_path.clear();
        const auto o = detail::run_search(g, claim, opt);
        r.search = o.status;
        r.candidates_examined = o.candidates_examined;
        r.candidates_total = o.total;
        if (o.status == SearchStatus::found_witness) {
          r.witness = detail::witness_words(g, o);
          r.detail += "; confirmed by search at candidate " + std::to_string(o.candidates_examined);
        } else if (o.status == SearchStatus::exhausted_none) {
          r.status = ClaimStatus::failed;
          r.detail = "exhaustive search found no witness";
        } else {
          r.detail += "; search budget exhausted before a witness";
        }
        return done();
      }
    }
  } catch (const Error& e) {
    r.status = ClaimStatus::failed;
    r.detail = e.what();
  }
  return done();
}

inline Report verify_all(const SuiteBudget& budget = {}, const std::vector<Claim>& claims = default_claims()) {
  Report rep;
  rep.tier = budget.tier;
  rep.results.reserve(claims.size());
  for (const auto& c : claims) rep.results.push_back(verify_claim(c, budget));
  return rep;
}

}  // namespace posr

#endif  // POSR_CATALOG_HPP
