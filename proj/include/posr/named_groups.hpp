#ifndef POSR_NAMED_GROUPS_HPP
#define POSR_NAMED_GROUPS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posr/error.hpp"
#include "posr/group.hpp"
#include "posr/permutation.hpp"

namespace posr {

enum class GroupKind {
  cyclic,
  klein4,
  elem_abelian_9,
  dihedral,  // parameter is the ORDER of the group, not the polygon size
  quaternion8,
  alternating4,
  heisenberg27,
  c4_semidirect_c4,
  smallgroup_16_3,
  smallgroup_32_2,
  from_permutations,
};

/// Names a concrete group. `dihedral` follows the order convention:
/// dihedral(8) is the symmetry group of the square, of order 8.
struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  std::size_t param = 1;
  std::vector<std::string> cycles;  // from_permutations only, in cycle notation

  static GroupSpec cyclic(std::size_t n) { return {GroupKind::cyclic, n, {}}; }
  static GroupSpec dihedral(std::size_t order) { return {GroupKind::dihedral, order, {}}; }
  static GroupSpec of(GroupKind k) { return {k, 0, {}}; }
  static GroupSpec permutations(std::vector<std::string> cycles) {
    return {GroupKind::from_permutations, 0, std::move(cycles)};
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Canonical text token, the inverse of parse_group_spec.
inline std::string to_token(const GroupSpec& s) {
  switch (s.kind) {
    case GroupKind::cyclic: return "cyclic:" + std::to_string(s.param);
    case GroupKind::klein4: return "klein4";
    case GroupKind::elem_abelian_9: return "elem_abelian_9";
    case GroupKind::dihedral: return "dihedral:" + std::to_string(s.param);
    case GroupKind::quaternion8: return "quaternion8";
    case GroupKind::alternating4: return "alternating4";
    case GroupKind::heisenberg27: return "heisenberg27";
    case GroupKind::c4_semidirect_c4: return "c4_semidirect_c4";
    case GroupKind::smallgroup_16_3: return "smallgroup:16:3";
    case GroupKind::smallgroup_32_2: return "smallgroup:32:2";
    case GroupKind::from_permutations: {
      std::string t = "perm:";
      for (std::size_t i = 0; i < s.cycles.size(); ++i) t += (i ? ";" : "") + s.cycles[i];
      return t;
    }
  }
  return "?";
}

/// Human-facing short name used in reports.
inline std::string display_name(const GroupSpec& s) {
  switch (s.kind) {
    case GroupKind::cyclic: return "Z" + std::to_string(s.param);
    case GroupKind::klein4: return "Z2^2";
    case GroupKind::elem_abelian_9: return "Z3^2";
    case GroupKind::dihedral: return "D" + std::to_string(s.param);
    case GroupKind::quaternion8: return "Q8";
    case GroupKind::alternating4: return "A4";
    case GroupKind::heisenberg27: return "He3";
    case GroupKind::c4_semidirect_c4: return "C4:C4";
    case GroupKind::smallgroup_16_3: return "SmallGroup(16,3)";
    case GroupKind::smallgroup_32_2: return "SmallGroup(32,2)";
    case GroupKind::from_permutations: return to_token(s);
  }
  return "?";
}

namespace detail {

inline std::size_t parse_size(std::string_view s, std::string_view whole) {
  if (s.empty()) fail(Errc::parse_error, "missing number in group token '" + std::string(whole) + "'");
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') fail(Errc::parse_error, "bad number in group token '" + std::string(whole) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

/// Accepts tokens such as "cyclic:12", "dihedral:8", "smallgroup:16:3",
/// "klein4", "q8", "a4", "he3", "perm:(0 1 2);(0 1)".
inline GroupSpec parse_group_spec(std::string_view token) {
  auto starts = [&](std::string_view p) { return token.substr(0, p.size()) == p; };
  if (starts("cyclic:")) return GroupSpec::cyclic(detail::parse_size(token.substr(7), token));
  if (starts("z:")) return GroupSpec::cyclic(detail::parse_size(token.substr(2), token));
  if (starts("dihedral:")) return GroupSpec::dihedral(detail::parse_size(token.substr(9), token));
  if (starts("perm:")) {
    std::vector<std::string> cycles;
    std::string_view rest = token.substr(5);
    while (!rest.empty()) {
      auto pos = rest.find(';');
      cycles.emplace_back(rest.substr(0, pos));
      if (pos == std::string_view::npos) break;
      rest = rest.substr(pos + 1);
    }
    return GroupSpec::permutations(std::move(cycles));
  }
  if (token == "smallgroup:16:3") return GroupSpec::of(GroupKind::smallgroup_16_3);
  if (token == "smallgroup:32:2") return GroupSpec::of(GroupKind::smallgroup_32_2);
  if (token == "smallgroup:4:2") return GroupSpec::of(GroupKind::klein4);
  if (token == "smallgroup:9:2") return GroupSpec::of(GroupKind::elem_abelian_9);
  if (token == "smallgroup:8:4") return GroupSpec::of(GroupKind::quaternion8);
  if (token == "smallgroup:12:3") return GroupSpec::of(GroupKind::alternating4);
  if (token == "smallgroup:27:3") return GroupSpec::of(GroupKind::heisenberg27);
  if (token == "smallgroup:16:4") return GroupSpec::of(GroupKind::c4_semidirect_c4);
  if (token == "klein4" || token == "z2xz2") return GroupSpec::of(GroupKind::klein4);
  if (token == "elem_abelian_9" || token == "z3xz3") return GroupSpec::of(GroupKind::elem_abelian_9);
  if (token == "quaternion8" || token == "q8") return GroupSpec::of(GroupKind::quaternion8);
  if (token == "alternating4" || token == "a4") return GroupSpec::of(GroupKind::alternating4);
  if (token == "heisenberg27" || token == "he3") return GroupSpec::of(GroupKind::heisenberg27);
  if (token == "c4_semidirect_c4" || token == "c4:c4") return GroupSpec::of(GroupKind::c4_semidirect_c4);
  fail(Errc::parse_error, "unknown group token '" + std::string(token) + "'");
}

namespace detail {

/// Right-regular permutation representation of a group given by a product rule
/// on indices 0..n-1 (identity must be index 0).
inline std::vector<Permutation> right_regular(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                              std::span<const std::size_t> gens) {
  std::vector<Permutation> out;
  for (auto g : gens) {
    Permutation p(n);
    for (std::size_t a = 0; a < n; ++a) p[a] = static_cast<std::uint32_t>(mul(a, g));
    out.push_back(std::move(p));
  }
  return out;
}

inline std::size_t mod(long long a, long long m) { return static_cast<std::size_t>(((a % m) + m) % m); }

/// a^i b^j c^k with c = [a,b] central of order 2, i mod p, j mod q.
inline GroupTable class_two_group(long long p, long long q, std::size_t y_index) {
  const auto n = static_cast<std::size_t>(p * q * 2);
  auto enc = [&](long long i, long long j, long long k) { return mod(k, 2) * static_cast<std::size_t>(p * q) + mod(j, q) * static_cast<std::size_t>(p) + mod(i, p); };
  auto mul = [&](std::size_t u, std::size_t v) {
    const long long i = static_cast<long long>(u) % p, j = (static_cast<long long>(u) / p) % q, k = static_cast<long long>(u) / (p * q);
    const long long i2 = static_cast<long long>(v) % p, j2 = (static_cast<long long>(v) / p) % q, k2 = static_cast<long long>(v) / (p * q);
    return enc(i + i2, j + j2, k + k2 + j * i2);
  };
  const std::array<std::size_t, 2> gens{enc(1, 0, 0), y_index};
  auto perms = right_regular(n, mul, gens);
  return group_from_permutations(perms);
}

}  // namespace detail

/// Concrete table for a named group with its distinguished generators.
inline GroupTable named_group(const GroupSpec& spec) {
  using detail::mod;
  switch (spec.kind) {
    case GroupKind::cyclic: {
      if (spec.param < 1) fail(Errc::invalid_parameter, "cyclic group order must be positive");
      Permutation x(spec.param);
      for (std::size_t i = 0; i < spec.param; ++i) x[i] = static_cast<std::uint32_t>((i + 1) % spec.param);
      return group_from_permutations(std::vector<Permutation>{x});
    }
    case GroupKind::klein4:
      return group_from_permutations(std::vector<Permutation>{{1, 0, 3, 2}, {2, 3, 0, 1}});
    case GroupKind::elem_abelian_9:
      return group_from_permutations(std::vector<Permutation>{{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}});
    case GroupKind::dihedral: {
      if (spec.param < 4 || spec.param % 2 != 0) {
        fail(Errc::invalid_parameter, "dihedral order must be even and at least 4, got " + std::to_string(spec.param));
      }
      // Elements (i, s) = x^i y^s with (i,s)(j,t) = (i + (-1)^s j, s + t).
      const auto k = static_cast<long long>(spec.param / 2);
      auto mul = [k](std::size_t u, std::size_t v) {
        const long long i = static_cast<long long>(u) % k, s = static_cast<long long>(u) / k;
        const long long j = static_cast<long long>(v) % k, t = static_cast<long long>(v) / k;
        return mod(i + (s ? -j : j), k) + static_cast<std::size_t>(k) * mod(s + t, 2);
      };
      const std::array<std::size_t, 2> gens{1, static_cast<std::size_t>(k)};
      return group_from_permutations(detail::right_regular(spec.param, mul, gens));
    }
    case GroupKind::quaternion8: {
      // Units 1,i,j,k with signs; index = 4*sign + unit.
      static constexpr int table[4][4][2] = {
          {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
          {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
          {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
          {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
      };
      auto mul = [](std::size_t u, std::size_t v) {
        const auto& r = table[u % 4][v % 4];
        const std::size_t sign = (u / 4 + v / 4 + static_cast<std::size_t>(r[1])) % 2;
        return sign * 4 + static_cast<std::size_t>(r[0]);
      };
      const std::array<std::size_t, 2> gens{1, 2};
      return group_from_permutations(detail::right_regular(8, mul, gens));
    }
    case GroupKind::alternating4:
      return group_from_permutations(std::vector<Permutation>{{1, 2, 0, 3}, {1, 0, 3, 2}});
    case GroupKind::heisenberg27: {
      // Affine maps on Z3^2: x:(a,b)->(a+1,b), y:(a,b)->(a,b+a).
      Permutation x(9), y(9);
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
          x[3 * a + b] = static_cast<std::uint32_t>(3 * ((a + 1) % 3) + b);
          y[3 * a + b] = static_cast<std::uint32_t>(3 * a + (b + a) % 3);
        }
      }
      auto t = group_from_permutations(std::vector<Permutation>{x, y});
      t.add_named_element("z", evaluate_word(t, "x^-1y^-1xy"));
      return t;
    }
    case GroupKind::c4_semidirect_c4: {
      // x^i y^j with y^-1 x y = x^-1.
      auto mul = [](std::size_t u, std::size_t v) {
        const long long i = static_cast<long long>(u % 4), j = static_cast<long long>(u / 4);
        const long long k = static_cast<long long>(v % 4), l = static_cast<long long>(v / 4);
        return mod(i + (j % 2 ? -k : k), 4) + 4 * mod(j + l, 4);
      };
      const std::array<std::size_t, 2> gens{1, 4};
      return group_from_permutations(detail::right_regular(16, mul, gens));
    }
    case GroupKind::smallgroup_16_3:
      // a of order 4, b of order 2, c = [a,b] central; generators x = a, y = ab.
      return detail::class_two_group(4, 2, 1 + 4);
    case GroupKind::smallgroup_32_2:
      // a, b of order 4, c = [a,b] central of order 2; generators x = a, y = b.
      return detail::class_two_group(4, 4, 4);
    case GroupKind::from_permutations: {
      if (spec.cycles.empty()) fail(Errc::empty_generator_list, "perm: token without generators");
      std::size_t degree = 1;
      for (const auto& c : spec.cycles) degree = std::max(degree, perm::cycles_degree(c));
      std::vector<Permutation> gens;
      for (const auto& c : spec.cycles) gens.push_back(perm::parse_cycles(c, degree));
      return group_from_permutations(gens);
    }
  }
  fail(Errc::invalid_parameter, "unknown group kind");
}

/// Defining relations of each named group, as (lhs, rhs) word pairs.
inline std::vector<std::pair<std::string, std::string>> presentation(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::cyclic: return {{"x^" + std::to_string(spec.param), "1"}};
    case GroupKind::klein4: return {{"x^2", "1"}, {"y^2", "1"}, {"xy", "yx"}};
    case GroupKind::elem_abelian_9: return {{"x^3", "1"}, {"y^3", "1"}, {"xy", "yx"}};
    case GroupKind::dihedral:
      return {{"x^" + std::to_string(spec.param / 2), "1"}, {"y^2", "1"}, {"xyx", "y^-1"}};
    case GroupKind::quaternion8: return {{"x^4", "1"}, {"x^2", "y^2"}, {"y^-1xy", "x^-1"}};
    case GroupKind::alternating4: return {{"x^3", "1"}, {"y^2", "1"}, {"(xy)^3", "1"}};
    case GroupKind::heisenberg27:
      return {{"x^3", "1"}, {"y^3", "1"}, {"z^3", "1"}, {"x^-1y^-1xy", "z"}, {"xz", "zx"}, {"yz", "zy"}};
    case GroupKind::c4_semidirect_c4: return {{"x^4", "1"}, {"y^4", "1"}, {"xyx", "y"}, {"y", "x^2yx^2"}};
    case GroupKind::smallgroup_16_3:
      return {{"x^4", "1"}, {"y^4", "1"}, {"(xy)^2", "1"}, {"y", "x^2yx^2"}, {"x", "y^2xy^2"}};
    case GroupKind::smallgroup_32_2:
      return {{"x^4", "1"}, {"y^4", "1"}, {"(xy)^4", "1"}, {"(yx)^4", "1"}, {"(x^2y)^4", "1"},
              {"y", "x^2yx^2"}, {"x", "y^2xy^2"}};
    case GroupKind::from_permutations: return {};
  }
  return {};
}

/// Orders the presentation pins down (for groups where the relations alone
/// do not force it, the expected order is still checked).
inline std::size_t expected_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::cyclic: return spec.param;
    case GroupKind::klein4: return 4;
    case GroupKind::elem_abelian_9: return 9;
    case GroupKind::dihedral: return spec.param;
    case GroupKind::quaternion8: return 8;
    case GroupKind::alternating4: return 12;
    case GroupKind::heisenberg27: return 27;
    case GroupKind::c4_semidirect_c4: return 16;
    case GroupKind::smallgroup_16_3: return 16;
    case GroupKind::smallgroup_32_2: return 32;
    case GroupKind::from_permutations: return 0;
  }
  return 0;
}

}  // namespace posr

#endif  // POSR_NAMED_GROUPS_HPP
