#ifndef POSR_AUTGROUP_HPP
#define POSR_AUTGROUP_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <vector>

#include "posr/cayley.hpp"
#include "posr/digraph.hpp"
#include "posr/error.hpp"
#include "posr/permutation.hpp"
#include "posr/refine.hpp"

namespace posr {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct AutOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::ostream* trace = nullptr;  // one line per search node: "depth target-vertex hash"
};

struct AutGroupResult {
  std::vector<Permutation> generators;
  BigInt order = 1;
  std::vector<Vertex> base;
};

struct RepVerdict {
  bool is_representation = false;
  BigInt aut_order = 0;
  std::optional<Permutation> witness_extra_automorphism;
};

namespace detail {

/// Individualization-refinement search tree over one digraph.
///
/// The first path (always the leftmost branch) is computed eagerly. Other
/// leaves are compared against it: a leaf with the same invariants along its
/// path induces a candidate map, which is kept if it preserves arcs.
class IrSearch {
 public:
  struct Node {
    std::vector<std::uint32_t> color;
    std::uint32_t k = 0;
    std::uint64_t hash = 0;
    std::uint32_t target = 0;  // colour of the target cell, or k if discrete
  };

  IrSearch(const Digraph& d, const AutOptions& opt) : d_(d), refiner_(d), opt_(opt) {
    if (d.num_vertices() == 0) fail(Errc::precondition_failed, "digraph has no vertices");
    Node node = root(refiner_, d);
    for (;;) {
      path_.push_back(node);
      if (node.target == node.k) break;
      const Vertex b = first_member(node);
      base_.push_back(b);
      node = individualize(refiner_, node, b);
    }
    const auto& leaf = path_.back();
    leaf_.assign(leaf.k, 0);
    for (Vertex v = 0; v < d.num_vertices(); ++v) leaf_[leaf.color[v]] = v;
  }

  /// Number of individualized vertices on the first path.
  [[nodiscard]] std::size_t depth() const { return base_.size(); }
  [[nodiscard]] const std::vector<Vertex>& base() const { return base_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

  /// Members of the target cell at first-path level `level`, ascending.
  [[nodiscard]] std::vector<Vertex> target_cell(std::size_t level) const {
    const auto& node = path_.at(level);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < d_.num_vertices(); ++v) {
      if (node.color[v] == node.target) out.push_back(v);
    }
    return out;
  }

  /// An automorphism fixing base[0..level) and sending base[level] to v.
  std::optional<Permutation> find_mapping(std::size_t level, Vertex v) {
    Node child = individualize(refiner_, path_.at(level), v);
    return dfs(d_, refiner_, child, level + 1, v);
  }

  /// An isomorphism from this digraph onto `other`.
  std::optional<Permutation> find_isomorphism(const Digraph& other) {
    if (other.num_vertices() != d_.num_vertices() || other.num_arcs() != d_.num_arcs()) return std::nullopt;
    Refiner r(other);
    Node node = root(r, other);
    return dfs(other, r, node, 0, static_cast<Vertex>(-1));
  }

 private:
  Node root(Refiner& r, const Digraph& g) {
    Node node;
    node.color.assign(g.num_vertices(), 0);
    node.k = r.refine(node.color, 1);
    finish(r, node);
    return node;
  }

  Node individualize(Refiner& r, const Node& parent, Vertex v) const {
    Node node;
    node.color = parent.color;
    const auto c = parent.color[v];
    for (auto& x : node.color) {
      if (x > c) ++x;
      else if (x == c) x = c + 1;
    }
    node.color[v] = c;
    node.k = r.refine(node.color, parent.k + 1);
    finish(r, node);
    return node;
  }

  static void finish(const Refiner& r, Node& node) {
    node.hash = r.quotient_hash(node.k);
    std::uint32_t best = 0;
    node.target = node.k;
    for (std::uint32_t c = 0; c < node.k; ++c) {
      const auto s = r.class_size(c);
      if (s > 1 && (node.target == node.k || s < best)) {
        best = s;
        node.target = c;
      }
    }
  }

  [[nodiscard]] Vertex first_member(const Node& node) const {
    for (Vertex v = 0; v < node.color.size(); ++v) {
      if (node.color[v] == node.target) return v;
    }
    return 0;
  }

  std::optional<Permutation> dfs(const Digraph& g, Refiner& r, const Node& node, std::size_t depth, Vertex via) {
    if (++nodes_ > opt_.node_budget) fail(Errc::budget_exceeded, "automorphism search exceeded its node budget");
    if (opt_.trace) *opt_.trace << depth << ' ' << static_cast<std::int64_t>(via == static_cast<Vertex>(-1) ? -1 : via) << ' ' << node.hash << '\n';
    const Node& ref = path_[depth];
    if (node.k != ref.k || node.hash != ref.hash || node.target != ref.target) return std::nullopt;
    if (node.target == node.k) {
      Permutation p(g.num_vertices());
      for (Vertex v = 0; v < g.num_vertices(); ++v) p[leaf_[node.color[v]]] = v;
      if (maps_arcs(g, p)) return p;
      return std::nullopt;
    }
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      if (node.color[u] != node.target) continue;
      Node child = individualize(r, node, u);
      if (auto found = dfs(g, r, child, depth + 1, u)) return found;
    }
    return std::nullopt;
  }

  // p maps vertices of d_ onto vertices of g; arc counts are equal already.
  bool maps_arcs(const Digraph& g, const Permutation& p) const {
    for (Vertex u = 0; u < d_.num_vertices(); ++u) {
      if (d_.out_degree(u) != g.out_degree(p[u])) return false;
      for (auto v : d_.out_neighbors(u)) {
        if (!g.has_arc(p[u], p[v])) return false;
      }
    }
    return true;
  }

  const Digraph& d_;
  Refiner refiner_;
  AutOptions opt_;
  std::vector<Node> path_;
  std::vector<Vertex> base_;
  std::vector<Vertex> leaf_;
  std::uint64_t nodes_ = 0;
};

class OrbitPartition {
 public:
  explicit OrbitPartition(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void merge(const Permutation& p) {
    for (std::uint32_t v = 0; v < p.size(); ++v) {
      const auto a = find(v), b = find(p[v]);
      if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace detail

/// Full automorphism group, starting from the uniform colouring.
inline AutGroupResult automorphism_group(const Digraph& d, const AutOptions& opt = {}) {
  detail::IrSearch s(d, opt);
  detail::OrbitPartition orbits(d.num_vertices());
  AutGroupResult res;
  res.base = s.base();
  for (std::size_t level = s.depth(); level-- > 0;) {
    const Vertex b = s.base()[level];
    const auto cell = s.target_cell(level);
    std::vector<Vertex> failed;
    for (auto v : cell) {
      if (v == b || orbits.find(v) == orbits.find(b)) continue;
      bool skip = false;
      for (auto w : failed) skip = skip || orbits.find(w) == orbits.find(v);
      if (skip) continue;
      if (auto p = s.find_mapping(level, v)) {
        orbits.merge(*p);
        res.generators.push_back(std::move(*p));
      } else {
        failed.push_back(v);
      }
    }
    std::size_t orbit = 0;
    for (auto v : cell) orbit += orbits.find(v) == orbits.find(b) ? 1 : 0;
    res.order *= orbit;
  }
  return res;
}

namespace detail {

// The verdict from Aut = R(G) <=> (stabilizer of vertex (0,0) trivial and
// its orbit is part 0). R(G) is always inside Aut, so part 0 lies in the
// orbit; one probe per other part settles the orbit.
inline bool rep_shortcut(const PartitionedDigraph& pd, const AutOptions& opt, std::optional<Permutation>& witness) {
  const auto& d = pd.digraph;
  IrSearch s(d, opt);
  if (s.depth() == 0) return pd.group_order == 1;
  for (std::size_t level = s.depth(); level-- > 1;) {
    const Vertex b = s.base()[level];
    for (auto v : s.target_cell(level)) {
      if (v == b) continue;
      if (auto p = s.find_mapping(level, v)) {
        witness = std::move(p);
        return false;
      }
    }
  }
  const Vertex b0 = s.base()[0];
  const auto cell = s.target_cell(0);
  std::vector<bool> probed(pd.m, false);
  probed[pd.part_of(b0)] = true;
  for (auto v : cell) {
    const auto part = pd.part_of(v);
    if (probed[part]) continue;
    probed[part] = true;
    if (auto p = s.find_mapping(0, v)) {
      witness = std::move(p);
      return false;
    }
  }
  // The stabilizer of b0 is trivial and its orbit is one part; b0 need not be
  // vertex (0,0) but R(G) moves it there, so the same holds for (0,0).
  return true;
}

}  // namespace detail

/// Does the shortcut accept? Any returned witness is an automorphism outside R(G).
inline bool is_semiregular_rep_fast(const PartitionedDigraph& pd, const AutOptions& opt = {},
                                    std::optional<Permutation>* witness = nullptr) {
  std::optional<Permutation> w;
  const bool ok = detail::rep_shortcut(pd, opt, w);
  if (witness) *witness = std::move(w);
  return ok;
}

/// Is R(G) the whole automorphism group? With `shortcut` the answer yes is
/// reached without computing the full group; the order is computed in full
/// whenever the answer is no.
inline RepVerdict is_semiregular_rep(const PartitionedDigraph& pd, const GroupTable& g, const AutOptions& opt = {},
                                     bool shortcut = true) {
  if (g.order() != pd.group_order) fail(Errc::precondition_failed, "digraph was not built over this group");
  RepVerdict v;
  std::optional<Permutation> w;
  if (shortcut && detail::rep_shortcut(pd, opt, w)) {
    v.is_representation = true;
    v.aut_order = pd.group_order;
    return v;
  }
  const auto aut = automorphism_group(pd.digraph, opt);
  v.aut_order = aut.order;
  v.is_representation = aut.order == pd.group_order;
  if (v.is_representation) return v;
  if (w) {
    v.witness_extra_automorphism = std::move(w);
    return v;
  }
  const auto translations = right_translations(g, pd.m);
  for (const auto& p : aut.generators) {
    const Vertex img = p[0];
    if (img >= pd.group_order || p != translations[img]) {
      v.witness_extra_automorphism = p;
      break;
    }
  }
  return v;
}

/// Some automorphism other than the identity, if the group is nontrivial.
inline std::optional<Permutation> find_nontrivial_automorphism(const Digraph& d, const AutOptions& opt = {}) {
  detail::IrSearch s(d, opt);
  for (std::size_t level = s.depth(); level-- > 0;) {
    const Vertex b = s.base()[level];
    for (auto v : s.target_cell(level)) {
      if (v == b) continue;
      if (auto p = s.find_mapping(level, v)) return p;
    }
  }
  return std::nullopt;
}

/// Every automorphism, found by backtracking over partial bijections.
inline std::vector<Permutation> brute_force_automorphisms(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  if (n > 10) fail(Errc::too_large, "brute force is limited to 10 vertices");
  std::vector<Permutation> out;
  Permutation p(n);
  std::vector<bool> used(n, false);
  auto consistent = [&](Vertex u) {
    for (Vertex w = 0; w <= u; ++w) {
      if (d.has_arc(u, w) != d.has_arc(p[u], p[w]) || d.has_arc(w, u) != d.has_arc(p[w], p[u])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Vertex u) -> void {
    if (u == n) {
      out.push_back(p);
      return;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (used[x]) continue;
      p[u] = x;
      if (!consistent(u)) continue;
      used[x] = true;
      self(self, u + 1);
      used[x] = false;
    }
  };
  rec(rec, 0);
  return out;
}

/// An arc-preserving bijection from d1 onto d2, if one exists.
inline std::optional<Permutation> find_isomorphism(const Digraph& d1, const Digraph& d2, const AutOptions& opt = {}) {
  if (d1.num_vertices() != d2.num_vertices() || d1.num_arcs() != d2.num_arcs()) return std::nullopt;
  if (d1.num_vertices() == 0) return Permutation{};
  detail::IrSearch s(d1, opt);
  return s.find_isomorphism(d2);
}

inline bool are_isomorphic(const Digraph& d1, const Digraph& d2, const AutOptions& opt = {}) {
  return find_isomorphism(d1, d2, opt).has_value();
}

}  // namespace posr

#endif  // POSR_AUTGROUP_HPP
