#ifndef POSR_CAYLEY_HPP
#define POSR_CAYLEY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "posr/digraph.hpp"
#include "posr/error.hpp"
#include "posr/group.hpp"

namespace posr {

/// An m x m array of connection sets T[i][j], each a sorted, duplicate-free
/// list of group elements.
class ConnectionSets {
 public:
  ConnectionSets() = default;

  explicit ConnectionSets(std::size_t m) : m_(m), cells_(m * m) {
    if (m < 1) fail(Errc::invalid_parameter, "m must be positive");
  }

  ConnectionSets(std::size_t m, std::vector<std::vector<Element>> cells) : m_(m), cells_(std::move(cells)) {
    if (m < 1) fail(Errc::invalid_parameter, "m must be positive");
    if (cells_.size() != m * m) fail(Errc::invalid_connection_sets, "expected m*m cells");
    for (auto& c : cells_) normalize(c);
  }

  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] const std::vector<Element>& cell(std::size_t i, std::size_t j) const { return cells_.at(i * m_ + j); }
  [[nodiscard]] const std::vector<std::vector<Element>>& cells() const noexcept { return cells_; }

  void set(std::size_t i, std::size_t j, std::vector<Element> elems) {
    normalize(elems);
    cells_.at(i * m_ + j) = std::move(elems);
  }

  [[nodiscard]] std::size_t row_sum(std::size_t i) const {
    std::size_t s = 0;
    for (std::size_t j = 0; j < m_; ++j) s += cell(i, j).size();
    return s;
  }
  [[nodiscard]] std::size_t col_sum(std::size_t j) const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < m_; ++i) s += cell(i, j).size();
    return s;
  }

  void check_indices(const GroupTable& g) const {
    for (const auto& c : cells_) {
      for (auto e : c) {
        if (e >= g.order()) fail(Errc::index_out_of_range, "element " + std::to_string(e) + " outside group of order " + std::to_string(g.order()));
      }
    }
  }

  friend bool operator==(const ConnectionSets&, const ConnectionSets&) = default;
  friend auto operator<=>(const ConnectionSets&, const ConnectionSets&) = default;

 private:
  static void normalize(std::vector<Element>& c) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
      fail(Errc::invalid_connection_sets, "duplicate element in a connection set");
    }
  }

  std::size_t m_ = 0;
  std::vector<std::vector<Element>> cells_;
};

/// m-Cayley digraph over G with vertex (i, g) numbered i*|G| + g.
struct PartitionedDigraph {
  Digraph digraph;
  std::size_t group_order = 0;
  std::size_t m = 0;

  [[nodiscard]] Vertex vertex(std::size_t part, Element g) const {
    return static_cast<Vertex>(part * group_order + g);
  }
  [[nodiscard]] std::size_t part_of(Vertex v) const { return v / group_order; }
};

/// Arcs (i, h) -> (j, t*h) for every t in T[i][j] and every h in G.
inline PartitionedDigraph build_cayley(const GroupTable& g, const ConnectionSets& conn) {
  conn.check_indices(g);
  const std::size_t n = g.order();
  const std::size_t m = conn.m();
  std::vector<std::uint32_t> offsets(m * n + 1, 0);
  std::vector<Vertex> targets;
  std::size_t total = 0;
  for (std::size_t i = 0; i < m; ++i) total += conn.row_sum(i) * n;
  targets.reserve(total);
  for (std::size_t i = 0; i < m; ++i) {
    for (Element h = 0; h < n; ++h) {
      for (std::size_t j = 0; j < m; ++j) {
        for (auto t : conn.cell(i, j)) targets.push_back(static_cast<Vertex>(j * n + g.mul(t, h)));
      }
      offsets[i * n + h + 1] = static_cast<std::uint32_t>(targets.size());
    }
  }
  return {Digraph::from_rows(m * n, std::move(offsets), std::move(targets)), n, m};
}

struct ValidationReport {
  bool oriented = false;
  bool partite = false;
  bool regular = false;
  bool connected = false;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// oriented: no t in T[i][j] with t^-1 in T[j][i] (i = j included);
/// partite: every diagonal cell empty; regular: all row and column sums
/// equal `valency`; connected: the built digraph is weakly connected.
inline ValidationReport validate_sets(const GroupTable& g, const ConnectionSets& conn, std::size_t valency) {
  conn.check_indices(g);
  ValidationReport r;
  const std::size_t m = conn.m();
  r.oriented = true;
  for (std::size_t i = 0; i < m && r.oriented; ++i) {
    for (std::size_t j = 0; j < m && r.oriented; ++j) {
      const auto& back = conn.cell(j, i);
      for (auto t : conn.cell(i, j)) {
        if (std::binary_search(back.begin(), back.end(), g.inv(t))) {
          r.oriented = false;
          break;
        }
      }
    }
  }
  r.partite = true;
  for (std::size_t i = 0; i < m; ++i) r.partite = r.partite && conn.cell(i, i).empty();
  r.regular = true;
  for (std::size_t i = 0; i < m; ++i) {
    r.regular = r.regular && conn.row_sum(i) == valency && conn.col_sum(i) == valency;
  }
  r.connected = build_cayley(g, conn).digraph.is_weakly_connected();
  return r;
}

/// R(g): (i, h) -> (i, h*g), one permutation per group element.
inline std::vector<Permutation> right_translations(const GroupTable& g, std::size_t m) {
  const std::size_t n = g.order();
  std::vector<Permutation> out;
  out.reserve(n);
  for (Element s = 0; s < n; ++s) {
    Permutation p(m * n);
    for (std::size_t i = 0; i < m; ++i) {
      for (Element h = 0; h < n; ++h) p[i * n + h] = static_cast<std::uint32_t>(i * n + g.mul(h, s));
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Level sets N^0(v) = {v}, N^k(v) = union of out-neighbourhoods of N^{k-1}(v).
/// Levels are not deduplicated against each other.
inline std::vector<std::vector<Vertex>> out_ball(const Digraph& d, Vertex v, std::size_t radius) {
  if (v >= d.num_vertices()) fail(Errc::index_out_of_range, "vertex out of range");
  std::vector<std::vector<Vertex>> levels{{v}};
  for (std::size_t k = 1; k <= radius; ++k) {
    std::vector<bool> in(d.num_vertices(), false);
    for (auto u : levels.back()) {
      for (auto w : d.out_neighbors(u)) in[w] = true;
    }
    std::vector<Vertex> next;
    for (Vertex w = 0; w < d.num_vertices(); ++w) {
      if (in[w]) next.push_back(w);
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

// ---------------------------------------------------------------------------
// Connection sets written with generator words

/// Cells as generator words, e.g. {{}, {"1","x","x^2"}}, {{"x","x^3","x^4"}, {}}.
struct WordSets {
  std::size_t m = 0;
  std::vector<std::vector<std::vector<std::string>>> cells;  // [i][j] -> words

  static WordSets empty(std::size_t m) {
    return {m, std::vector<std::vector<std::vector<std::string>>>(m, std::vector<std::vector<std::string>>(m))};
  }

  friend bool operator==(const WordSets&, const WordSets&) = default;
};

inline ConnectionSets resolve(const GroupTable& g, const WordSets& w) {
  if (w.cells.size() != w.m) fail(Errc::invalid_connection_sets, "row count does not match m");
  ConnectionSets out(w.m);
  for (std::size_t i = 0; i < w.m; ++i) {
    if (w.cells[i].size() != w.m) fail(Errc::invalid_connection_sets, "column count does not match m");
    for (std::size_t j = 0; j < w.m; ++j) {
      std::vector<Element> elems;
      for (const auto& word : w.cells[i][j]) elems.push_back(evaluate_word(g, word));
      out.set(i, j, std::move(elems));
    }
  }
  return out;
}

/// Each element written by its BFS word in the table.
inline WordSets to_words(const GroupTable& g, const ConnectionSets& c) {
  auto w = WordSets::empty(c.m());
  for (std::size_t i = 0; i < c.m(); ++i) {
    for (std::size_t j = 0; j < c.m(); ++j) {
      for (auto e : c.cell(i, j)) w.cells[i][j].push_back(g.word(e));
    }
  }
  return w;
}

/// The connection sets of a digraph viewed as an m-Cayley digraph of the
/// trivial group: T[i][j] = {1} iff i -> j.
inline ConnectionSets trivial_group_sets(const Digraph& d) {
  ConnectionSets c(d.num_vertices());
  for (const auto& [u, v] : d.arcs()) c.set(u, v, {0});
  return c;
}

}  // namespace posr

#endif  // POSR_CAYLEY_HPP
