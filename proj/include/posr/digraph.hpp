#ifndef POSR_DIGRAPH_HPP
#define POSR_DIGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "posr/error.hpp"
#include "posr/permutation.hpp"

namespace posr {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/// Directed graph with sorted out- and in-adjacency in compressed rows.
/// Loops are representable; duplicate arcs are rejected.
class Digraph {
 public:
  Digraph() = default;

  Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n) {
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
      fail(Errc::invalid_parameter, "duplicate arc");
    }
    for (const auto& [u, v] : arcs) {
      if (u >= n || v >= n) fail(Errc::index_out_of_range, "arc endpoint out of range");
    }
    build(arcs);
  }

  /// Builds from out-rows: row v is targets[offsets[v] .. offsets[v+1]).
  /// Rows need not be sorted.
  static Digraph from_rows(std::size_t n, std::vector<std::uint32_t> offsets, std::vector<Vertex> targets) {
    if (offsets.size() != n + 1 || offsets.back() != targets.size()) {
      fail(Errc::invalid_parameter, "row offsets do not match targets");
    }
    Digraph d;
    d.n_ = n;
    for (std::size_t v = 0; v < n; ++v) {
      auto first = targets.begin() + offsets[v];
      auto last = targets.begin() + offsets[v + 1];
      std::sort(first, last);
      if (std::adjacent_find(first, last) != last) fail(Errc::invalid_parameter, "duplicate arc");
    }
    for (auto t : targets) {
      if (t >= n) fail(Errc::index_out_of_range, "arc endpoint out of range");
    }
    d.out_off_ = std::move(offsets);
    d.out_ = std::move(targets);
    d.in_off_.assign(n + 1, 0);
    for (auto t : d.out_) ++d.in_off_[t + 1];
    for (std::size_t i = 0; i < n; ++i) d.in_off_[i + 1] += d.in_off_[i];
    d.in_.resize(d.out_.size());
    std::vector<std::uint32_t> fill(d.in_off_.begin(), d.in_off_.end() - 1);
    for (Vertex u = 0; u < n; ++u) {
      for (auto k = d.out_off_[u]; k < d.out_off_[u + 1]; ++k) d.in_[fill[d.out_[k]]++] = u;
    }
    return d;
  }

  [[nodiscard]] std::size_t num_vertices() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_arcs() const noexcept { return out_.size(); }

  [[nodiscard]] std::span<const Vertex> out_neighbors(Vertex v) const {
    return {out_.data() + out_off_[v], out_off_[v + 1] - out_off_[v]};
  }
  [[nodiscard]] std::span<const Vertex> in_neighbors(Vertex v) const {
    return {in_.data() + in_off_[v], in_off_[v + 1] - in_off_[v]};
  }
  [[nodiscard]] std::size_t out_degree(Vertex v) const { return out_off_[v + 1] - out_off_[v]; }
  [[nodiscard]] std::size_t in_degree(Vertex v) const { return in_off_[v + 1] - in_off_[v]; }

  /// Offsets into the flat adjacency arrays; used by the refinement code.
  [[nodiscard]] std::span<const std::uint32_t> out_offsets() const noexcept { return out_off_; }
  [[nodiscard]] std::span<const std::uint32_t> in_offsets() const noexcept { return in_off_; }

  [[nodiscard]] bool has_arc(Vertex u, Vertex v) const {
    auto row = out_neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  [[nodiscard]] bool has_loops() const {
    for (Vertex v = 0; v < n_; ++v) {
      if (has_arc(v, v)) return true;
    }
    return false;
  }

  /// Arcs in (u, v) lexicographic order.
  [[nodiscard]] std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(num_arcs());
    for (Vertex u = 0; u < n_; ++u) {
      for (auto v : out_neighbors(u)) out.emplace_back(u, v);
    }
    return out;
  }

  /// No loops and no pair of opposite arcs.
  [[nodiscard]] bool is_oriented() const {
    for (Vertex u = 0; u < n_; ++u) {
      for (auto v : out_neighbors(u)) {
        if (u == v || has_arc(v, u)) return false;
      }
    }
    return true;
  }

  [[nodiscard]] bool is_regular(std::size_t k) const {
    for (Vertex v = 0; v < n_; ++v) {
      if (out_degree(v) != k || in_degree(v) != k) return false;
    }
    return true;
  }

  [[nodiscard]] bool is_weakly_connected() const {
    if (n_ == 0) return true;
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (auto nb : {out_neighbors(v), in_neighbors(v)}) {
        for (auto w : nb) {
          if (!seen[w]) {
            seen[w] = true;
            ++count;
            stack.push_back(w);
          }
        }
      }
    }
    return count == n_;
  }

  /// True iff p maps the arc set onto itself.
  [[nodiscard]] bool is_automorphism(std::span<const std::uint32_t> p) const {
    if (p.size() != n_) return false;
    for (Vertex u = 0; u < n_; ++u) {
      const Vertex pu = p[u];
      if (out_degree(u) != out_degree(pu)) return false;
      for (auto v : out_neighbors(u)) {
        if (!has_arc(pu, p[v])) return false;
      }
    }
    return true;
  }

  [[nodiscard]] Digraph relabeled(std::span<const std::uint32_t> p) const {
    std::vector<Arc> a;
    a.reserve(num_arcs());
    for (const auto& [u, v] : arcs()) a.emplace_back(p[u], p[v]);
    return {n_, std::move(a)};
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_off_ == b.out_off_ && a.out_ == b.out_;
  }

 private:
  void build(const std::vector<Arc>& sorted) {
    out_off_.assign(n_ + 1, 0);
    in_off_.assign(n_ + 1, 0);
    for (const auto& [u, v] : sorted) {
      ++out_off_[u + 1];
      ++in_off_[v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) {
      out_off_[i + 1] += out_off_[i];
      in_off_[i + 1] += in_off_[i];
    }
    out_.resize(sorted.size());
    in_.resize(sorted.size());
    std::vector<std::uint32_t> fill(in_off_.begin(), in_off_.end() - 1);
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      out_[k] = sorted[k].second;
      in_[fill[sorted[k].second]++] = sorted[k].first;
    }
    // Arcs are sorted by (u, v), so each in-row is already ascending in u.
  }

  std::size_t n_ = 0;
  std::vector<std::uint32_t> out_off_{0};
  std::vector<std::uint32_t> in_off_{0};
  std::vector<Vertex> out_;
  std::vector<Vertex> in_;
};

// ---------------------------------------------------------------------------
// Text formats

/// Edge-list format: '#' comments, a header "n <count>", then one "u v" per arc.
inline std::string to_edgelist(const Digraph& d) {
  std::string s = "n " + std::to_string(d.num_vertices()) + "\n";
  for (const auto& [u, v] : d.arcs()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

inline Digraph parse_edgelist(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Arc> arcs;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      long long count = -1;
      if (!(ls >> tag >> count) || tag != "n" || count < 0) {
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected 'n <vertex-count>'");
      }
      n = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    long long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra) || u < 0 || v < 0) {
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected 'u v'");
    }
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) fail(Errc::parse_error, "missing 'n <vertex-count>' header");
  return {n, std::move(arcs)};
}

inline Digraph parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  return parse_edgelist(in);
}

inline std::string to_dot(const Digraph& d, const std::string& name = "G") {
  std::string s = "digraph " + name + " {\n";
  for (Vertex v = 0; v < d.num_vertices(); ++v) s += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : d.arcs()) s += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace posr

#endif  // POSR_DIGRAPH_HPP
