#ifndef POSR_REFINE_HPP
#define POSR_REFINE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "posr/digraph.hpp"
#include "posr/error.hpp"

namespace posr {

/// Vertex colouring with colours 0..num_colors-1, all non-empty.
struct Coloring {
  std::vector<std::uint32_t> color;
  std::uint32_t num_colors = 0;
  bool equitable = false;

  static Coloring uniform(std::size_t n) { return {std::vector<std::uint32_t>(n, 0), n ? 1U : 0U, false}; }

  [[nodiscard]] bool is_discrete() const { return num_colors == color.size(); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Same-coloured vertices see the same number of out- and in-neighbours in
/// every colour class.
inline bool is_equitable(const Digraph& d, const Coloring& c) {
  const std::size_t n = d.num_vertices();
  const std::size_t k = c.num_colors;
  std::vector<std::int64_t> first(k, -1);
  std::vector<std::uint32_t> vec(2 * k), ref(2 * k * k, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(vec.begin(), vec.end(), 0);
    for (auto w : d.out_neighbors(v)) ++vec[c.color[w]];
    for (auto w : d.in_neighbors(v)) ++vec[k + c.color[w]];
    const auto col = c.color[v];
    std::uint32_t* r = ref.data() + 2 * k * col;
    if (first[col] < 0) {
      first[col] = v;
      std::copy(vec.begin(), vec.end(), r);
    } else if (!std::equal(vec.begin(), vec.end(), r)) {
      return false;
    }
  }
  return true;
}

/// Colour refinement with reusable scratch space.
///
/// Each round orders vertices by (old colour, out-colour-count vector,
/// in-colour-count vector), comparing count vectors lexicographically, and
/// renumbers colours in that order. Rounds repeat until no class splits,
/// which yields the coarsest equitable refinement. Numbering depends only on
/// the structure, never on vertex labels.
class Refiner {
 public:
  explicit Refiner(const Digraph& d)
      : d_(&d),
        out_keys_(d.num_arcs()),
        in_keys_(d.num_arcs()),
        order_(d.num_vertices()),
        start_(d.num_vertices() + 1),
        next_color_(d.num_vertices()) {}

  /// Refines `color` (num_colors k) in place and returns the new number of colours.
  std::uint32_t refine(std::span<std::uint32_t> color, std::uint32_t k) {
    const std::size_t n = d_->num_vertices();
    if (n == 0) return 0;
    sort_by_color(color, k);
    for (;;) {
      fill_keys(color);
      for (std::uint32_t c = 0; c < k; ++c) {
        if (start_[c + 1] - start_[c] > 1) {
          std::sort(order_.begin() + start_[c], order_.begin() + start_[c + 1],
                    [&](Vertex a, Vertex b) { return key_less(a, b); });
        }
      }
      std::uint32_t nk = 0;
      for (std::size_t p = 0; p < n; ++p) {
        const Vertex v = order_[p];
        if (p > 0) {
          const Vertex u = order_[p - 1];
          if (color[u] != color[v] || key_less(u, v)) ++nk;
        }
        next_color_[v] = nk;
      }
      ++nk;
      if (nk == k) break;
      for (std::size_t p = 0; p < n; ++p) {
        const Vertex v = order_[p];
        color[v] = next_color_[v];
        if (p == 0 || next_color_[order_[p - 1]] != next_color_[v]) start_[next_color_[v]] = static_cast<std::uint32_t>(p);
      }
      start_[nk] = static_cast<std::uint32_t>(n);
      k = nk;
    }
    return k;
  }

  /// Hash of the quotient (class sizes and colour-degree lists) of the last
  /// refinement result. Equal structures give equal hashes.
  [[nodiscard]] std::uint64_t quotient_hash(std::uint32_t k) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ k;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ULL;
    };
    const auto oo = d_->out_offsets();
    const auto io = d_->in_offsets();
    for (std::uint32_t c = 0; c < k; ++c) {
      mix(start_[c + 1] - start_[c]);
      const Vertex r = order_[start_[c]];
      mix(oo[r + 1] - oo[r]);
      for (auto i = oo[r]; i < oo[r + 1]; ++i) mix(out_keys_[i]);
      mix(io[r + 1] - io[r]);
      for (auto i = io[r]; i < io[r + 1]; ++i) mix(in_keys_[i]);
    }
    return h;
  }

  /// Class sizes of the last refinement result, by colour.
  [[nodiscard]] std::uint32_t class_size(std::uint32_t c) const { return start_[c + 1] - start_[c]; }
  /// Vertices of colour c in the last refinement result (not sorted by index).
  [[nodiscard]] std::span<const Vertex> class_members(std::uint32_t c) const {
    return {order_.data() + start_[c], start_[c + 1] - start_[c]};
  }

 private:
  void sort_by_color(std::span<const std::uint32_t> color, std::uint32_t k) {
    const std::size_t n = d_->num_vertices();
    std::fill(start_.begin(), start_.begin() + k + 1, 0);
    for (std::size_t v = 0; v < n; ++v) ++start_[color[v] + 1];
    for (std::uint32_t c = 0; c < k; ++c) start_[c + 1] += start_[c];
    std::vector<std::uint32_t>& fill = next_color_;
    std::copy(start_.begin(), start_.begin() + k, fill.begin());
    for (std::size_t v = 0; v < n; ++v) order_[fill[color[v]]++] = static_cast<Vertex>(v);
  }

  void fill_keys(std::span<const std::uint32_t> color) {
    const std::size_t n = d_->num_vertices();
    const auto oo = d_->out_offsets();
    const auto io = d_->in_offsets();
    for (Vertex v = 0; v < n; ++v) {
      std::size_t i = oo[v];
      for (auto w : d_->out_neighbors(v)) out_keys_[i++] = color[w];
      insertion_sort(out_keys_.data() + oo[v], out_keys_.data() + oo[v + 1]);
      i = io[v];
      for (auto w : d_->in_neighbors(v)) in_keys_[i++] = color[w];
      insertion_sort(in_keys_.data() + io[v], in_keys_.data() + io[v + 1]);
    }
  }

  static void insertion_sort(std::uint32_t* first, std::uint32_t* last) {
    for (auto* i = first + (first != last ? 1 : 0); i < last; ++i) {
      const auto x = *i;
      auto* j = i;
      while (j > first && *(j - 1) > x) {
        *j = *(j - 1);
        --j;
      }
      *j = x;
    }
  }

  // Sorted colour lists compared so that the order agrees with lexicographic
  // order on dense count vectors: at the first difference, the list holding
  // the smaller colour has the larger count there.
  [[nodiscard]] bool key_less(Vertex a, Vertex b) const {
    const auto oo = d_->out_offsets();
    const auto io = d_->in_offsets();
    const int c = compare_lists(out_keys_.data() + oo[a], out_keys_.data() + oo[a + 1],
                                out_keys_.data() + oo[b], out_keys_.data() + oo[b + 1]);
    if (c != 0) return c < 0;
    return compare_lists(in_keys_.data() + io[a], in_keys_.data() + io[a + 1],
                         in_keys_.data() + io[b], in_keys_.data() + io[b + 1]) < 0;
  }

  static int compare_lists(const std::uint32_t* a, const std::uint32_t* ae, const std::uint32_t* b,
                           const std::uint32_t* be) {
    for (; a != ae && b != be; ++a, ++b) {
      if (*a != *b) return *a < *b ? 1 : -1;
    }
    if (a == ae && b == be) return 0;
    return a == ae ? -1 : 1;
  }

  const Digraph* d_;
  std::vector<std::uint32_t> out_keys_;
  std::vector<std::uint32_t> in_keys_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> next_color_;
};

/// Coarsest equitable colouring refining `initial`.
inline Coloring equitable_refine(const Digraph& d, const Coloring& initial) {
  if (initial.color.size() != d.num_vertices()) fail(Errc::invalid_parameter, "colouring size mismatch");
  Coloring c = initial;
  // Compact the colour indices first, keeping their relative order.
  std::vector<std::uint32_t> used;
  used.assign(c.color.begin(), c.color.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& x : c.color) x = static_cast<std::uint32_t>(std::lower_bound(used.begin(), used.end(), x) - used.begin());
  Refiner r(d);
  c.num_colors = r.refine(c.color, static_cast<std::uint32_t>(used.size()));
  c.equitable = true;
  return c;
}

}  // namespace posr

#endif  // POSR_REFINE_HPP
