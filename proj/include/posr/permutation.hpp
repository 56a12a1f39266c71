#ifndef POSR_PERMUTATION_HPP
#define POSR_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posr/error.hpp"

namespace posr {

using BigInt = boost::multiprecision::cpp_int;

/// A permutation of 0..n-1 stored as its image array: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

namespace perm {

inline Permutation identity(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

inline bool is_identity(std::span<const std::uint32_t> p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

inline bool is_permutation(std::span<const std::uint32_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// Product "a then b": the result maps i to b[a[i]].
inline Permutation compose(std::span<const std::uint32_t> a,
                           std::span<const std::uint32_t> b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Permutation inverse(std::span<const std::uint32_t> p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

/// Parses cycle notation such as "(0 1 2)(3 4)" on `degree` points.
/// Points may be separated by spaces or commas; "()" is the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity(degree);
  std::vector<bool> seen(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::parse_error, "expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) fail(Errc::parse_error, "unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        fail(Errc::parse_error, "bad point in cycle notation: " + std::string(text));
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        ++i;
      }
      if (v >= degree) fail(Errc::parse_error, "point out of range in " + std::string(text));
      if (seen[v]) fail(Errc::parse_error, "point repeated in " + std::string(text));
      seen[v] = true;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      auto from = cycle[k];
      auto to = cycle[(k + 1) % cycle.size()];
      p[from] = to;
    }
    skip_ws();
  }
  if (!is_permutation(p)) fail(Errc::parse_error, "not a permutation: " + std::string(text));
  return p;
}

/// Largest point mentioned in a cycle string, plus one (0 for the identity).
inline std::size_t cycles_degree(std::string_view text) {
  std::size_t best = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      best = std::max(best, v + 1);
    } else {
      ++i;
    }
  }
  return best;
}

inline std::string to_cycles(std::span<const std::uint32_t> p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    out += '(';
    std::size_t v = s;
    bool first = true;
    while (!seen[v]) {
      seen[v] = true;
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
      v = p[v];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace perm

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Base points are chosen as the smallest point moved by the generator that
/// forced a new level.
class StabilizerChain {
 public:
  StabilizerChain(std::span<const Permutation> gens, std::size_t degree) : degree_(degree) {
    for (const auto& g : gens) {
      if (g.size() != degree) fail(Errc::invalid_parameter, "generator degree mismatch");
      if (!perm::is_identity(g)) strong_.push_back({g, 0});
    }
    build();
  }

  [[nodiscard]] BigInt order() const {
    BigInt r = 1;
    for (const auto& lv : levels_) r *= static_cast<unsigned>(lv.orbit.size());
    return r;
  }

  [[nodiscard]] std::vector<std::uint32_t> base() const {
    std::vector<std::uint32_t> b;
    for (const auto& lv : levels_) b.push_back(lv.point);
    return b;
  }

  [[nodiscard]] std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& lv : levels_) s.push_back(lv.orbit.size());
    return s;
  }

  /// True iff p lies in the group.
  [[nodiscard]] bool contains(std::span<const std::uint32_t> p) const {
    if (p.size() != degree_) return false;
    auto [residue, level] = strip(Permutation(p.begin(), p.end()), 0);
    return level == levels_.size() && perm::is_identity(residue);
  }

 private:
  struct Strong {
    Permutation p;
    std::size_t depth;  // number of leading base points it fixes
  };
  struct Level {
    std::uint32_t point;
    std::vector<std::uint32_t> orbit;
    std::vector<std::optional<Permutation>> transversal;  // point -> u with u[point]=x
  };

  void build() {
    for (auto& s : strong_) ensure_moves_beyond_base(s.p);
    refresh_depths();
    std::size_t i = levels_.size();
    while (i > 0) {
      const std::size_t lvl = i - 1;
      recompute_orbit(lvl);
      bool restarted = false;
      const auto gens = level_generators(lvl);
      for (std::size_t oi = 0; oi < levels_[lvl].orbit.size() && !restarted; ++oi) {
        const auto x = levels_[lvl].orbit[oi];
        const auto& ux = *levels_[lvl].transversal[x];
        for (const auto* s : gens) {
          const auto xs = (*s)[x];
          const auto& uxs = *levels_[lvl].transversal[xs];
          Permutation schreier = perm::compose(perm::compose(ux, *s), perm::inverse(uxs));
          auto [residue, fail_level] = strip(std::move(schreier), lvl + 1);
          if (fail_level < levels_.size() || !perm::is_identity(residue)) {
            if (fail_level == levels_.size()) ensure_moves_beyond_base(residue);
            strong_.push_back({std::move(residue), 0});
            refresh_depths();
            for (std::size_t l = lvl + 1; l <= fail_level && l < levels_.size(); ++l) recompute_orbit(l);
            i = std::min(fail_level, levels_.size() - 1) + 1;
            restarted = true;
            break;
          }
        }
      }
      if (!restarted) --i;
    }
  }

  void ensure_moves_beyond_base(const Permutation& p) {
    for (const auto& lv : levels_) {
      if (p[lv.point] != lv.point) return;
    }
    for (std::uint32_t v = 0; v < degree_; ++v) {
      if (p[v] != v) {
        levels_.push_back({v, {}, {}});
        return;
      }
    }
  }

  void refresh_depths() {
    for (auto& s : strong_) {
      std::size_t d = 0;
      while (d < levels_.size() && s.p[levels_[d].point] == levels_[d].point) ++d;
      s.depth = d;
    }
  }

  std::vector<const Permutation*> level_generators(std::size_t lvl) const {
    std::vector<const Permutation*> out;
    for (const auto& s : strong_) {
      if (s.depth >= lvl) out.push_back(&s.p);
    }
    return out;
  }

  void recompute_orbit(std::size_t lvl) {
    auto& lv = levels_[lvl];
    lv.orbit.assign(1, lv.point);
    lv.transversal.assign(degree_, std::nullopt);
    lv.transversal[lv.point] = perm::identity(degree_);
    const auto gens = level_generators(lvl);
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      const auto x = lv.orbit[k];
      for (const auto* s : gens) {
        const auto y = (*s)[x];
        if (!lv.transversal[y]) {
          lv.transversal[y] = perm::compose(*lv.transversal[x], *s);
          lv.orbit.push_back(y);
        }
      }
    }
  }

  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const auto beta = g[levels_[l].point];
      if (!levels_[l].transversal[beta]) return {std::move(g), l};
      g = perm::compose(g, perm::inverse(*levels_[l].transversal[beta]));
    }
    return {std::move(g), levels_.size()};
  }

  std::size_t degree_;
  std::vector<Strong> strong_;
  std::vector<Level> levels_;
};

/// Exact order of the permutation group generated by `gens` on `degree` points.
inline BigInt group_order_from_generators(std::span<const Permutation> gens, std::size_t degree) {
  return StabilizerChain(gens, degree).order();
}

}  // namespace posr

#endif  // POSR_PERMUTATION_HPP
