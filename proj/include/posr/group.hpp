#ifndef POSR_GROUP_HPP
#define POSR_GROUP_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posr/error.hpp"
#include "posr/permutation.hpp"

namespace posr {

/// Index of a group element inside a GroupTable. Element 0 is the identity.
using Element = std::uint32_t;

struct Generator {
  std::string label;
  Element element;
};

struct Letter {
  std::string label;
  int exponent = 1;
};

/// A product of generator powers, evaluated left to right.
using Word = std::vector<Letter>;

/// A finite group stored as its full multiplication table.
///
/// Elements are numbered in breadth-first order over generator words, with
/// the identity first. `mul(a, b)` is the product a*b where a acts first,
/// matching the convention used for permutations.
class GroupTable {
 public:
  GroupTable() = default;

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] Element identity() const noexcept { return 0; }
  [[nodiscard]] Element mul(Element a, Element b) const { return mult_[static_cast<std::size_t>(a) * n_ + b]; }
  [[nodiscard]] Element inv(Element a) const { return inv_[a]; }
  [[nodiscard]] std::span<const Element> row(Element a) const {
    return {mult_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  [[nodiscard]] std::span<const Generator> generators() const noexcept { return generators_; }
  [[nodiscard]] const std::string& word(Element e) const { return words_.at(e); }

  /// Number of leading generators used to build the table; later entries are
  /// named derived elements (for example z = [x,y] in the Heisenberg group).
  [[nodiscard]] std::size_t num_defining_generators() const noexcept { return defining_; }

  [[nodiscard]] std::optional<Element> generator(std::string_view label) const {
    for (const auto& g : generators_) {
      if (g.label == label) return g.element;
    }
    return std::nullopt;
  }

  /// BFS spanning tree: element e (e != 0) equals parent(e) * defining generator parent_gen(e).
  [[nodiscard]] Element parent(Element e) const { return parent_.at(e); }
  [[nodiscard]] std::size_t parent_gen(Element e) const { return parent_gen_.at(e); }

  void add_named_element(std::string label, Element e) {
    if (e >= n_) fail(Errc::index_out_of_range, "named element out of range");
    if (generator(label)) fail(Errc::invalid_parameter, "duplicate generator label " + label);
    generators_.push_back({std::move(label), e});
  }

  friend GroupTable group_from_permutations(std::span<const Permutation> gens,
                                            std::span<const std::string> labels, std::size_t cap);

 private:
  std::size_t n_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<Generator> generators_;
  std::vector<std::string> words_;
  std::vector<Element> parent_;
  std::vector<std::size_t> parent_gen_;
  std::size_t defining_ = 0;
};

inline constexpr std::size_t kDefaultClosureCap = 100'000;

inline std::string default_generator_label(std::size_t i) {
  static constexpr std::array<const char*, 3> names{"x", "y", "z"};
  return i < names.size() ? names[i] : "g" + std::to_string(i);
}

namespace detail {

/// "x*x*y" -> "x^2y"; keeps "*" between letters unless every label is one character.
inline std::string compact_word(const std::string& w, bool single_char_labels) {
  if (w == "1") return w;
  std::vector<std::pair<std::string, int>> runs;
  std::size_t start = 0;
  while (start <= w.size()) {
    auto end = w.find('*', start);
    if (end == std::string::npos) end = w.size();
    std::string letter = w.substr(start, end - start);
    if (!runs.empty() && runs.back().first == letter) ++runs.back().second;
    else runs.emplace_back(std::move(letter), 1);
    start = end + 1;
  }
  std::string out;
  for (const auto& [letter, k] : runs) {
    if (!out.empty() && !single_char_labels) out += "*";
    out += letter;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace detail

/// Closure of permutation generators as a GroupTable.
inline GroupTable group_from_permutations(std::span<const Permutation> gens,
                                          std::span<const std::string> labels = {},
                                          std::size_t cap = kDefaultClosureCap) {
  if (gens.empty()) fail(Errc::empty_generator_list, "no generators given");
  const std::size_t degree = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != degree) fail(Errc::invalid_parameter, "generators act on different point sets");
    if (!perm::is_permutation(g)) fail(Errc::invalid_parameter, "generator is not a permutation");
  }
  if (!labels.empty() && labels.size() != gens.size()) {
    fail(Errc::invalid_parameter, "label count does not match generator count");
  }

  struct VecHash {
    std::size_t operator()(const Permutation& p) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto v : p) h = (h ^ v) * 1099511628211ULL;
      return h;
    }
  };
  std::unordered_map<Permutation, Element, VecHash> index;
  std::vector<Permutation> elems;
  std::vector<Element> parent;
  std::vector<std::size_t> parent_gen;
  std::vector<std::string> words;

  auto intern = [&](Permutation p, Element par, std::size_t gen, std::string w) {
    auto [it, inserted] = index.try_emplace(std::move(p), static_cast<Element>(elems.size()));
    if (inserted) {
      if (elems.size() >= cap) fail(Errc::closure_cap_exceeded, "closure exceeds " + std::to_string(cap));
      elems.push_back(it->first);
      parent.push_back(par);
      parent_gen.push_back(gen);
      words.push_back(std::move(w));
    }
    return it->second;
  };

  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    names.push_back(labels.empty() ? default_generator_label(i) : labels[i]);
  }

  intern(perm::identity(degree), 0, 0, "1");
  // Right multiplication table by each generator, filled during the BFS.
  std::vector<std::vector<Element>> right(gens.size());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto prod = perm::compose(elems[head], gens[k]);
      std::string w = head == 0 ? names[k] : words[head] + "*" + names[k];
      const Element e = intern(std::move(prod), static_cast<Element>(head), k, std::move(w));
      right[k].push_back(e);
    }
  }

  GroupTable t;
  t.n_ = elems.size();
  t.mult_.assign(t.n_ * t.n_, 0);
  t.inv_.assign(t.n_, 0);
  const bool short_labels = std::all_of(names.begin(), names.end(), [](const std::string& l) { return l.size() == 1; });
  for (auto& w : words) w = detail::compact_word(w, short_labels);
  t.words_ = std::move(words);
  t.parent_ = std::move(parent);
  t.parent_gen_ = std::move(parent_gen);
  t.defining_ = gens.size();
  // mult[a][b] = mult[a][parent(b)] * gen(b); BFS order guarantees parent(b) < b.
  for (std::size_t a = 0; a < t.n_; ++a) {
    Element* row = t.mult_.data() + a * t.n_;
    row[0] = static_cast<Element>(a);
    for (std::size_t b = 1; b < t.n_; ++b) {
      row[b] = right[t.parent_gen_[b]][row[t.parent_[b]]];
    }
  }
  for (std::size_t a = 0; a < t.n_; ++a) {
    const Element* row = t.mult_.data() + a * t.n_;
    for (std::size_t b = 0; b < t.n_; ++b) {
      if (row[b] == 0) {
        t.inv_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    t.generators_.push_back({names[k], index.at(gens[k])});
  }
  return t;
}

inline GroupTable group_from_permutations(std::span<const Permutation> gens, std::size_t cap) {
  return group_from_permutations(gens, {}, cap);
}

// ---------------------------------------------------------------------------
// Words

namespace detail {

inline Word invert_word(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->label, -it->exponent});
  return r;
}

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const Generator> gens) : text_(text), gens_(gens) {}

  Word parse() {
    Word w = sequence();
    if (i_ != text_.size()) error("unexpected ')'");
    return w;
  }

 private:
  Word sequence() {
    Word w;
    for (;;) {
      skip();
      if (i_ >= text_.size() || text_[i_] == ')') return w;
      Word atom;
      if (text_[i_] == '(') {
        ++i_;
        atom = sequence();
        if (i_ >= text_.size() || text_[i_] != ')') error("missing ')'");
        ++i_;
      } else if (text_[i_] == '1' || text_[i_] == 'e') {
        ++i_;
      } else {
        atom.push_back({label(), 1});
      }
      const int k = exponent();
      if (atom.size() == 1) {
        atom[0].exponent *= k;
        w.push_back(atom[0]);
      } else {
        const Word unit = k < 0 ? invert_word(atom) : atom;
        for (int r = 0; r < (k < 0 ? -k : k); ++r) w.insert(w.end(), unit.begin(), unit.end());
      }
    }
  }

  std::string label() {
    std::size_t best = 0;
    const Generator* match = nullptr;
    for (const auto& g : gens_) {
      if (g.label.size() > best && text_.substr(i_, g.label.size()) == g.label) {
        best = g.label.size();
        match = &g;
      }
    }
    if (match == nullptr) fail(Errc::unknown_generator, "cannot parse word '" + std::string(text_) + "'");
    i_ += best;
    return match->label;
  }

  int exponent() {
    if (i_ >= text_.size() || text_[i_] != '^') return 1;
    ++i_;
    bool neg = false;
    if (i_ < text_.size() && (text_[i_] == '-' || text_[i_] == '+')) {
      neg = text_[i_] == '-';
      ++i_;
    }
    if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_]))) error("bad exponent");
    int v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      v = v * 10 + (text_[i_] - '0');
      ++i_;
    }
    return neg ? -v : v;
  }

  void skip() {
    while (i_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[i_])) || text_[i_] == '*' || text_[i_] == '.')) {
      ++i_;
    }
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse_error, what + " in word '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::span<const Generator> gens_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses words such as "x^2yx^-1", "x*y", "(xy)^3", "1". Labels are matched
/// greedily against the group's generator labels.
inline Word parse_word(std::string_view text, std::span<const Generator> gens) {
  return detail::WordParser(text, gens).parse();
}

inline Element power(const GroupTable& g, Element e, long long k) {
  Element base = k < 0 ? g.inv(e) : e;
  unsigned long long n = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Element acc = g.identity();
  while (n > 0) {
    if (n & 1ULL) acc = g.mul(acc, base);
    base = g.mul(base, base);
    n >>= 1ULL;
  }
  return acc;
}

inline Element evaluate_word(const GroupTable& g, const Word& word) {
  Element acc = g.identity();
  for (const auto& letter : word) {
    auto e = g.generator(letter.label);
    if (!e) fail(Errc::unknown_generator, "no generator labelled '" + letter.label + "'");
    acc = g.mul(acc, power(g, *e, letter.exponent));
  }
  return acc;
}

inline Element evaluate_word(const GroupTable& g, std::string_view text) {
  return evaluate_word(g, parse_word(text, g.generators()));
}

inline std::size_t element_order(const GroupTable& g, Element e) {
  std::size_t k = 1;
  Element acc = e;
  while (acc != g.identity()) {
    acc = g.mul(acc, e);
    ++k;
  }
  return k;
}

using Relation = std::pair<Word, Word>;

inline bool check_relations(const GroupTable& g, std::span<const Relation> relations) {
  for (const auto& [lhs, rhs] : relations) {
    if (evaluate_word(g, lhs) != evaluate_word(g, rhs)) return false;
  }
  return true;
}

/// Relations written as text, e.g. {"x^4", "1"}.
inline bool check_relations(const GroupTable& g,
                            std::span<const std::pair<std::string, std::string>> relations) {
  std::vector<Relation> parsed;
  for (const auto& [l, r] : relations) {
    parsed.emplace_back(parse_word(l, g.generators()), parse_word(r, g.generators()));
  }
  return check_relations(g, parsed);
}

// ---------------------------------------------------------------------------
// Structure queries

/// Size of the subgroup generated by the given elements.
inline std::size_t subgroup_size(const GroupTable& g, std::span<const Element> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> queue{g.identity()};
  seen[0] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (auto s : gens) {
      const Element p = g.mul(queue[h], s);
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return queue.size();
}

inline std::vector<std::pair<Element, Element>> generating_pairs(const GroupTable& g) {
  std::vector<std::pair<Element, Element>> out;
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const std::array<Element, 2> pair{a, b};
      if (subgroup_size(g, pair) == g.order()) out.emplace_back(a, b);
    }
  }
  return out;
}

inline bool is_cyclic(const GroupTable& g) {
  for (Element e = 0; e < g.order(); ++e) {
    if (element_order(g, e) == g.order()) return true;
  }
  return false;
}

inline bool is_abelian(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < a; ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

/// Membership in the class of 2-generated groups containing a generator of
/// order 4 in which every generating pair has both orders at most 4.
/// Cyclic groups are reported as outside the class.
inline bool in_phi(const GroupTable& g) {
  const auto pairs = generating_pairs(g);
  if (pairs.empty()) fail(Errc::not_two_generated, "group needs more than two generators");
  if (is_cyclic(g)) return false;
  std::vector<std::size_t> ord(g.order());
  for (Element e = 0; e < g.order(); ++e) ord[e] = element_order(g, e);
  bool has_four = false;
  for (auto [a, b] : pairs) {
    if (ord[a] > 4 || ord[b] > 4) return false;
    has_four = has_four || ord[a] == 4 || ord[b] == 4;
  }
  return has_four;
}

/// Extends images of the defining generators to a map on all elements using
/// the BFS spanning tree; returns nullopt unless it is an isomorphism onto `to`.
inline std::optional<std::vector<Element>> extend_to_isomorphism(const GroupTable& from, const GroupTable& to,
                                                                 std::span<const Element> images) {
  if (from.order() != to.order()) return std::nullopt;
  std::vector<Element> phi(from.order());
  phi[0] = to.identity();
  for (Element e = 1; e < from.order(); ++e) {
    phi[e] = to.mul(phi[from.parent(e)], images[from.parent_gen(e)]);
  }
  std::vector<bool> hit(to.order(), false);
  for (auto v : phi) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  for (Element a = 0; a < from.order(); ++a) {
    for (Element b = 0; b < from.order(); ++b) {
      if (phi[from.mul(a, b)] != to.mul(phi[a], phi[b])) return std::nullopt;
    }
  }
  return phi;
}

/// Brute-force isomorphism test: tries every tuple of images for the defining
/// generators of `a`. Intended for the small groups handled here.
inline bool are_isomorphic_groups(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  const std::size_t r = a.num_defining_generators();
  std::vector<std::size_t> ord_a(r);
  for (std::size_t i = 0; i < r; ++i) ord_a[i] = element_order(a, a.generators()[i].element);
  std::vector<std::size_t> ord_b(b.order());
  for (Element e = 0; e < b.order(); ++e) ord_b[e] = element_order(b, e);
  std::vector<Element> images(r, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == r) return extend_to_isomorphism(a, b, images).has_value();
    for (Element e = 0; e < b.order(); ++e) {
      if (ord_b[e] != ord_a[i]) continue;
      images[i] = e;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

/// All automorphisms of the group, each as an element map, identity first.
inline std::vector<std::vector<Element>> group_automorphisms(const GroupTable& g) {
  const std::size_t r = g.num_defining_generators();
  std::vector<std::size_t> ord(g.order());
  for (Element e = 0; e < g.order(); ++e) ord[e] = element_order(g, e);
  std::vector<std::vector<Element>> out;
  std::vector<Element> images(r, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      if (auto phi = extend_to_isomorphism(g, g, images)) out.push_back(std::move(*phi));
      return;
    }
    for (Element e = 0; e < g.order(); ++e) {
      if (ord[e] != ord[g.generators()[i].element]) continue;
      images[i] = e;
      rec(i + 1);
    }
  };
  rec(0);
  std::stable_partition(out.begin(), out.end(), [](const std::vector<Element>& phi) {
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (phi[i] != i) return false;
    }
    return true;
  });
  return out;
}

/// Table sanity checks. Associativity is exhaustive up to order 64 and
/// sampled (10,000 triples) above that.
inline bool is_valid_group_table(const GroupTable& g, std::uint64_t seed = 1) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (Element b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
    if (std::find(col.begin(), col.end(), false) != col.end()) return false;
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return false;
  }
  auto assoc = [&](Element a, Element b, Element c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= 64) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 10'000; ++i) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
    }
  }
  std::vector<Element> gens;
  for (std::size_t i = 0; i < g.num_defining_generators(); ++i) gens.push_back(g.generators()[i].element);
  return subgroup_size(g, gens) == n;
}

}  // namespace posr

#endif  // POSR_GROUP_HPP
