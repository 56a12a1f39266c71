#ifndef POSR_SEARCH_HPP
#define POSR_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "posr/autgroup.hpp"
#include "posr/cayley.hpp"
#include "posr/error.hpp"
#include "posr/group.hpp"

namespace posr {

enum class RepKind { posr, pdr };

inline std::string to_string(RepKind k) { return k == RepKind::posr ? "POSR" : "PDR"; }

inline RepKind parse_rep_kind(std::string_view s) {
  if (s == "posr" || s == "POSR") return RepKind::posr;
  if (s == "pdr" || s == "PDR") return RepKind::pdr;
  fail(Errc::parse_error, "unknown kind '" + std::string(s) + "' (expected posr or pdr)");
}

enum class SearchStatus { found_witness, exhausted_none, aborted };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found_witness: return "FoundWitness";
    case SearchStatus::exhausted_none: return "ExhaustedNone";
    case SearchStatus::aborted: return "Aborted";
  }
  return "?";
}

struct SearchOutcome {
  SearchStatus status = SearchStatus::aborted;
  std::optional<ConnectionSets> sets;  // witness of exists_mposr
  std::optional<Digraph> digraph;      // witness of exists_antisymmetric_kregular
  std::uint64_t candidates_examined = 0;
  std::uint64_t total = 0;
  std::chrono::milliseconds elapsed{0};
  bool up_to_group_automorphism = false;
  std::string abort_reason;

  [[nodiscard]] bool has_witness() const { return sets.has_value() || digraph.has_value(); }
};

struct SearchOptions {
  unsigned threads = 1;  // 0 means hardware concurrency
  std::uint64_t chunk_size = 1024;
  bool reduce_by_group_automorphisms = false;
  bool quick_reject = true;             // oriented filter on the sets and the stabilizer probe
  std::uint64_t max_candidates = 0;     // 0: unlimited
  std::chrono::milliseconds time_limit{0};  // 0: unlimited
  const std::atomic<bool>* cancel = nullptr;
  std::ostream* progress = nullptr;     // JSON lines {examined, total, elapsed_ms}
  std::uint64_t progress_every = 100'000;
  std::string checkpoint_path;          // resume cursor; empty disables
  AutOptions aut;
};

// ---------------------------------------------------------------------------
// Combinations

namespace detail {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) fail(Errc::too_large, "binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

/// The r-th k-subset of {0..n-1} in lexicographic order.
inline std::vector<Element> unrank_subset(std::uint64_t n, std::uint64_t k, std::uint64_t r) {
  std::vector<Element> out;
  out.reserve(k);
  Element x = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    for (;; ++x) {
      const auto c = binomial(n - x - 1, k - i - 1);
      if (r < c) break;
      r -= c;
    }
    out.push_back(x++);
  }
  return out;
}

inline std::uint64_t rank_subset(std::uint64_t n, const std::vector<Element>& s) {
  std::uint64_t r = 0;
  Element x = 0;
  const std::uint64_t k = s.size();
  for (std::uint64_t i = 0; i < k; ++i) {
    for (; x < s[i]; ++x) r += binomial(n - x - 1, k - i - 1);
    ++x;
  }
  return r;
}

/// Lexicographically smallest image of each k-subset under the group automorphisms.
inline std::vector<std::uint64_t> orbit_minimal_subsets(const GroupTable& g, const std::vector<std::vector<Element>>& auts,
                                                        std::uint64_t k) {
  const std::uint64_t n = g.order();
  const std::uint64_t count = binomial(n, k);
  std::vector<std::uint64_t> reps;
  std::vector<Element> img(k);
  for (std::uint64_t r = 0; r < count; ++r) {
    const auto s = unrank_subset(n, k, r);
    bool minimal = true;
    for (const auto& phi : auts) {
      for (std::size_t i = 0; i < k; ++i) img[i] = phi[s[i]];
      std::sort(img.begin(), img.end());
      if (std::lexicographical_compare(img.begin(), img.end(), s.begin(), s.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(r);
  }
  return reps;
}

}  // namespace detail

/// All systems of cells with prescribed row and column sums, indexed
/// 0..total()-1: size matrices in lexicographic order (row-major entries),
/// then cell contents, each cell a lexicographic subset with the last cell
/// varying fastest. With group automorphisms supplied, the first non-empty
/// cell runs only over orbit-minimal subsets.
class ConnectionSpace {
 public:
  ConnectionSpace(const GroupTable& g, std::size_t m, std::size_t valency, bool partite,
                  const std::vector<std::vector<Element>>* group_auts = nullptr)
      : n_(g.order()), m_(m) {
    if (m < 1 || valency < 1) fail(Errc::invalid_parameter, "m and valency must be positive");
    std::vector<std::size_t> sizes(m * m, 0), col(m, 0);
    std::vector<std::vector<std::size_t>> matrices;
    auto rec = [&](auto&& self, std::size_t cell, std::size_t row_sum) -> void {
      if (cell == m * m) {
        matrices.push_back(sizes);
        return;
      }
      const std::size_t i = cell / m, j = cell % m;
      const std::size_t cap = std::min({valency - row_sum, valency - col[j], n_});
      std::size_t lo = 0, hi = cap;
      if (partite && i == j) hi = 0;
      if (j == m - 1) lo = valency - row_sum;  // the row must close exactly
      if (i == m - 1) lo = std::max(lo, valency - col[j]);
      for (std::size_t s = lo; s <= hi; ++s) {
        if (j == m - 1 && row_sum + s != valency) continue;
        if (i == m - 1 && col[j] + s != valency) continue;
        sizes[cell] = s;
        col[j] += s;
        self(self, cell + 1, j == m - 1 ? 0 : row_sum + s);
        col[j] -= s;
      }
      sizes[cell] = 0;
    };
    rec(rec, 0, 0);
    std::uint64_t offset = 0;
    for (auto& sz : matrices) {
      Block b;
      b.sizes = sz;
      b.offset = offset;
      b.first = m * m;
      for (std::size_t c = 0; c < m * m; ++c) {
        if (sz[c] > 0 && b.first == m * m) b.first = c;
      }
      b.radix.resize(m * m);
      detail::u128 count = 1;
      for (std::size_t c = 0; c < m * m; ++c) {
        std::uint64_t r = detail::binomial(n_, sz[c]);
        if (group_auts && c == b.first) r = reps_for(g, *group_auts, sz[c]).size();
        b.radix[c] = r;
        count *= r;
        if (count > std::numeric_limits<std::uint64_t>::max() / 2) fail(Errc::too_large, "candidate space too large");
      }
      b.count = static_cast<std::uint64_t>(count);
      if (b.count == 0) continue;
      offset += b.count;
      if (offset > std::numeric_limits<std::uint64_t>::max() / 2) fail(Errc::too_large, "candidate space too large");
      blocks_.push_back(std::move(b));
    }
    total_ = offset;
    reduced_ = group_auts != nullptr;
  }

  [[nodiscard]] std::uint64_t total() const { return total_; }
  [[nodiscard]] std::size_t m() const { return m_; }
  [[nodiscard]] bool reduced() const { return reduced_; }

  [[nodiscard]] ConnectionSets at(std::uint64_t index) const {
    if (index >= total_) fail(Errc::index_out_of_range, "candidate index out of range");
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                               [](std::uint64_t x, const Block& b) { return x < b.offset; });
    const Block& b = *(it - 1);
    std::uint64_t r = index - b.offset;
    std::vector<std::uint64_t> digits(m_ * m_, 0);
    for (std::size_t c = m_ * m_; c-- > 0;) {
      digits[c] = r % b.radix[c];
      r /= b.radix[c];
    }
    std::vector<std::vector<Element>> cells(m_ * m_);
    for (std::size_t c = 0; c < m_ * m_; ++c) {
      std::uint64_t rank = digits[c];
      if (reduced_ && c == b.first) rank = reps_.at(b.sizes[c])[rank];
      cells[c] = detail::unrank_subset(n_, b.sizes[c], rank);
    }
    return {m_, std::move(cells)};
  }

  /// Inverse of at(); fails for systems outside the space.
  [[nodiscard]] std::uint64_t index_of(const ConnectionSets& c) const {
    if (c.m() != m_) fail(Errc::invalid_parameter, "m mismatch");
    std::vector<std::size_t> sizes(m_ * m_);
    for (std::size_t k = 0; k < m_ * m_; ++k) sizes[k] = c.cells()[k].size();
    for (const auto& b : blocks_) {
      if (b.sizes != sizes) continue;
      std::uint64_t r = 0;
      for (std::size_t k = 0; k < m_ * m_; ++k) {
        std::uint64_t d = detail::rank_subset(n_, c.cells()[k]);
        if (reduced_ && k == b.first) {
          const auto& reps = reps_.at(b.sizes[k]);
          auto pos = std::lower_bound(reps.begin(), reps.end(), d);
          if (pos == reps.end() || *pos != d) fail(Errc::invalid_parameter, "system is not an orbit representative");
          d = static_cast<std::uint64_t>(pos - reps.begin());
        }
        r = r * b.radix[k] + d;
      }
      return b.offset + r;
    }
    fail(Errc::invalid_parameter, "system is outside the candidate space");
  }

 private:
  struct Block {
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> radix;
    std::uint64_t offset = 0;
    std::uint64_t count = 0;
    std::size_t first = 0;
  };

  const std::vector<std::uint64_t>& reps_for(const GroupTable& g, const std::vector<std::vector<Element>>& auts,
                                             std::size_t k) {
    auto it = reps_.find(k);
    if (it == reps_.end()) it = reps_.emplace(k, detail::orbit_minimal_subsets(g, auts, k)).first;
    return it->second;
  }

  std::uint64_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
  bool reduced_ = false;
  std::map<std::size_t, std::vector<std::uint64_t>> reps_;
};

/// Every system in the space, in index order, keeping the oriented ones
/// when `require_oriented`.
inline std::vector<ConnectionSets> enumerate_connection_sets(const GroupTable& g, std::size_t m, std::size_t valency,
                                                             bool require_oriented, bool require_partite) {
  ConnectionSpace space(g, m, valency, require_partite);
  std::vector<ConnectionSets> out;
  for (std::uint64_t i = 0; i < space.total(); ++i) {
    auto c = space.at(i);
    if (require_oriented && !validate_sets(g, c, valency).oriented) continue;
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Candidate test

namespace detail {

inline bool sets_oriented(const GroupTable& g, const ConnectionSets& c) {
  const std::size_t m = c.m();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const auto& back = c.cell(j, i);
      for (auto t : c.cell(i, j)) {
        if (std::binary_search(back.begin(), back.end(), g.inv(t))) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Does the system give an m-POSR (or m-PDR) of G? Partite and regular
/// are taken from the enumeration; `quick` only changes the route taken.
inline bool is_witness(const GroupTable& g, const ConnectionSets& c, RepKind kind, std::size_t valency, bool quick,
                       const AutOptions& aut = {}) {
  if (quick) {
    if (kind == RepKind::posr && !detail::sets_oriented(g, c)) return false;
    return is_semiregular_rep_fast(build_cayley(g, c), aut);
  }
  const auto v = validate_sets(g, c, valency);
  if (!v.partite || !v.regular || (kind == RepKind::posr && !v.oriented)) return false;
  return is_semiregular_rep(build_cayley(g, c), g, aut, false).is_representation;
}

// ---------------------------------------------------------------------------
// Chunked driver shared by the searches

namespace detail {

struct Checkpoint {
  std::string fingerprint;
  std::uint64_t next_index = 0;
};

inline std::optional<Checkpoint> load_checkpoint(const std::string& path) {
  if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
    return Checkpoint{j.at("fingerprint").get<std::string>(), j.at("next_index").get<std::uint64_t>()};
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, "unreadable checkpoint " + path + ": " + e.what());
  }
}

inline void save_checkpoint(const std::string& path, const Checkpoint& c) {
  if (path.empty()) return;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    nlohmann::json j;
    j["fingerprint"] = c.fingerprint;
    j["next_index"] = c.next_index;
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

/// Scans indices [0, total) in chunks on a worker pool and returns the
/// smallest index accepted by `test`, independent of the schedule.
class ChunkedScan {
 public:
  template <class MakeTester>
  SearchOutcome run(std::uint64_t total, const SearchOptions& opt, const std::string& fingerprint, MakeTester make) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchOutcome out;
    out.total = total;
    const std::uint64_t cs = std::max<std::uint64_t>(1, opt.chunk_size);
    std::uint64_t start = 0;
    if (auto cp = load_checkpoint(opt.checkpoint_path)) {
      if (cp->fingerprint != fingerprint) fail(Errc::invalid_parameter, "checkpoint belongs to a different search");
      start = std::min(cp->next_index, total);
    }
    const std::uint64_t nchunks = (total - start + cs - 1) / cs;
    unsigned threads = opt.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opt.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, nchunks)));

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best{kNone};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::set<std::uint64_t> done_above;
    std::uint64_t low = 0;  // chunks [0, low) are complete
    std::uint64_t examined_total = 0;
    std::uint64_t last_progress = 0;
    std::uint64_t last_saved = start;
    std::string reason;
    std::exception_ptr error;

    auto elapsed = [&] {
      return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    };
    auto worker = [&] {
      try {
        auto test = make();
        for (;;) {
          if (stop.load()) return;
          const std::uint64_t c = next_chunk.fetch_add(1);
          if (c >= nchunks) return;
          const std::uint64_t lo = start + c * cs;
          if (lo > best.load()) return;
          if ((opt.cancel && opt.cancel->load()) ||
              (opt.max_candidates && lo - start >= opt.max_candidates) ||
              (opt.time_limit.count() > 0 && elapsed() >= opt.time_limit)) {
            std::lock_guard lock(mu);
            if (reason.empty()) reason = opt.cancel && opt.cancel->load() ? "cancelled" : "budget exhausted";
            stop = true;
            return;
          }
          const std::uint64_t hi = std::min(total, lo + cs);
          std::uint64_t scanned = 0;
          for (std::uint64_t i = lo; i < hi; ++i) {
            if (i > best.load()) break;
            ++scanned;
            if (test(i)) {
              std::uint64_t cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
              break;
            }
          }
          std::lock_guard lock(mu);
          examined_total += scanned;
          done_above.insert(c);
          while (!done_above.empty() && *done_above.begin() == low) {
            done_above.erase(done_above.begin());
            ++low;
          }
          if (opt.progress && examined_total - last_progress >= opt.progress_every) {
            last_progress = examined_total;
            *opt.progress << nlohmann::json{{"examined", start + examined_total}, {"total", total},
                                            {"elapsed_ms", elapsed().count()}}
                                 .dump()
                          << '\n'
                          << std::flush;
          }
          const std::uint64_t prefix = std::min(total, start + low * cs);
          if (!opt.checkpoint_path.empty() && best.load() == kNone && prefix - last_saved >= 64 * cs) {
            last_saved = prefix;
            save_checkpoint(opt.checkpoint_path, {fingerprint, prefix});
          }
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    const std::uint64_t prefix = std::min(total, start + low * cs);
    const std::uint64_t b = best.load();
    if (b != kNone && (b - start) / cs < low) {
      out.status = SearchStatus::found_witness;
      out.candidates_examined = b + 1;
      found_index = b;
    } else if (prefix == total) {
      out.status = SearchStatus::exhausted_none;
      out.candidates_examined = total;
      save_checkpoint(opt.checkpoint_path, {fingerprint, total});
    } else {
      out.status = SearchStatus::aborted;
      out.candidates_examined = prefix;
      out.abort_reason = reason.empty() ? "interrupted" : reason;
      save_checkpoint(opt.checkpoint_path, {fingerprint, prefix});
    }
    out.elapsed = elapsed();
    return out;
  }

  static constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t found_index = kNone;
};

}  // namespace detail

/// Existence of an m-POSR / m-PDR of G of the given valency over the full
/// definitional space (partite, all row and column sums equal). The
/// witness is the first accepted system in index order.
inline SearchOutcome exists_mposr(const GroupTable& g, std::size_t m, std::size_t valency, RepKind kind,
                                  const SearchOptions& opt = {}) {
  std::vector<std::vector<Element>> auts;
  if (opt.reduce_by_group_automorphisms) auts = group_automorphisms(g);
  const ConnectionSpace space(g, m, valency, true, opt.reduce_by_group_automorphisms ? &auts : nullptr);
  const std::string fingerprint = "mposr/order=" + std::to_string(g.order()) + "/m=" + std::to_string(m) +
                                  "/k=" + std::to_string(valency) + "/" + to_string(kind) +
                                  "/total=" + std::to_string(space.total()) + (space.reduced() ? "/reduced" : "");
  detail::ChunkedScan scan;
  auto out = scan.run(space.total(), opt, fingerprint, [&] {
    return [&](std::uint64_t i) { return is_witness(g, space.at(i), kind, valency, opt.quick_reject, opt.aut); };
  });
  out.up_to_group_automorphism = space.reduced();
  if (out.status == SearchStatus::found_witness) out.sets = space.at(scan.found_index);
  return out;
}

// ---------------------------------------------------------------------------
// Regular digraphs with trivial automorphism group

/// Existence of a k-regular digraph on m vertices (no loops; no digons
/// when `oriented`) whose automorphism group is trivial. Out-sets are
/// assigned vertex by vertex in lexicographic order with N+(0) = {1..k};
/// every k-regular digraph is isomorphic to one of that form.
inline SearchOutcome exists_antisymmetric_kregular(std::size_t m, std::size_t k, bool oriented,
                                                   const SearchOptions& opt = {}) {
  if (m < 1 || k < 1) fail(Errc::invalid_parameter, "m and k must be positive");
  if (m > 64) fail(Errc::too_large, "at most 64 vertices");
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  };
  SearchOutcome out;
  if (k >= m || (oriented && 2 * k > m - 1)) {
    out.status = SearchStatus::exhausted_none;
    out.elapsed = elapsed();
    return out;
  }
  std::vector<std::uint64_t> outset(m, 0);
  std::vector<std::size_t> indeg(m, 0);
  std::uint64_t examined = 0;
  bool stop = false;

  auto bit = [](std::size_t v) { return std::uint64_t{1} << v; };
  auto feasible = [&](std::size_t v) {
    // Every deficit must be coverable by the sources still to be assigned.
    for (std::size_t w = 0; w < m; ++w) {
      const std::size_t deficit = k - indeg[w];
      if (deficit == 0) continue;
      std::size_t avail = 0;
      for (std::size_t u = v + 1; u < m; ++u) {
        if (u == w) continue;
        if (oriented && w <= v && (outset[w] & bit(u))) continue;
        ++avail;
      }
      if (avail < deficit) return false;
    }
    return true;
  };
  auto complete = [&]() {
    ++examined;
    std::vector<std::uint32_t> offsets(m + 1, 0);
    std::vector<Vertex> targets;
    targets.reserve(m * k);
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = 0; w < m; ++w) {
        if (outset[v] & bit(w)) targets.push_back(static_cast<Vertex>(w));
      }
      offsets[v + 1] = static_cast<std::uint32_t>(targets.size());
    }
    auto d = Digraph::from_rows(m, std::move(offsets), std::move(targets));
    if (opt.progress && opt.progress_every && examined % opt.progress_every == 0) {
      *opt.progress << nlohmann::json{{"examined", examined}, {"total", nullptr}, {"elapsed_ms", elapsed().count()}}.dump()
                    << '\n'
                    << std::flush;
    }
    if (!find_nontrivial_automorphism(d, opt.aut)) {
      out.digraph = std::move(d);
      stop = true;
    }
  };
  auto assign = [&](auto&& self, std::size_t v) -> void {
    if (stop) return;
    if (v == m) {
      complete();
      return;
    }
    if ((opt.cancel && opt.cancel->load()) || (opt.max_candidates && examined >= opt.max_candidates) ||
        (opt.time_limit.count() > 0 && elapsed() >= opt.time_limit)) {
      out.abort_reason = opt.cancel && opt.cancel->load() ? "cancelled" : "budget exhausted";
      stop = true;
      return;
    }
    std::vector<std::size_t> allowed;
    for (std::size_t w = 0; w < m; ++w) {
      if (w == v || indeg[w] >= k) continue;
      if (oriented && w < v && (outset[w] & bit(v))) continue;
      allowed.push_back(w);
    }
    std::vector<std::size_t> pick;
    auto choose = [&](auto&& again, std::size_t from) -> void {
      if (stop) return;
      if (pick.size() == k) {
        for (auto w : pick) {
          outset[v] |= bit(w);
          ++indeg[w];
        }
        if (feasible(v)) self(self, v + 1);
        for (auto w : pick) --indeg[w];
        outset[v] = 0;
        return;
      }
      for (std::size_t a = from; a + (k - pick.size()) <= allowed.size(); ++a) {
        pick.push_back(allowed[a]);
        again(again, a + 1);
        pick.pop_back();
      }
    };
    if (v == 0) {
      for (std::size_t w = 1; w <= k; ++w) pick.push_back(w);
      for (auto w : pick) {
        outset[0] |= bit(w);
        ++indeg[w];
      }
      if (feasible(0)) self(self, 1);
      return;
    }
    choose(choose, 0);
  };
  assign(assign, 0);

  out.candidates_examined = examined;
  out.elapsed = elapsed();
  if (out.digraph) {
    out.status = SearchStatus::found_witness;
    out.total = 0;
  } else if (stop) {
    out.status = SearchStatus::aborted;
  } else {
    out.status = SearchStatus::exhausted_none;
    out.total = examined;
  }
  return out;
}

}  // namespace posr

#endif  // POSR_SEARCH_HPP
