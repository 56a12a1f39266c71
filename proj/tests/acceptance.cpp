// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "posr/posr.hpp"
#include "test_support.hpp"

using namespace posr;
using Clock = std::chrono::steady_clock;
using Ms = std::chrono::milliseconds;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << (notes.tellp() > 0 ? "; " : "") << what;
    }
  }
};

Ms since(Clock::time_point t0) { return std::chrono::duration_cast<Ms>(Clock::now() - t0); }

template <class F>
Ms timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return since(t0);
}

std::string ms(Ms d) { return std::to_string(d.count()) + " ms"; }

BigInt aut_order(const GroupTable& g, const ConnectionSets& c) {
  return automorphism_group(build_cayley(g, c).digraph).order;
}

std::string status_name(const SearchOutcome& o) { return to_string(o.status); }

void criterion1(Outcome& r) {
  Ms total{0};
  for (std::size_t n = 7; n <= 24; ++n) {
    BigInt order;
    const auto t = timed([&] { order = aut_order(named_group(GroupSpec::cyclic(n)), cyclic_posr_sets(n, 2)); });
    total += t;
    r.expect(order == n, "Z" + std::to_string(n) + " aut " + order.str());
    r.expect(t < Ms(1000), "Z" + std::to_string(n) + " took " + ms(t));
  }
  r.expect(total < Ms(30'000), "sweep took " + ms(total));
}

void criterion2(Outcome& r) {
  const auto t0 = Clock::now();
  auto sweep = [&](std::size_t m, std::size_t lo, std::size_t hi) {
    for (std::size_t n = lo; n <= hi; ++n) {
      const auto order = aut_order(named_group(GroupSpec::cyclic(n)), cyclic_posr_sets(n, m));
      r.expect(order == n, "Z" + std::to_string(n) + " m=" + std::to_string(m) + " aut " + order.str());
    }
  };
  sweep(3, 4, 16);
  sweep(4, 3, 16);
  for (std::size_t m = 5; m <= 8; ++m) sweep(m, 3, 12);
  r.expect(since(t0) < Ms(300'000), "sweep took " + ms(since(t0)));
}

void expect_none(Outcome& r, const GroupSpec& spec, std::size_t m, RepKind kind, std::uint64_t max_total = 0) {
  const auto g = named_group(spec);
  const auto o = exists_mposr(g, m, 3, kind);
  const auto label = display_name(spec) + " m=" + std::to_string(m) + " " + to_string(kind);
  r.expect(o.status == SearchStatus::exhausted_none, label + " " + status_name(o) + " at " + std::to_string(o.candidates_examined));
  if (max_total) r.expect(o.candidates_examined <= max_total, label + " examined " + std::to_string(o.candidates_examined));
}

void criterion3(Outcome& r) {
  Ms cyclic{0};
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t c = n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0;
    cyclic += timed([&] { expect_none(r, GroupSpec::cyclic(n), 2, RepKind::posr, c * c); });
  }
  r.expect(cyclic < Ms(10'000), "cyclic m=2 took " + ms(cyclic));
  expect_none(r, GroupSpec::cyclic(3), 3, RepKind::posr);
  for (std::size_t m : {2, 3, 4}) expect_none(r, GroupSpec::cyclic(2), m, RepKind::posr);
  expect_none(r, GroupSpec::of(GroupKind::klein4), 2, RepKind::posr);
  expect_none(r, GroupSpec::of(GroupKind::klein4), 2, RepKind::pdr);
  expect_none(r, GroupSpec::dihedral(6), 2, RepKind::posr);
}

void criterion4(Outcome& r) {
  const auto q8 = timed([&] {
    const auto o = exists_mposr(named_group(GroupSpec::of(GroupKind::quaternion8)), 2, 3, RepKind::posr);
    r.expect(o.status == SearchStatus::exhausted_none, "Q8 " + status_name(o));
    r.expect(o.candidates_examined == 3136, "Q8 examined " + std::to_string(o.candidates_examined));
  });
  r.expect(q8 < Ms(120'000), "Q8 took " + ms(q8));
  Ms pair{0};
  for (auto k : {GroupKind::c4_semidirect_c4, GroupKind::smallgroup_16_3, GroupKind::smallgroup_32_2}) {
    const auto spec = GroupSpec::of(k);
    const auto t = timed([&] {
      const auto o = exists_mposr(named_group(spec), 2, 3, RepKind::posr);
      r.expect(o.status == SearchStatus::exhausted_none,
               display_name(spec) + " " + status_name(o) + " at candidate " + std::to_string(o.candidates_examined));
      if (k != GroupKind::smallgroup_32_2) {
        r.expect(o.candidates_examined <= 313'600, display_name(spec) + " examined " + std::to_string(o.candidates_examined));
      }
    });
    if (k != GroupKind::smallgroup_32_2) pair += t;
  }
  r.expect(pair < Ms(3'600'000), "order-16 pair took " + ms(pair));
}

void criterion5(Outcome& r) {
  for (const auto& claim : default_claims()) {
    if (claim.m != 2 || claim.kind != RepKind::posr || claim.expected != Expectation::exists_with_witness) continue;
    const auto name = display_name(claim.group);
    if (name != "D8" && name != "D10" && name != "Z3^2" && name != "A4" && name != "He3") continue;
    const auto t = timed([&] {
      const auto g = named_group(claim.group);
      const auto sets = resolve(g, *claim.sets);
      const auto v = validate_sets(g, sets, 3);
      r.expect(v.oriented && v.partite && v.regular, name + " sets are not a valid POSR system (oriented=" + (v.oriented ? "1" : "0") + ")");
      const auto order = aut_order(g, sets);
      r.expect(order == g.order(), name + " aut " + order.str());
    });
    r.expect(t < Ms(5000), name + " took " + ms(t));
  }
}

void criterion6(Outcome& r) {
  const auto t0 = Clock::now();
  for (auto spec : {GroupSpec::dihedral(8), GroupSpec::of(GroupKind::quaternion8), GroupSpec::of(GroupKind::elem_abelian_9),
                    GroupSpec::of(GroupKind::alternating4), GroupSpec::dihedral(12), GroupSpec::of(GroupKind::smallgroup_16_3)}) {
    const auto g = named_group(spec);
    for (std::size_t m = 3; m <= 6; ++m) {
      const auto label = display_name(spec) + " m=" + std::to_string(m);
      try {
        const auto sets = two_gen_mposr_sets(g, m);
        const auto v = validate_sets(g, sets, 3);
        r.expect(v.oriented && v.partite && v.regular, label + " invalid sets");
        const auto verdict = is_semiregular_rep(build_cayley(g, sets), g, {}, false);
        r.expect(verdict.is_representation && verdict.aut_order == g.order(), label + " aut " + verdict.aut_order.str());
      } catch (const Error& e) {
        r.expect(false, label + " " + e.what());
      }
    }
  }
  r.expect(since(t0) < Ms(300'000), "matrix took " + ms(since(t0)));
}

void criterion7(Outcome& r) {
  const auto t = timed([&] {
    for (const auto& f : fixed_digraphs()) {
      const auto& d = f.digraph;
      r.expect(d.is_regular(3) && !d.has_loops(), f.name + " not 3-regular");
      if (f.name == "fig1_9" || f.name == "fig1_10") r.expect(d.is_oriented(), f.name + " not oriented");
      const auto order = automorphism_group(d).order;
      r.expect(order == 1, f.name + " aut " + order.str());
    }
  });
  r.expect(t < Ms(1000), "took " + ms(t));
}

void criterion8(Outcome& r) {
  auto check = [&](std::size_t m, bool oriented, SearchStatus want) {
    const auto o = exists_antisymmetric_kregular(m, 3, oriented);
    r.expect(o.status == want, "m=" + std::to_string(m) + (oriented ? " oriented " : " digons ") + status_name(o));
  };
  const auto def = timed([&] {
    for (std::size_t m = 1; m <= 7; ++m) check(m, true, SearchStatus::exhausted_none);
  });
  r.expect(def < Ms(900'000), "oriented m<=7 took " + ms(def));
  check(8, true, SearchStatus::exhausted_none);
  for (std::size_t m = 1; m <= 6; ++m) check(m, false, SearchStatus::exhausted_none);
  check(7, false, SearchStatus::found_witness);
  check(9, true, SearchStatus::found_witness);
}

void criterion9(Outcome& r) {
  const auto t0 = Clock::now();
  for (const auto& claim : default_claims()) {
    if (claim.m != 2 || claim.kind != RepKind::pdr || claim.expected != Expectation::exists_with_witness) continue;
    const auto g = named_group(claim.group);
    const auto order = aut_order(g, resolve(g, *claim.sets));
    r.expect(order == g.order(), display_name(claim.group) + " aut " + order.str());
  }
  r.expect(since(t0) < Ms(30'000), "took " + ms(since(t0)));
}

std::set<Permutation> closure(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<Permutation> seen{perm::identity(n)};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& s : gens) {
        auto q = perm::compose(p, s);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

void criterion10(Outcome& r) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::size_t checked = 0;
  std::size_t bad = 0;
  auto compare = [&](const Digraph& d) {
    const auto a = automorphism_group(d);
    const auto brute = brute_force_automorphisms(d);
    const std::set<Permutation> expected(brute.begin(), brute.end());
    if (a.order != brute.size() || closure(a.generators, d.num_vertices()) != expected) ++bad;
    ++checked;
  };
  for (int i = 0; i < 1200; ++i) compare(testing::random_digraph(size(rng), density(rng), rng, i % 5 == 0));
  for (const auto& t : testing::all_tournaments(5)) compare(t);
  r.expect(bad == 0, std::to_string(bad) + " of " + std::to_string(checked) + " digraphs disagree");
}

void criterion11(Outcome& r) {
  std::mt19937_64 rng(7);
  const auto specs = testing::small_group_specs();
  std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
  std::uniform_int_distribution<std::size_t> parts(1, 3);
  std::size_t violations = 0;
  for (int i = 0; i < 100; ++i) {
    const auto g = named_group(specs[pick(rng)]);
    const auto m = parts(rng);
    const auto sets = testing::random_sets(g, m, rng, 2, m > 1);
    const auto pd = build_cayley(g, sets);
    bool ok = true;
    for (const auto& p : right_translations(g, m)) ok = ok && pd.digraph.is_automorphism(p);
    ok = ok && automorphism_group(pd.digraph).order >= g.order();
    if (!ok) ++violations;
  }
  r.expect(violations == 0, std::to_string(violations) + " violations");
}

void criterion12(Outcome& r) {
  std::vector<std::tuple<GroupSpec, std::size_t, RepKind>> cells;
  for (std::size_t n = 1; n <= 6; ++n) cells.emplace_back(GroupSpec::cyclic(n), 2, RepKind::posr);
  cells.emplace_back(GroupSpec::cyclic(3), 3, RepKind::posr);
  for (std::size_t m : {3, 4}) cells.emplace_back(GroupSpec::cyclic(2), m, RepKind::posr);
  cells.emplace_back(GroupSpec::of(GroupKind::klein4), 2, RepKind::posr);
  cells.emplace_back(GroupSpec::of(GroupKind::klein4), 2, RepKind::pdr);
  cells.emplace_back(GroupSpec::dihedral(6), 2, RepKind::posr);
  cells.emplace_back(GroupSpec::cyclic(7), 2, RepKind::posr);
  std::size_t disagreements = 0;
  for (const auto& [spec, m, kind] : cells) {
    const auto o = exists_mposr(named_group(spec), m, 3, kind);
    const bool found = o.status == SearchStatus::found_witness;
    if (o.status == SearchStatus::aborted || classify(spec, m, kind).admits != found) {
      ++disagreements;
      r.expect(false, display_name(spec) + " m=" + std::to_string(m) + " " + to_string(kind));
    }
  }
  if (classify(GroupSpec::cyclic(7), 2, RepKind::posr).admits != true) r.expect(false, "Z7 m=2 POSR not Yes");
  r.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria{criterion1, criterion2, criterion3,  criterion4,
                                                            criterion5, criterion6, criterion7,  criterion8,
                                                            criterion9, criterion10, criterion11, criterion12};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    const auto t = timed([&] {
      try {
        criteria[i](r);
      } catch (const std::exception& e) {
        r.expect(false, std::string("exception: ") + e.what());
      }
    });
    std::cout << "criterion " << i + 1 << ": " << (r.ok ? "PASS" : "FAIL") << " (" << ms(t);
    if (!r.ok) std::cout << "; " << r.notes.str();
    std::cout << ")" << std::endl;
    failed += r.ok ? 0 : 1;
  }
  std::cout << failed << " of " << criteria.size() << " criteria failed" << std::endl;
  return failed == 0 ? 0 : 1;
}
