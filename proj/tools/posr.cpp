#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "posr/posr.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailure = 1;
constexpr int kUsage = 2;
constexpr int kAborted = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

posr::Digraph read_digraph(const std::string& input, const std::string& fixed) {
  if (!fixed.empty()) return posr::fixed_digraph(fixed).digraph;
  const auto text = slurp(input);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto j = posr::json::parse(text);
    std::vector<posr::Arc> arcs;
    for (const auto& a : j.at("arcs")) arcs.emplace_back(a.at(0).get<posr::Vertex>(), a.at(1).get<posr::Vertex>());
    return {j.at("n").get<std::size_t>(), std::move(arcs)};
  }
  return posr::parse_edgelist(text);
}

struct Config {
  std::string tier;
  std::string output;
  std::string claims_path;
  std::string write_claims;
  std::string out_path;
  std::string group;
  std::size_t m = 0;
  std::string kind = "posr";
  unsigned threads = 0;
  bool timings = false;
  bool reduce = false;
  bool antisymmetric = false;
  bool digons = false;
  std::size_t k = 3;
  std::string expect;
  std::uint64_t max_candidates = 0;
  std::uint64_t time_limit_ms = 0;
  std::uint64_t node_budget = posr::kDefaultNodeBudget;
  std::uint64_t chunk_size = 1024;
  std::string checkpoint;
  bool progress = false;
  std::uint64_t progress_every = 100'000;
  std::string input;
  std::string fixed;
  std::string sets_path;
};

int run_verify(const Config& c) {
  if (!c.write_claims.empty()) {
    write_out(posr::claims_to_json(posr::default_claims()).dump(2) + "\n", c.write_claims);
    return kOk;
  }
  posr::SuiteBudget b;
  b.tier = posr::parse_tier(c.tier);
  b.threads = c.threads;
  b.max_candidates = c.max_candidates;
  b.time_limit = std::chrono::milliseconds(c.time_limit_ms);
  b.checkpoint_dir = c.checkpoint;
  if (c.progress) b.progress = &std::cerr;
  const auto claims = c.claims_path.empty() ? posr::default_claims() : posr::load_claims(c.claims_path);
  const auto rep = posr::verify_all(b, claims);
  if (c.output == "json") {
    write_out(posr::to_json(rep, c.timings).dump(2) + "\n", c.out_path);
  } else {
    write_out(posr::report_table(rep, true), c.out_path);
  }
  if (!rep.ok()) return kClaimFailure;
  return rep.any_aborted() ? kAborted : kOk;
}

int run_search(const Config& c) {
  posr::SearchOptions opt;
  opt.threads = c.threads;
  opt.chunk_size = c.chunk_size;
  opt.reduce_by_group_automorphisms = c.reduce;
  opt.max_candidates = c.max_candidates;
  opt.time_limit = std::chrono::milliseconds(c.time_limit_ms);
  opt.checkpoint_path = c.checkpoint;
  opt.aut.node_budget = c.node_budget;
  if (c.progress) opt.progress = &std::cerr;
  opt.progress_every = c.progress_every;

  posr::SearchOutcome o;
  std::optional<posr::GroupTable> g;
  if (c.antisymmetric) {
    o = posr::exists_antisymmetric_kregular(c.m, c.k, !c.digons, opt);
  } else {
    g = posr::named_group(posr::parse_group_spec(c.group));
    o = posr::exists_mposr(*g, c.m, c.k, posr::parse_rep_kind(c.kind), opt);
  }
  if (c.output == "json") {
    write_out(posr::to_json(o, g ? &*g : nullptr, c.timings).dump(2) + "\n", c.out_path);
  } else {
    std::ostringstream os;
    os << posr::to_string(o.status) << ": examined " << o.candidates_examined << " of " << o.total << " candidates";
    if (o.up_to_group_automorphism) os << " (up to group automorphism)";
    if (!o.abort_reason.empty()) os << ", " << o.abort_reason;
    os << "\n";
    if (o.sets && g) os << posr::to_json(posr::to_words(*g, *o.sets)).dump() << "\n";
    if (o.digraph) os << posr::to_edgelist(*o.digraph);
    write_out(os.str(), c.out_path);
  }
  if (o.status == posr::SearchStatus::aborted) return kAborted;
  if (c.expect == "none" && o.status == posr::SearchStatus::found_witness) return kClaimFailure;
  if (c.expect == "witness" && o.status == posr::SearchStatus::exhausted_none) return kClaimFailure;
  return kOk;
}

int run_aut(const Config& c) {
  const auto d = read_digraph(c.input, c.fixed);
  posr::AutOptions opt;
  opt.node_budget = c.node_budget;
  const auto r = posr::automorphism_group(d, opt);
  if (c.output == "json") {
    posr::json gens = posr::json::array();
    for (const auto& p : r.generators) gens.push_back(posr::perm::to_cycles(p));
    write_out(posr::json{{"n", d.num_vertices()}, {"order", r.order.str()}, {"generators", gens}, {"base", r.base}}.dump(2) + "\n",
              c.out_path);
  } else {
    std::ostringstream os;
    os << "order " << r.order.str() << "\n";
    for (const auto& p : r.generators) os << posr::perm::to_cycles(p) << "\n";
    write_out(os.str(), c.out_path);
  }
  return kOk;
}

int run_build(const Config& c) {
  posr::Digraph d;
  if (!c.fixed.empty()) {
    d = posr::fixed_digraph(c.fixed).digraph;
  } else {
    const auto g = posr::named_group(posr::parse_group_spec(c.group));
    const auto w = posr::word_sets_from_json(posr::json::parse(slurp(c.sets_path)));
    if (c.m != 0 && w.m != c.m) throw UsageError("--m does not match the sets file");
    d = posr::build_cayley(g, posr::resolve(g, w)).digraph;
  }
  write_out(posr::export_digraph(d, c.output), c.out_path);
  return kOk;
}

int run_classify(const Config& c) {
  const auto spec = posr::parse_group_spec(c.group);
  const auto r = posr::classify(spec, c.m, posr::parse_rep_kind(c.kind));
  if (c.output == "json") {
    write_out(posr::json{{"group", posr::to_token(spec)},
                         {"m", c.m},
                         {"kind", posr::to_string(posr::parse_rep_kind(c.kind))},
                         {"verdict", posr::verdict_string(r)},
                         {"citation", r.citation}}
                      .dump(2) + "\n",
              c.out_path);
  } else {
    write_out(posr::verdict_string(r) + ": " + r.citation + "\n", c.out_path);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-partite oriented semiregular representations of valency 3"};
  app.require_subcommand(1);
  Config c;
  const char* env_tier = std::getenv("POSR_TIER");
  c.tier = env_tier ? env_tier : "default";

  auto* verify = app.add_subcommand("verify", "Run the registered claim suite");
  verify->add_option("--tier", c.tier, "default or extended (env POSR_TIER)")->check(CLI::IsMember({"default", "extended"}));
  verify->add_option("--output", c.output, "json or table")->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--claims", c.claims_path, "Claim registry JSON (default: built-in)")->check(CLI::ExistingFile);
  verify->add_option("--write-claims", c.write_claims, "Write the built-in registry as JSON and exit");
  verify->add_flag("--timings", c.timings, "Include elapsed_ms in JSON output");

  auto* search = app.add_subcommand("search", "Exhaustive existence search");
  search->add_option("--group", c.group, "Group token, e.g. cyclic:6, dihedral:8, smallgroup:16:3");
  search->add_option("--kind", c.kind, "posr or pdr")->check(CLI::IsMember({"posr", "pdr", "POSR", "PDR"}));
  auto* anti = search->add_flag("--antisymmetric", c.antisymmetric, "Search k-regular digraphs with trivial automorphism group");
  search->add_flag("--digons", c.digons, "Allow digons in the antisymmetric search")->needs(anti);
  search->add_option("--k", c.k, "Valency")->check(CLI::Range(1, 64));
  search->add_flag("--reduce", c.reduce, "Skip systems equivalent under Aut(G)");
  search->add_option("--expect", c.expect, "none or witness; exit 1 on mismatch")->check(CLI::IsMember({"none", "witness"}));
  search->add_option("--checkpoint", c.checkpoint, "Resume cursor file");
  search->add_option("--chunk-size", c.chunk_size, "Candidates per work unit")->check(CLI::PositiveNumber);
  search->add_flag("--progress", c.progress, "JSON progress lines on stderr");
  search->add_option("--progress-every", c.progress_every, "Candidates between progress lines")->check(CLI::PositiveNumber);
  search->add_flag("--timings", c.timings, "Include elapsed_ms in JSON output");
  search->add_option("--output", c.output, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* aut = app.add_subcommand("aut", "Automorphism group of a digraph");
  auto* in_opt = aut->add_option("--input", c.input, "Edge list or JSON digraph")->check(CLI::ExistingFile);
  aut->add_option("--fixed", c.fixed, "Built-in digraph: fig1_9, fig1_10, gamma7, gamma8")->excludes(in_opt);
  aut->add_option("--output", c.output, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* build = app.add_subcommand("build", "Emit an m-Cayley digraph");
  build->add_option("--group", c.group, "Group token");
  auto* sets_opt = build->add_option("--sets", c.sets_path, "Connection sets JSON {\"m\", \"sets\"}")->check(CLI::ExistingFile);
  build->add_option("--fixed", c.fixed, "Built-in digraph instead of group and sets")->excludes(sets_opt);
  build->add_option("--output", c.output, "edgelist, dot or json")->check(CLI::IsMember({"edgelist", "dot", "json"}));

  auto* classify = app.add_subcommand("classify", "Verdict of the classification table");
  classify->add_option("--group", c.group, "Group token")->required();
  classify->add_option("--kind", c.kind, "posr or pdr")->check(CLI::IsMember({"posr", "pdr", "POSR", "PDR"}));
  classify->add_option("--output", c.output, "json or table")->check(CLI::IsMember({"json", "table"}));

  for (auto* s : {verify, search, aut, build, classify}) {
    s->add_option("-o,--out", c.out_path, "Output file (default stdout)");
  }
  for (auto* s : {verify, search}) {
    s->add_option("--threads", c.threads, "Worker threads (0: hardware concurrency)");
    s->add_option("--max-candidates", c.max_candidates, "Abort after this many candidates");
    s->add_option("--time-limit-ms", c.time_limit_ms, "Abort after this many milliseconds");
  }
  verify->add_option("--checkpoint-dir", c.checkpoint, "Directory for per-claim resume cursors");
  verify->add_flag("--progress", c.progress, "JSON progress lines on stderr");
  for (auto* s : {search, aut}) s->add_option("--node-budget", c.node_budget, "Search-tree node budget per automorphism computation");
  for (auto* s : {search, build}) s->add_option("--m", c.m, "Number of parts")->check(CLI::PositiveNumber);
  classify->add_option("--m", c.m, "Number of parts")->required()->check(CLI::Range(2, 1'000'000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (c.output.empty()) c.output = *search ? "json" : *build ? "edgelist" : "table";
  try {
    if (*verify) return run_verify(c);
    if (*search) {
      if (c.m == 0) throw UsageError("search needs --m");
      if (c.antisymmetric == !c.group.empty()) throw UsageError("search needs exactly one of --group and --antisymmetric");
      return run_search(c);
    }
    if (*aut) {
      if (c.input.empty() == c.fixed.empty()) throw UsageError("aut needs --input or --fixed");
      return run_aut(c);
    }
    if (*build) {
      if (c.fixed.empty() && (c.group.empty() || c.sets_path.empty())) throw UsageError("build needs --group and --sets, or --fixed");
      return run_build(c);
    }
    if (*classify) return run_classify(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const posr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case posr::Errc::parse_error:
      case posr::Errc::invalid_parameter:
      case posr::Errc::unsupported_format:
      case posr::Errc::unsupported:
      case posr::Errc::out_of_range:
      case posr::Errc::precondition_failed:
      case posr::Errc::unknown_generator:
      case posr::Errc::too_large:
        return kUsage;
      case posr::Errc::budget_exceeded:
        return kAborted;
      default:
        return kClaimFailure;
    }
  } catch (const posr::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
