#ifndef POSR_IO_HPP
#define POSR_IO_HPP

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "posr/catalog.hpp"
#include "posr/cayley.hpp"
#include "posr/digraph.hpp"
#include "posr/group.hpp"
#include "posr/search.hpp"

namespace posr {

using json = nlohmann::json;

inline json to_json(const GroupTable& g) {
  json gens = json::array();
  for (const auto& s : g.generators()) gens.push_back({{"label", s.label}, {"element", s.element}});
  json mult = json::array();
  for (Element a = 0; a < g.order(); ++a) {
    const auto row = g.row(a);
    mult.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  return {{"order", g.order()}, {"generators", gens}, {"mult", mult}};
}

inline json to_json(const WordSets& w) { return {{"m", w.m}, {"sets", w.cells}}; }

inline WordSets word_sets_from_json(const json& j) {
  try {
    WordSets w;
    w.m = j.at("m").get<std::size_t>();
    w.cells = j.at("sets").get<std::vector<std::vector<std::vector<std::string>>>>();
    if (w.cells.size() != w.m) fail(Errc::parse_error, "sets must be an m x m array");
    for (const auto& row : w.cells) {
      if (row.size() != w.m) fail(Errc::parse_error, "sets must be an m x m array");
    }
    return w;
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("connection sets JSON: ") + e.what());
  }
}

inline json to_json(const Digraph& d) {
  json arcs = json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
  return {{"n", d.num_vertices()}, {"arcs", arcs}};
}

/// Witness sets are written as words of `g`; timings only on request.
inline json to_json(const SearchOutcome& o, const GroupTable* g = nullptr, bool timings = false) {
  json j = {{"status", to_string(o.status)},
            {"candidates_examined", o.candidates_examined},
            {"total", o.total},
            {"up_to_group_automorphism", o.up_to_group_automorphism}};
  if (!o.abort_reason.empty()) j["abort_reason"] = o.abort_reason;
  if (o.sets && g) j["witness"] = to_json(to_words(*g, *o.sets));
  if (o.digraph) j["witness"] = to_json(*o.digraph);
  if (timings) j["elapsed_ms"] = o.elapsed.count();
  return j;
}

// ---------------------------------------------------------------------------
// Claims and reports

inline json to_json(const Claim& c) {
  return {{"id", c.id},
          {"group", to_token(c.group)},
          {"m", c.m},
          {"kind", to_string(c.kind)},
          {"expected", to_string(c.expected)},
          {"sets", c.sets ? to_json(*c.sets) : json(nullptr)},
          {"source", c.source},
          {"tier", to_string(c.tier)}};
}

inline Claim claim_from_json(const json& j) {
  try {
    Claim c;
    c.id = j.at("id").get<std::string>();
    c.group = parse_group_spec(j.at("group").get<std::string>());
    c.m = j.at("m").get<std::size_t>();
    c.kind = parse_rep_kind(j.at("kind").get<std::string>());
    c.expected = parse_expectation(j.at("expected").get<std::string>());
    if (j.contains("sets") && !j.at("sets").is_null()) c.sets = word_sets_from_json(j.at("sets"));
    c.source = j.value("source", "");
    c.tier = parse_tier(j.value("tier", "default"));
    if (c.expected == Expectation::exists_with_witness && !c.sets) fail(Errc::parse_error, "claim " + c.id + " needs sets");
    return c;
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("claim JSON: ") + e.what());
  }
}

inline json claims_to_json(const std::vector<Claim>& claims) {
  json arr = json::array();
  for (const auto& c : claims) arr.push_back(to_json(c));
  return {{"claims", arr}};
}

inline std::vector<Claim> claims_from_json(const json& j) {
  std::vector<Claim> out;
  for (const auto& c : j.at("claims")) out.push_back(claim_from_json(c));
  return out;
}

inline std::vector<Claim> load_claims(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  try {
    return claims_from_json(json::parse(in));
  } catch (const json::exception& e) {
    fail(Errc::parse_error, path + ": " + e.what());
  }
}

inline json to_json(const ClaimResult& r, bool timings = false) {
  json j = {{"id", r.claim.id},
            {"group", to_token(r.claim.group)},
            {"m", r.claim.m},
            {"kind", to_string(r.claim.kind)},
            {"expected", to_string(r.claim.expected)},
            {"tier", to_string(r.claim.tier)},
            {"source", r.claim.source},
            {"status", to_string(r.status)},
            {"detail", r.detail},
            {"candidates_examined", r.candidates_examined},
            {"candidates_total", r.candidates_total},
            {"search", r.search ? json(to_string(*r.search)) : json(nullptr)},
            {"aut_order", r.aut_order ? json(r.aut_order->str()) : json(nullptr)},
            {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
  if (timings) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

inline json to_json(const Report& rep, bool timings = false) {
  json claims = json::array();
  for (const auto& r : rep.results) claims.push_back(to_json(r, timings));
  return {{"tier", to_string(rep.tier)},
          {"claims", claims},
          {"summary",
           {{"total", rep.results.size()},
            {"pass", rep.count(ClaimStatus::pass)},
            {"failed", rep.count(ClaimStatus::failed)},
            {"skipped", rep.count(ClaimStatus::skipped)}}}};
}

inline std::string report_table(const Report& rep, bool timings = true) {
  std::size_t w = 5;
  for (const auto& r : rep.results) w = std::max(w, r.claim.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w)) << "claim" << "  " << std::setw(24) << "expected" << "  "
     << std::setw(7) << "status";
  if (timings) os << "  " << std::right << std::setw(9) << "ms";
  os << "  detail\n";
  for (const auto& r : rep.results) {
    std::string detail = r.detail;
    if (auto nl = detail.find('\n'); nl != std::string::npos) detail = detail.substr(0, nl) + " ...";
    os << std::left << std::setw(static_cast<int>(w)) << r.claim.id << "  " << std::setw(24) << to_string(r.claim.expected)
       << "  " << std::setw(7) << to_string(r.status);
    if (timings) os << "  " << std::right << std::setw(9) << r.elapsed.count();
    os << "  " << detail << "\n";
  }
  os << rep.results.size() << " claims: " << rep.count(ClaimStatus::pass) << " pass, " << rep.count(ClaimStatus::failed)
     << " failed, " << rep.count(ClaimStatus::skipped) << " skipped (tier " << to_string(rep.tier) << ")\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Digraph export

enum class ExportFormat { edgelist, dot, json };

inline ExportFormat parse_export_format(std::string_view s) {
  if (s == "edgelist") return ExportFormat::edgelist;
  if (s == "dot") return ExportFormat::dot;
  if (s == "json") return ExportFormat::json;
  fail(Errc::unsupported_format, "unsupported format '" + std::string(s) + "'");
}

inline std::string export_digraph(const Digraph& d, ExportFormat f, const std::string& name = "G") {
  switch (f) {
    case ExportFormat::edgelist: return to_edgelist(d);
    case ExportFormat::dot: return to_dot(d, name);
    case ExportFormat::json: return to_json(d).dump(2) + "\n";
  }
  fail(Errc::unsupported_format, "unsupported format");
}

inline std::string export_digraph(const Digraph& d, std::string_view format, const std::string& name = "G") {
  return export_digraph(d, parse_export_format(format), name);
}

}  // namespace posr

#endif  // POSR_IO_HPP
