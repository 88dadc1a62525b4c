#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "acm/acm.hpp"
#include "acm/atom_sieve.hpp"
#include "acm/block_monoid.hpp"
#include "acm/common.hpp"
#include "acm/density.hpp"

namespace acm {

inline nlohmann::json ratio_json(const Ratio& r) {
  return nlohmann::json{{"num", r.num}, {"den", r.den}, {"decimal", decimal6(r)}};
}

inline nlohmann::json sieve_listing_json(const AtomSieve& sieve, bool include_non_members) {
  nlohmann::json elems = nlohmann::json::array();
  for (u64 n = 1; n <= sieve.limit(); ++n) {
    ElementStatus s = sieve.status(n);
    if (!include_non_members && s == ElementStatus::non_member) continue;
    elems.push_back({{"n", n}, {"status", to_string(s)}});
  }
  return nlohmann::json{{"format", "acm-atoms"},
                        {"version", 1},
                        {"a", sieve.monoid().a()},
                        {"b", sieve.monoid().b()},
                        {"limit", sieve.limit()},
                        {"elements", elems}};
}

inline nlohmann::json sieve_summary_json(const AtomSieve& sieve) {
  u64 limit = sieve.limit();
  u64 atoms = sieve.count(ElementStatus::atom, limit);
  u64 reducibles = sieve.count(ElementStatus::reducible, limit);
  u64 members = atoms + reducibles + 1;  // the unit
  return nlohmann::json{{"format", "acm-atoms-summary"},
                        {"version", 1},
                        {"a", sieve.monoid().a()},
                        {"b", sieve.monoid().b()},
                        {"limit", limit},
                        {"members", members},
                        {"atoms", atoms},
                        {"reducibles", reducibles}};
}

inline nlohmann::json density_report_json(const DensityReport& rep) {
  nlohmann::json cps = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    const DensityPoint& p = rep.points[i];
    cps.push_back({{"N", p.n},
                   {"members", p.members},
                   {"atoms", p.atoms},
                   {"density", ratio_json(rep.density_at(i))},
                   {"abs_error", decimal6(rep.abs_error_at(i))}});
  }
  return nlohmann::json{{"format", "acm-density"},
                        {"version", 1},
                        {"a", rep.a},
                        {"b", rep.b},
                        {"q", rep.q},
                        {"limit", rep.limit().str()},
                        {"checkpoints", cps}};
}

inline nlohmann::json block_atoms_json(u64 modulus, const std::vector<Block>& atoms,
                                       u32 davenport) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Block& blk : atoms) arr.push_back(blk.letters);
  return nlohmann::json{{"format", "acm-block-atoms"},
                        {"version", 1},
                        {"modulus", modulus},
                        {"atoms", arr},
                        {"davenport", davenport}};
}

inline nlohmann::json factorizations_json(const Acm& m, u64 n,
                                          const std::vector<std::vector<u64>>& fzs) {
  std::set<std::size_t> lengths;
  for (const auto& f : fzs) lengths.insert(f.size());
  nlohmann::json j{{"format", "acm-factorizations"},
                   {"version", 1},
                   {"a", m.a()},
                   {"b", m.b()},
                   {"element", n},
                   {"factorizations", fzs},
                   {"length_set", lengths}};
  if (!lengths.empty()) {
    u64 lo = *lengths.begin(), hi = *lengths.rbegin();
    Ratio e = lo == 0 ? Ratio{1, 1} : Ratio::of(hi, lo);
    j["elasticity"] = {{"num", e.num}, {"den", e.den}};
  }
  return j;
}

inline nlohmann::json series_json(const BoundedClassSeries& s) {
  nlohmann::json cps = nlohmann::json::array();
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    cps.push_back({{"N", s.points[i].first},
                   {"count", s.points[i].second},
                   {"ratio", ratio_json(s.ratio_at(i))}});
  }
  return nlohmann::json{
      {"format", "acm-series"},
      {"version", 1},
      {"residue", s.cls.residue},
      {"modulus", s.cls.modulus},
      {"bound", s.bound},
      {"counting",
       s.counting == PrimeCounting::with_multiplicity ? "multiplicity" : "distinct"},
      {"checkpoints", cps}};
}

inline nlohmann::json verdict_json(const TheoremVerdict& v) {
  nlohmann::json j{{"format", "acm-verify"},
                   {"version", 1},
                   {"a", v.report.a},
                   {"b", v.report.b},
                   {"q", v.report.q},
                   {"limit", v.report.limit().str()},
                   {"pass", v.pass}};
  if (v.mode == TheoremVerdict::Mode::exact_count) {
    j["mode"] = "exact";
    nlohmann::json cps = nlohmann::json::array();
    for (std::size_t i = 0; i < v.report.points.size(); ++i) {
      const DensityPoint& p = v.report.points[i];
      cps.push_back({{"N", p.n},
                     {"atoms", p.atoms},
                     {"expected_atoms", v.expected_atoms[i]},
                     {"match", p.atoms == v.expected_atoms[i]}});
    }
    j["checkpoints"] = cps;
  } else {
    j["mode"] = "trend";
    nlohmann::json cps = nlohmann::json::array();
    for (std::size_t i = 0; i < v.report.points.size(); ++i) {
      const DensityPoint& p = v.report.points[i];
      cps.push_back({{"N", p.n},
                     {"members", p.members},
                     {"atoms", p.atoms},
                     {"density", ratio_json(v.report.density_at(i))},
                     {"abs_error", decimal6(v.report.abs_error_at(i))}});
    }
    j["checkpoints"] = cps;
    j["policy"] = {{"max_final_error", v.threshold.str()},
                   {"min_checkpoints", v.min_checkpoints_required}};
    j["decreasing_steps"] = v.decreasing_steps;
    j["total_steps"] = v.total_steps;
    j["majority_decreasing"] = v.majority_decreasing;
    j["final_error_ok"] = v.final_error_ok;
    j["enough_checkpoints"] = v.enough_checkpoints;
  }
  return j;
}

}  // namespace acm
