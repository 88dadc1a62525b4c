// Command-line driver for the ACM toolkit: atom sieving, density
// reports, block-monoid atoms, factorizations into atoms, and theorem
// verification.  Exit codes: 0 ok, 2 validation error, 3 resource cap,
// 4 verification verdict failed.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acm/acm.hpp"
#include "acm/arith.hpp"
#include "acm/atom_sieve.hpp"
#include "acm/block_monoid.hpp"
#include "acm/density.hpp"
#include "acm/factorizations.hpp"
#include "acm/json_io.hpp"

namespace {

using acm::u32;
using acm::u64;

// Accepts plain integers and scientific notation ("1e7", "2.5e3" is
// rejected as non-integral).
u64 parse_count(const std::string& text) {
  if (text.empty()) throw acm::validation_error("empty numeric argument");
  try {
    if (text.find_first_of("eE.") == std::string::npos) {
      std::size_t pos = 0;
      u64 v = std::stoull(text, &pos);
      if (pos != text.size()) throw acm::validation_error("trailing characters");
      return v;
    }
    std::size_t pos = 0;
    long double v = std::stold(text, &pos);
    if (pos != text.size() || v < 0 || v > 9.2e18L || std::floor(v) != v)
      throw acm::validation_error("not a nonnegative integer");
    return static_cast<u64>(v);
  } catch (const acm::validation_error&) {
    throw acm::validation_error("invalid numeric argument '" + text + "'");
  } catch (const std::exception&) {
    throw acm::validation_error("invalid numeric argument '" + text + "'");
  }
}

// "0.05" -> 1/20 exactly
acm::Ratio parse_decimal_ratio(const std::string& text) {
  std::size_t dot = text.find('.');
  std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (whole.empty() && frac.empty())
    throw acm::validation_error("invalid decimal '" + text + "'");
  for (char c : whole + frac)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw acm::validation_error("invalid decimal '" + text + "'");
  if (frac.size() > 18) throw acm::validation_error("decimal too precise: '" + text + "'");
  u64 den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  u64 num = std::stoull(whole.empty() ? "0" : whole) * den +
            (frac.empty() ? 0 : std::stoull(frac));
  return acm::Ratio::of(num, den);
}

std::vector<u64> parse_checkpoint_list(const std::string& text) {
  std::vector<u64> cps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) cps.push_back(parse_count(item));
  return cps;
}

unsigned env_default_threads() {
  const char* v = std::getenv("ACM_THREADS");
  if (!v) return 1;
  try {
    return static_cast<unsigned>(parse_count(v));
  } catch (const acm::validation_error&) {
    return 1;
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw acm::validation_error("cannot open output file '" + path + "'");
  out << text;
}

struct CommonOpts {
  std::string a_text, b_text;
  std::string out_path;
  bool json = false;
  unsigned threads = env_default_threads();
  std::string segment_text;

  acm::AtomSieveConfig sieve_config() const {
    acm::AtomSieveConfig cfg;
    cfg.threads = threads;
    if (!segment_text.empty()) cfg.segment_size = parse_count(segment_text);
    return cfg;
  }
};

void add_monoid_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--a", opts.a_text, "lower residue a of M_{a,b}")->required();
  cmd->add_option("--b", opts.b_text, "modulus b of M_{a,b}")->required();
}

void add_output_flags(CLI::App* cmd, CommonOpts& opts, bool json_switch) {
  cmd->add_option("-o,--output", opts.out_path, "write output to a file instead of stdout");
  if (json_switch) cmd->add_flag("--json", opts.json, "emit JSON instead of CSV");
}

void add_sieve_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--threads", opts.threads,
                  "worker threads for sieving (default $ACM_THREADS or 1; 0 = all cores)");
  cmd->add_option("--segment-size", opts.segment_text, "sieve segment size in elements");
}

int run_atoms(const CommonOpts& opts, const std::string& limit_text, bool summary,
              bool include_non_members) {
  acm::Acm m = acm::Acm::create(parse_count(opts.a_text), parse_count(opts.b_text));
  acm::AtomSieve sieve(m, parse_count(limit_text), opts.sieve_config());
  std::ostringstream os;
  if (opts.json) {
    os << (summary ? acm::sieve_summary_json(sieve)
                   : acm::sieve_listing_json(sieve, include_non_members))
              .dump(2)
       << "\n";
  } else if (summary) {
    u64 atoms = sieve.count(acm::ElementStatus::atom, sieve.limit());
    u64 red = sieve.count(acm::ElementStatus::reducible, sieve.limit());
    os << "# acm-atoms v1 a=" << m.a() << " b=" << m.b() << " limit=" << sieve.limit()
       << "\n";
    os << "members,atoms,reducibles\n";
    os << (atoms + red + 1) << ',' << atoms << ',' << red << "\n";
  } else if (include_non_members) {
    sieve.write_csv(os);
  } else {
    os << "# acm-atoms v1 a=" << m.a() << " b=" << m.b() << " limit=" << sieve.limit()
       << "\n";
    os << "n,status\n";
    for (u64 n = 1; n <= sieve.limit(); ++n) {
      acm::ElementStatus s = sieve.status(n);
      if (s != acm::ElementStatus::non_member)
        os << n << ',' << acm::to_string(s) << "\n";
    }
  }
  emit(os.str(), opts.out_path);
  return 0;
}

int run_density(const CommonOpts& opts, const std::string& max_text,
                const std::string& checkpoints_text, const std::string& schedule_text) {
  acm::Acm m = acm::Acm::create(parse_count(opts.a_text), parse_count(opts.b_text));
  std::vector<u64> cps;
  if (!checkpoints_text.empty()) {
    cps = parse_checkpoint_list(checkpoints_text);
  } else {
    auto schedule = schedule_text == "doubling" ? acm::CheckpointSchedule::doubling
                                                : acm::CheckpointSchedule::pow10;
    cps = acm::make_checkpoints(parse_count(max_text), schedule);
  }
  acm::DensityReport rep = acm::density_report(m, cps, opts.sieve_config());
  std::ostringstream os;
  if (opts.json) {
    os << acm::density_report_json(rep).dump(2) << "\n";
  } else {
    acm::write_density_csv(rep, os);
  }
  emit(os.str(), opts.out_path);
  return 0;
}

int run_block(const CommonOpts& opts, const std::string& b_text, const std::string& cap_text) {
  u64 b = parse_count(b_text);
  acm::BlockAtomsConfig cfg;
  if (!cap_text.empty()) cfg.max_group_order = parse_count(cap_text);
  std::vector<acm::Block> atoms = acm::block_atoms(b, cfg);
  u32 dav = 0;
  for (const acm::Block& blk : atoms)
    dav = std::max<u32>(dav, static_cast<u32>(blk.letters.size()));
  std::ostringstream os;
  os << acm::block_atoms_json(b, atoms, dav).dump(2) << "\n";
  emit(os.str(), opts.out_path);
  return 0;
}

int run_factorize(const CommonOpts& opts, const std::string& n_text,
                  const std::string& max_value_text, const std::string& max_factors_text) {
  acm::Acm m = acm::Acm::create(parse_count(opts.a_text), parse_count(opts.b_text));
  acm::FactorizationCaps caps;
  if (!max_value_text.empty()) caps.max_value = parse_count(max_value_text);
  if (!max_factors_text.empty())
    caps.max_factors = static_cast<u32>(parse_count(max_factors_text));
  u64 n = parse_count(n_text);
  auto fzs = acm::factorizations(m, n, caps);
  std::ostringstream os;
  os << acm::factorizations_json(m, n, fzs).dump(2) << "\n";
  emit(os.str(), opts.out_path);
  return 0;
}

int run_verify(const CommonOpts& opts, const std::string& max_text,
               const std::string& threshold_text, std::size_t min_checkpoints,
               const std::string& schedule_text) {
  acm::Acm m = acm::Acm::create(parse_count(opts.a_text), parse_count(opts.b_text));
  acm::VerifyPolicy policy;
  policy.min_checkpoints = min_checkpoints;
  if (!threshold_text.empty()) {
    acm::Ratio t = parse_decimal_ratio(threshold_text);
    policy.max_final_error_singular = t;
    policy.max_final_error_regular = t;
  }
  auto schedule = schedule_text == "doubling" ? acm::CheckpointSchedule::doubling
                                              : acm::CheckpointSchedule::pow10;
  acm::TheoremVerdict v =
      acm::verify_theorem(m, parse_count(max_text), policy, schedule, opts.sieve_config());
  std::ostringstream os;
  os << acm::verdict_json(v).dump(2) << "\n";
  emit(os.str(), opts.out_path);
  return v.pass ? 0 : 4;
}

int run_series(const CommonOpts& opts, const std::string& residue_text,
               const std::string& modulus_text, const std::string& bound_text,
               const std::string& max_text, const std::string& checkpoints_text,
               bool distinct) {
  acm::ResidueClass cls(parse_count(residue_text), parse_count(modulus_text));
  std::vector<u64> cps = checkpoints_text.empty()
                             ? acm::make_checkpoints(parse_count(max_text))
                             : parse_checkpoint_list(checkpoints_text);
  auto counting = distinct ? acm::PrimeCounting::distinct
                           : acm::PrimeCounting::with_multiplicity;
  acm::BoundedClassSeries s =
      acm::bounded_class_series(cls, static_cast<u32>(parse_count(bound_text)), cps, counting);
  std::ostringstream os;
  if (opts.json) {
    os << acm::series_json(s).dump(2) << "\n";
  } else {
    acm::write_series_csv(s, os);
  }
  emit(os.str(), opts.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetical congruence monoid toolkit"};
  app.require_subcommand(1);

  CommonOpts atoms_opts, density_opts, block_opts, fact_opts, verify_opts, series_opts;

  // atoms
  auto* atoms_cmd = app.add_subcommand("atoms", "classify every element of [1, limit]");
  std::string atoms_limit;
  bool atoms_summary = false, atoms_all = false;
  add_monoid_flags(atoms_cmd, atoms_opts);
  atoms_cmd->add_option("--limit", atoms_limit, "classification range end")->required();
  atoms_cmd->add_flag("--summary", atoms_summary, "print member/atom/reducible counts only");
  atoms_cmd->add_flag("--all", atoms_all, "include non-member rows in the listing");
  add_output_flags(atoms_cmd, atoms_opts, true);
  add_sieve_flags(atoms_cmd, atoms_opts);

  // density
  auto* density_cmd =
      app.add_subcommand("density", "checkpointed atomic density against 1 - 1/q");
  std::string density_max, density_cps, density_schedule = "pow10";
  add_monoid_flags(density_cmd, density_opts);
  density_cmd->add_option("--max", density_max, "largest checkpoint");
  density_cmd->add_option("--checkpoints", density_cps,
                          "explicit comma-separated checkpoint list");
  density_cmd->add_option("--schedule", density_schedule, "pow10 (default) or doubling");
  add_output_flags(density_cmd, density_opts, true);
  add_sieve_flags(density_cmd, density_opts);

  // block
  auto* block_cmd =
      app.add_subcommand("block", "atoms and Davenport constant of B(Z_b^*)");
  std::string block_b, block_cap;
  block_cmd->add_option("--b", block_b, "modulus of the unit group")->required();
  block_cmd->add_option("--max-phi", block_cap, "enumeration cap on phi(b) (default 24)");
  add_output_flags(block_cmd, block_opts, false);

  // factorize
  auto* fact_cmd =
      app.add_subcommand("factorize", "all factorizations of a member into atoms");
  std::string fact_n, fact_max_value, fact_max_factors;
  add_monoid_flags(fact_cmd, fact_opts);
  fact_cmd->add_option("--n", fact_n, "member to factor")->required();
  fact_cmd->add_option("--max-value", fact_max_value, "enumeration value cap (default 1e9)");
  fact_cmd->add_option("--max-factors", fact_max_factors, "factor count cap (default 64)");
  add_output_flags(fact_cmd, fact_opts, false);

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "check the density theorem: exact counts for a = b, trend otherwise");
  std::string verify_max, verify_threshold, verify_schedule = "pow10";
  std::size_t verify_min_cps = 5;
  add_monoid_flags(verify_cmd, verify_opts);
  verify_cmd->add_option("--max", verify_max, "largest checkpoint")->required();
  verify_cmd->add_option("--threshold", verify_threshold,
                         "final |D_N - (1 - 1/q)| bound, e.g. 0.05 (policy, not a claim)");
  verify_cmd->add_option("--min-checkpoints", verify_min_cps,
                         "minimum geometric checkpoints for a trend verdict");
  verify_cmd->add_option("--schedule", verify_schedule, "pow10 (default) or doubling");
  add_output_flags(verify_cmd, verify_opts, false);
  add_sieve_flags(verify_cmd, verify_opts);

  // series
  auto* series_cmd = app.add_subcommand(
      "series", "density of integers with a bounded prime count in a residue class");
  std::string series_residue, series_modulus, series_bound, series_max, series_cps;
  bool series_distinct = false;
  series_cmd->add_option("--residue", series_residue, "residue of the class")->required();
  series_cmd->add_option("--modulus", series_modulus, "modulus of the class")->required();
  series_cmd->add_option("--bound", series_bound, "max primes of n allowed in the class")
      ->required();
  series_cmd->add_option("--max", series_max, "largest checkpoint");
  series_cmd->add_option("--checkpoints", series_cps, "explicit checkpoint list");
  series_cmd->add_flag("--distinct", series_distinct,
                       "count distinct primes instead of with multiplicity");
  add_output_flags(series_cmd, series_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (atoms_cmd->parsed())
      return run_atoms(atoms_opts, atoms_limit, atoms_summary, atoms_all);
    if (density_cmd->parsed()) {
      if (density_max.empty() && density_cps.empty())
        throw acm::validation_error("density needs --max or --checkpoints");
      return run_density(density_opts, density_max, density_cps, density_schedule);
    }
    if (block_cmd->parsed()) return run_block(block_opts, block_b, block_cap);
    if (fact_cmd->parsed())
      return run_factorize(fact_opts, fact_n, fact_max_value, fact_max_factors);
    if (verify_cmd->parsed())
      return run_verify(verify_opts, verify_max, verify_threshold, verify_min_cps,
                        verify_schedule);
    if (series_cmd->parsed()) {
      if (series_max.empty() && series_cps.empty())
        throw acm::validation_error("series needs --max or --checkpoints");
      return run_series(series_opts, series_residue, series_modulus, series_bound,
                        series_max, series_cps, series_distinct);
    }
  } catch (const acm::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const acm::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
