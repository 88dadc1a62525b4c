#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "acm/acm.hpp"
#include "acm/arith.hpp"
#include "acm/atom_sieve.hpp"
#include "acm/common.hpp"

namespace acm {

enum class CheckpointSchedule { pow10, doubling };

// Geometric checkpoint ladder up to max_n inclusive.  pow10 starts at 10^3;
// max_n itself is always the final checkpoint.
inline std::vector<u64> make_checkpoints(u64 max_n,
                                         CheckpointSchedule s = CheckpointSchedule::pow10) {
  if (max_n == 0) throw validation_error("checkpoint range must be >= 1");
  std::vector<u64> cps;
  u64 cp = 1000;
  u64 factor = s == CheckpointSchedule::pow10 ? 10 : 2;
  while (cp < max_n) {
    cps.push_back(cp);
    if (cp > max_n / factor) break;
    cp *= factor;
  }
  if (cps.empty() || cps.back() != max_n) cps.push_back(max_n);
  return cps;
}

struct DensityPoint {
  u64 n;        // checkpoint
  u64 members;  // |M cap [1, n]|, including the unit
  u64 atoms;    // |A(M) cap [1, n]|
};

// Checkpointed atom densities D_N = atoms/members against the limit
// 1 - 1/q.  All counts come from one sieve pass; ratios stay exact.
struct DensityReport {
  u64 a = 0;
  u64 b = 0;
  u64 q = 1;
  std::vector<DensityPoint> points;

  Ratio limit() const { return Ratio::of(q - 1, q); }
  Ratio density_at(std::size_t i) const {
    return Ratio::of(points[i].atoms, points[i].members);
  }
  Ratio abs_error_at(std::size_t i) const {
    const DensityPoint& p = points[i];
    u128 lhs = u128(p.atoms) * q;
    u128 rhs = u128(p.members) * (q - 1);
    u128 num = lhs > rhs ? lhs - rhs : rhs - lhs;
    u128 den = u128(p.members) * q;
    // counts are capped well below 2^62, so both fit back into 64 bits
    return Ratio::of(static_cast<u64>(num), static_cast<u64>(den));
  }
};

inline DensityReport density_report(const AtomSieve& sieve, std::vector<u64> checkpoints) {
  if (checkpoints.empty()) throw validation_error("need at least one checkpoint");
  if (checkpoints.front() == 0) throw validation_error("checkpoints must be >= 1");
  for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i)
    if (checkpoints[i] >= checkpoints[i + 1])
      throw validation_error("checkpoints must be strictly ascending");
  if (checkpoints.back() > sieve.limit())
    throw validation_error("checkpoint beyond sieve limit");

  DensityReport rep;
  rep.a = sieve.monoid().a();
  rep.b = sieve.monoid().b();
  rep.q = sieve.monoid().q();
  u64 members = 0, atoms = 0;
  std::size_t next = 0;
  for (u64 n = 1; n <= checkpoints.back() && next < checkpoints.size(); ++n) {
    ElementStatus s = sieve.status(n);
    if (s != ElementStatus::non_member) ++members;
    if (s == ElementStatus::atom) ++atoms;
    if (n == checkpoints[next]) {
      rep.points.push_back(DensityPoint{n, members, atoms});
      ++next;
    }
  }
  return rep;
}

inline DensityReport density_report(const Acm& m, const std::vector<u64>& checkpoints,
                                    const AtomSieveConfig& cfg = {}) {
  if (checkpoints.empty()) throw validation_error("need at least one checkpoint");
  AtomSieve sieve(m, checkpoints.back(), cfg);
  return density_report(sieve, checkpoints);
}

inline void write_density_csv(const DensityReport& rep, std::ostream& os) {
  os << "# acm-density v1 a=" << rep.a << " b=" << rep.b << " q=" << rep.q
     << " max=" << (rep.points.empty() ? 0 : rep.points.back().n) << "\n";
  os << "N,members,atoms,density_num,density_den,density,limit,abs_error\n";
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    const DensityPoint& p = rep.points[i];
    Ratio d = rep.density_at(i);
    os << p.n << ',' << p.members << ',' << p.atoms << ',' << d.num << ',' << d.den
       << ',' << decimal6(d) << ',' << rep.limit().str() << ','
       << decimal6(rep.abs_error_at(i)) << "\n";
  }
}

// Counts for the partition of a singular ACM into Q (members divisible by
// q^2, the only place reducibles can live) and R (the rest, atoms plus the
// unit; the unit is placed in R).
struct PartitionCounts {
  u64 n = 0;
  u64 q_members = 0;
  u64 r_members = 0;
  u64 q_atoms = 0;
  u64 r_atoms = 0;
};

inline PartitionCounts qr_partition(const AtomSieve& sieve, u64 n) {
  const Acm& m = sieve.monoid();
  if (m.q() == 1) {
    throw validation_error("Q/R partition needs a singular ACM (q > 1); M_{" +
                           std::to_string(m.a()) + "," + std::to_string(m.b()) +
                           "} has q = 1");
  }
  if (n > sieve.limit()) throw validation_error("checkpoint beyond sieve limit");
  const u64 q2 = m.q() * m.q();
  PartitionCounts pc;
  pc.n = n;
  for (u64 v = 1; v <= n; ++v) {
    ElementStatus s = sieve.status(v);
    if (s == ElementStatus::non_member) continue;
    bool in_q = v % q2 == 0;
    (in_q ? pc.q_members : pc.r_members) += 1;
    if (s == ElementStatus::atom) (in_q ? pc.q_atoms : pc.r_atoms) += 1;
  }
  return pc;
}

inline PartitionCounts qr_partition(const Acm& m, u64 n, const AtomSieveConfig& cfg = {}) {
  if (m.q() == 1) {
    throw validation_error("Q/R partition needs a singular ACM (q > 1); M_{" +
                           std::to_string(m.a()) + "," + std::to_string(m.b()) +
                           "} has q = 1");
  }
  AtomSieve sieve(m, n, cfg);
  return qr_partition(sieve, n);
}

// Ratios |{n <= N : at most `bound` primes of n lie in cls}| / N along a
// checkpoint ladder.  Requires gcd(residue, modulus) = 1.
struct BoundedClassSeries {
  ResidueClass cls;
  u32 bound;
  PrimeCounting counting;
  std::vector<std::pair<u64, u64>> points;  // (checkpoint, qualifying count)

  Ratio ratio_at(std::size_t i) const {
    return Ratio::of(points[i].second, points[i].first);
  }
};

inline BoundedClassSeries bounded_class_series(
    const ResidueClass& cls, u32 bound, const std::vector<u64>& checkpoints,
    PrimeCounting counting = PrimeCounting::with_multiplicity,
    u64 spf_cap = kDefaultSpfLimitCap) {
  if (std::gcd(cls.residue, cls.modulus) != 1) {
    throw validation_error("bounded-class series needs gcd(residue, modulus) = 1; [" +
                           std::to_string(cls.residue) + "]_" +
                           std::to_string(cls.modulus) + " is not coprime");
  }
  if (checkpoints.empty()) throw validation_error("need at least one checkpoint");
  if (checkpoints.front() == 0) throw validation_error("checkpoints must be >= 1");
  for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i)
    if (checkpoints[i] >= checkpoints[i + 1])
      throw validation_error("checkpoints must be strictly ascending");

  SpfTable spf(checkpoints.back(), spf_cap);
  BoundedClassSeries series{cls, bound, counting, {}};
  u64 count = 0;
  std::size_t next = 0;
  for (u64 n = 1; n <= checkpoints.back() && next < checkpoints.size(); ++n) {
    if (omega_in_class(spf.factorize(n), cls, counting) <= bound) ++count;
    if (n == checkpoints[next]) {
      series.points.emplace_back(n, count);
      ++next;
    }
  }
  return series;
}

inline void write_series_csv(const BoundedClassSeries& s, std::ostream& os) {
  os << "# acm-series v1 residue=" << s.cls.residue << " modulus=" << s.cls.modulus
     << " bound=" << s.bound << " counting="
     << (s.counting == PrimeCounting::with_multiplicity ? "multiplicity" : "distinct")
     << "\n";
  os << "N,count,ratio_num,ratio_den,ratio\n";
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    Ratio r = s.ratio_at(i);
    os << s.points[i].first << ',' << s.points[i].second << ',' << r.num << ','
       << r.den << ',' << decimal6(r) << "\n";
  }
}

// Trend thresholds are engineering policy knobs, not claims: finite
// computation cannot certify a limit, and no convergence rate is known.
struct VerifyPolicy {
  Ratio max_final_error_singular{1, 20};  // q > 1
  Ratio max_final_error_regular{1, 5};    // q = 1 (the limit is 0)
  std::size_t min_checkpoints = 5;
};

// Theorem check for the atomic density limit 1 - 1/q.
//  - a = b >= 2: the atom set is exactly bZ \ b^2 Z, so atom counts are
//    checked EXACTLY against floor(N/b) - floor(N/b^2) at every checkpoint.
//  - otherwise: TREND verdict; the error series |D_N - (1 - 1/q)| must
//    decrease in a strict majority of steps and end below the policy
//    threshold, over at least min_checkpoints geometric checkpoints.
struct TheoremVerdict {
  enum class Mode { exact_count, trend };
  Mode mode = Mode::trend;
  bool pass = false;
  DensityReport report;

  // exact mode
  std::vector<u64> expected_atoms;
  // trend mode
  std::size_t decreasing_steps = 0;
  std::size_t total_steps = 0;
  bool majority_decreasing = false;
  bool final_error_ok = false;
  bool enough_checkpoints = false;
  std::size_t min_checkpoints_required = 0;
  Ratio threshold{0, 1};
};

inline TheoremVerdict verify_theorem(const Acm& m, u64 max_n,
                                     const VerifyPolicy& policy = {},
                                     CheckpointSchedule schedule = CheckpointSchedule::pow10,
                                     const AtomSieveConfig& cfg = {}) {
  TheoremVerdict v;
  v.report = density_report(m, make_checkpoints(max_n, schedule), cfg);

  if (m.a() == m.b() && m.b() >= 2) {
    v.mode = TheoremVerdict::Mode::exact_count;
    v.pass = true;
    const u64 b = m.b();
    for (const DensityPoint& p : v.report.points) {
      u64 expected = p.n / b - p.n / (b * b);
      v.expected_atoms.push_back(expected);
      if (p.atoms != expected) v.pass = false;
    }
    return v;
  }

  v.mode = TheoremVerdict::Mode::trend;
  v.threshold = m.q() > 1 ? policy.max_final_error_singular : policy.max_final_error_regular;
  const std::size_t k = v.report.points.size();
  v.min_checkpoints_required = policy.min_checkpoints;
  v.enough_checkpoints = k >= policy.min_checkpoints;
  v.total_steps = k > 0 ? k - 1 : 0;
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (v.report.abs_error_at(i + 1) < v.report.abs_error_at(i)) ++v.decreasing_steps;
  v.majority_decreasing = 2 * v.decreasing_steps > v.total_steps;
  v.final_error_ok = k > 0 && v.report.abs_error_at(k - 1) < v.threshold;
  v.pass = v.enough_checkpoints && v.majority_decreasing && v.final_error_ok;
  return v;
}

}  // namespace acm
