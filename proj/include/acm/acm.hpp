#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "acm/arith.hpp"
#include "acm/common.hpp"

namespace acm {

enum class AcmKind { regular, singular };

// The multiplicative monoid {n >= 1 : n = a mod b} U {1}, valid whenever
// 1 <= a <= b and a^2 = a (mod b).  Immutable after construction; derived
// quantities q = gcd(a,b), a = q*a', b = q*b' are computed once.
class Acm {
 public:
  static Acm create(u64 a, u64 b) {
    if (a == 0 || b == 0 || a > b) {
      throw validation_error("invalid ACM parameters: require 1 <= a <= b (got a=" +
                             std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }
    u128 t = u128(a) * a - a;
    if (t % b != 0) {
      throw validation_error(
          "closure condition a^2 = a (mod b) fails: " + std::to_string(a) + "^2 - " +
          std::to_string(a) + " is not divisible by " + std::to_string(b));
    }
    return Acm(a, b);
  }

  u64 a() const { return a_; }
  u64 b() const { return b_; }
  u64 q() const { return q_; }
  u64 a_prime() const { return a_prime_; }
  u64 b_prime() const { return b_prime_; }
  AcmKind kind() const { return kind_; }
  bool regular() const { return kind_ == AcmKind::regular; }

  // Residue of every non-unit member: a mod b (0 when a = b).
  u64 residue() const { return residue_; }

  // Smallest member greater than 1; stepping by b from here enumerates
  // all non-unit members.
  u64 first_nonunit() const { return a_ == 1 ? 1 + b_ : a_; }

  bool contains(u64 n) const { return n == 1 || (n != 0 && n % b_ == residue_); }

 private:
  Acm(u64 a, u64 b)
      : a_(a),
        b_(b),
        q_(std::gcd(a, b)),
        a_prime_(a / q_),
        b_prime_(b / q_),
        residue_(a % b),
        kind_(a == 1 ? AcmKind::regular : AcmKind::singular) {
    // gcd(q, b') = 1 holds for every valid ACM; a violation here would be
    // a logic bug, not bad input.
    if (std::gcd(q_, b_prime_) != 1)
      throw std::logic_error("ACM invariant gcd(q, b') = 1 violated");
  }

  u64 a_, b_, q_, a_prime_, b_prime_, residue_;
  AcmKind kind_;
};

enum class ElementStatus : u8 { non_member = 0, unit = 1, atom = 2, reducible = 3 };

inline const char* to_string(ElementStatus s) {
  switch (s) {
    case ElementStatus::non_member: return "non_member";
    case ElementStatus::unit: return "unit";
    case ElementStatus::atom: return "atom";
    case ElementStatus::reducible: return "reducible";
  }
  return "?";
}

// Classifies n by scanning candidate divisors d = a (mod b), d <= sqrt(n).
// Both d and n/d must be verified as members: n is reducible exactly when
// some such d divides n with n/d again a non-unit member.
inline ElementStatus classify(const Acm& m, u64 n) {
  if (n == 0) return ElementStatus::non_member;
  if (n == 1) return ElementStatus::unit;
  if (!m.contains(n)) return ElementStatus::non_member;
  const u64 b = m.b();
  for (u64 d = m.first_nonunit(); d <= n / d; d += b)
    if (n % d == 0 && m.contains(n / d)) return ElementStatus::reducible;
  return ElementStatus::atom;
}

inline bool is_atom(const Acm& m, u64 n) { return classify(m, n) == ElementStatus::atom; }

// A certified non-trivial splitting n = d * e with both factors non-unit
// members.  d is minimal, so results are deterministic.
struct Witness {
  u64 d;
  u64 e;

  friend bool operator==(const Witness& x, const Witness& y) {
    return x.d == y.d && x.e == y.e;
  }
};

inline std::optional<Witness> reducibility_witness(const Acm& m, u64 n) {
  if (!m.contains(n)) {
    throw validation_error(std::to_string(n) + " is not a member of M_{" +
                           std::to_string(m.a()) + "," + std::to_string(m.b()) + "}");
  }
  if (n == 1) return std::nullopt;
  const u64 b = m.b();
  for (u64 d = m.first_nonunit(); d <= n / d; d += b)
    if (n % d == 0 && m.contains(n / d)) return Witness{d, n / d};
  return std::nullopt;
}

}  // namespace acm
