#pragma once

#include <atomic>
#include <cstring>
#include <istream>
#include <ostream>
#include <thread>
#include <vector>

#include "acm/acm.hpp"
#include "acm/common.hpp"

namespace acm {

inline constexpr u64 kDefaultAtomSieveLimitCap = u64(1) << 30;

struct AtomSieveConfig {
  u64 limit_cap = kDefaultAtomSieveLimitCap;
  u64 segment_size = kDefaultSegmentSize;
  unsigned threads = 1;  // 0 = hardware concurrency
};

// Complete status classification of [1, limit] for one ACM.
//
// Construction first stamps every member as a provisional atom, then marks
// reducibles by product-marking over member pairs m1 <= m2 (every product
// of two or more non-units is some such pair, by closure).  The range is
// cut into segments; segments are independent and write disjoint slices of
// the status array, so the result is identical for any thread count.
class AtomSieve {
 public:
  AtomSieve(const Acm& m, u64 limit, const AtomSieveConfig& cfg = {})
      : acm_(m), limit_(limit) {
    if (limit_ == 0) throw validation_error("sieve limit must be >= 1");
    if (limit_ > cfg.limit_cap) {
      throw resource_error("sieve limit " + std::to_string(limit_) +
                           " exceeds cap " + std::to_string(cfg.limit_cap));
    }
    build(cfg);
  }

  const Acm& monoid() const { return acm_; }
  u64 limit() const { return limit_; }

  ElementStatus status(u64 n) const {
    if (n == 0 || n > limit_) {
      throw validation_error("sieve index " + std::to_string(n) +
                             " outside [1, " + std::to_string(limit_) + "]");
    }
    return static_cast<ElementStatus>(status_[n]);
  }

  u64 count(ElementStatus target, u64 up_to) const {
    u64 c = 0;
    for (u64 n = 1; n <= up_to && n <= limit_; ++n)
      if (status_[n] == static_cast<u8>(target)) ++c;
    return c;
  }

  std::vector<u64> collect(ElementStatus target, u64 up_to) const {
    std::vector<u64> out;
    for (u64 n = 1; n <= up_to && n <= limit_; ++n)
      if (status_[n] == static_cast<u8>(target)) out.push_back(n);
    return out;
  }

  friend bool operator==(const AtomSieve& x, const AtomSieve& y) {
    return x.acm_.a() == y.acm_.a() && x.acm_.b() == y.acm_.b() &&
           x.limit_ == y.limit_ && x.status_ == y.status_;
  }

  // Binary format: "ACMS" magic, u32 version, u64 a, b, limit, then the
  // statuses for n = 1..limit packed two bits each, little-endian fields.
  void write_binary(std::ostream& os) const {
    os.write("ACMS", 4);
    write_u32(os, 1);
    write_u64(os, acm_.a());
    write_u64(os, acm_.b());
    write_u64(os, limit_);
    std::vector<u8> packed((limit_ + 3) / 4, 0);
    for (u64 n = 1; n <= limit_; ++n)
      packed[(n - 1) / 4] |= static_cast<u8>(status_[n] << (((n - 1) % 4) * 2));
    os.write(reinterpret_cast<const char*>(packed.data()),
             static_cast<std::streamsize>(packed.size()));
  }

  static AtomSieve read_binary(std::istream& is) {
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "ACMS", 4) != 0)
      throw validation_error("not an atom sieve file (bad magic)");
    u32 version = read_u32(is);
    if (version != 1)
      throw validation_error("unsupported sieve format version " + std::to_string(version));
    u64 a = read_u64(is);
    u64 b = read_u64(is);
    u64 limit = read_u64(is);
    Acm m = Acm::create(a, b);
    if (limit == 0) throw validation_error("sieve file with zero limit");
    std::vector<u8> packed((limit + 3) / 4);
    if (!is.read(reinterpret_cast<char*>(packed.data()),
                 static_cast<std::streamsize>(packed.size())))
      throw validation_error("truncated sieve file");
    AtomSieve s(m, limit, from_file_tag{});
    for (u64 n = 1; n <= limit; ++n) {
      u8 v = (packed[(n - 1) / 4] >> (((n - 1) % 4) * 2)) & 3;
      bool member = m.contains(n);
      bool ok = member ? (n == 1 ? v == u8(ElementStatus::unit)
                                 : (v == u8(ElementStatus::atom) ||
                                    v == u8(ElementStatus::reducible)))
                       : v == u8(ElementStatus::non_member);
      if (!ok) throw validation_error("corrupt sieve file: inconsistent status at n=" +
                                      std::to_string(n));
      s.status_[n] = v;
    }
    return s;
  }

  void write_csv(std::ostream& os) const {
    os << "# acm-atom-sieve v1 a=" << acm_.a() << " b=" << acm_.b()
       << " limit=" << limit_ << "\n";
    os << "n,status\n";
    for (u64 n = 1; n <= limit_; ++n)
      os << n << ',' << to_string(static_cast<ElementStatus>(status_[n])) << "\n";
  }

 private:
  struct from_file_tag {};
  AtomSieve(const Acm& m, u64 limit, from_file_tag)
      : acm_(m), limit_(limit), status_(limit + 1, 0) {}

  static void write_u32(std::ostream& os, u32 v) {
    char buf[4];
    for (int i = 0; i < 4; ++i) buf[i] = char((v >> (8 * i)) & 0xff);
    os.write(buf, 4);
  }
  static void write_u64(std::ostream& os, u64 v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = char((v >> (8 * i)) & 0xff);
    os.write(buf, 8);
  }
  static u32 read_u32(std::istream& is) {
    unsigned char buf[4];
    if (!is.read(reinterpret_cast<char*>(buf), 4))
      throw validation_error("truncated sieve file");
    u32 v = 0;
    for (int i = 0; i < 4; ++i) v |= u32(buf[i]) << (8 * i);
    return v;
  }
  static u64 read_u64(std::istream& is) {
    unsigned char buf[8];
    if (!is.read(reinterpret_cast<char*>(buf), 8))
      throw validation_error("truncated sieve file");
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64(buf[i]) << (8 * i);
    return v;
  }

  void build(const AtomSieveConfig& cfg) {
    status_.assign(limit_ + 1, static_cast<u8>(ElementStatus::non_member));
    status_[1] = static_cast<u8>(ElementStatus::unit);
    const u64 b = acm_.b();
    const u64 first = acm_.first_nonunit();
    for (u64 n = first; n <= limit_; n += b)
      status_[n] = static_cast<u8>(ElementStatus::atom);

    if (limit_ < 2) return;
    const u64 seg = std::max<u64>(cfg.segment_size, 16);
    const u64 nsegs = (limit_ - 2) / seg + 1;

    auto mark_segment = [&](u64 lo, u64 hi) {
      const u64 r = acm_.residue();
      for (u64 m1 = first; m1 <= hi / m1; m1 += b) {
        u64 m2 = std::max(m1, (lo + m1 - 1) / m1);
        m2 += (r + b - m2 % b) % b;  // align up to the member class
        const u64 m2_max = hi / m1;
        for (; m2 <= m2_max; m2 += b)
          status_[m1 * m2] = static_cast<u8>(ElementStatus::reducible);
      }
    };

    unsigned threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(std::min<u64>(threads, nsegs));

    if (threads <= 1) {
      for (u64 s = 0; s < nsegs; ++s)
        mark_segment(2 + s * seg, std::min(limit_, 2 + s * seg + seg - 1));
      return;
    }
    std::atomic<u64> next{0};
    auto worker = [&] {
      for (u64 s = next.fetch_add(1); s < nsegs; s = next.fetch_add(1))
        mark_segment(2 + s * seg, std::min(limit_, 2 + s * seg + seg - 1));
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Acm acm_;
  u64 limit_;
  std::vector<u8> status_;
};

inline AtomSieve atoms_up_to(const Acm& m, u64 limit, const AtomSieveConfig& cfg = {}) {
  return AtomSieve(m, limit, cfg);
}

}  // namespace acm
