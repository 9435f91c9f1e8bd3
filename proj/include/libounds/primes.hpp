#pragma once

// Prime layer: a segmented odd-only sieve driving three consumers: one-shot
// prime counts, a streaming monotone counter for long interval walks, and a
// table of decade prime counts with their provenance. Counts are exact
// integers throughout; nothing here rounds.

#include "libounds/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace libounds {

struct SieveConfig {
  std::uint64_t limit = 2'200'000'000;   // largest integer the consumer may query
  std::uint64_t segment_size = 1u << 22; // integers per segment, must be even
};

// Primes up to and including n by a plain sieve; intended for base primes.
inline std::vector<std::uint32_t> small_primes_upto(std::uint32_t n) {
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= n; q += p) {
      composite[static_cast<std::size_t>(q)] = true;
    }
  }
  return primes;
}

namespace detail {

inline std::uint32_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::uint32_t>(r);
}

// One segment of odd integers [lo, lo + 2 * odds) with a bit per odd; bit set
// means "no base prime divides it".
class OddSegment {
 public:
  void load(std::uint64_t lo, std::uint64_t odds, const std::vector<std::uint32_t>& base) {
    lo_ = lo;
    odds_ = odds;
    words_.assign((odds + 63) / 64, ~std::uint64_t{0});
    std::uint64_t hi = lo + 2 * odds;  // exclusive
    for (std::uint32_t p : base) {
      if (p == 2) continue;
      std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
      if (pp >= hi) break;
      std::uint64_t start = std::max(pp, ((lo + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t idx = (start - lo) / 2; idx < odds; idx += p) {
        words_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
      }
    }
    if (lo_ == 1) {  // 1 is not prime
      words_[0] &= ~std::uint64_t{1};
    }
  }

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return lo_ + 2 * odds_; }
  bool bit(std::uint64_t odd_value) const {
    std::uint64_t idx = (odd_value - lo_) / 2;
    return (words_[idx >> 6] >> (idx & 63)) & 1;
  }

  // set bits with index in [a, b], word-wise
  std::uint64_t count_range(std::uint64_t a, std::uint64_t b) const {
    if (a > b) return 0;
    std::uint64_t wa = a >> 6, wb = b >> 6, total = 0;
    std::uint64_t first_mask = ~std::uint64_t{0} << (a & 63);
    std::uint64_t last_mask = ~std::uint64_t{0} >> (63 - (b & 63));
    if (wa == wb) {
      return static_cast<std::uint64_t>(__builtin_popcountll(words_[wa] & first_mask & last_mask));
    }
    total += __builtin_popcountll(words_[wa] & first_mask);
    for (std::uint64_t w = wa + 1; w < wb; ++w) total += __builtin_popcountll(words_[w]);
    total += __builtin_popcountll(words_[wb] & last_mask);
    return total;
  }

  template <typename Fn>
  void visit(std::uint64_t a, std::uint64_t b, Fn&& fn) const {
    for (std::uint64_t idx = a; idx <= b && idx < odds_; ++idx) {
      if ((words_[idx >> 6] >> (idx & 63)) & 1) fn(lo_ + 2 * idx);
    }
  }

 private:
  std::uint64_t lo_ = 0;
  std::uint64_t odds_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

// Visits every prime p with lo <= p <= hi in increasing order.
template <typename Fn>
inline void for_each_prime(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg, Fn&& fn) {
  if (hi < 2 || hi < lo) return;
  if (lo <= 2) fn(std::uint64_t{2});
  std::uint64_t start = std::max<std::uint64_t>(lo, 3) | 1;
  std::vector<std::uint32_t> base = small_primes_upto(detail::isqrt_u64(hi));
  std::uint64_t odds_per_segment = std::max<std::uint64_t>(cfg.segment_size / 2, 64);
  detail::OddSegment seg;
  for (std::uint64_t lo_odd = start; lo_odd <= hi; lo_odd += 2 * odds_per_segment) {
    std::uint64_t odds = std::min(odds_per_segment, (hi - lo_odd) / 2 + 1);
    seg.load(lo_odd, odds, base);
    seg.visit(0, odds - 1, fn);
  }
}

// Exact count of primes <= n.
inline std::uint64_t pi_sieve(std::uint64_t n, const SieveConfig& cfg = {}) {
  std::uint64_t count = 0;
  for_each_prime(2, n, cfg, [&](std::uint64_t) { ++count; });
  return count;
}

// Streaming counter: successive queries must be nondecreasing, and each
// answer is an exact prime count. Work is proportional to the distance
// advanced, so a long walk pays for each segment once.
class PrimeCounter {
 public:
  explicit PrimeCounter(SieveConfig cfg = {})
      : cfg_(cfg), base_(small_primes_upto(detail::isqrt_u64(std::max<std::uint64_t>(cfg.limit, 4)))) {
    odds_per_segment_ = std::max<std::uint64_t>(cfg_.segment_size / 2, 64);
  }

  const SieveConfig& config() const { return cfg_; }

  std::uint64_t count_upto(std::uint64_t n) {
    if (n > cfg_.limit) throw CapacityError("query beyond the configured sieve limit");
    if (n < last_query_) throw DomainError("streaming queries must be nondecreasing");
    last_query_ = n;
    while (counted_ < n) {
      if (counted_ < 2) {
        counted_ = std::min<std::uint64_t>(n, 2);
        if (counted_ == 2) ++count_;
        continue;
      }
      if (seg_.hi() <= counted_ + 1 || seg_.lo() == 0) {
        std::uint64_t lo = (counted_ + 1) | 1;
        seg_.load(lo, odds_per_segment_, base_);
      }
      std::uint64_t upto = std::min(n, seg_.hi() - 1);
      std::uint64_t a = counted_ + 1;
      if (a % 2 == 0) ++a;
      if (a <= upto) {
        std::uint64_t last_odd = upto - (upto % 2 == 0 ? 1 : 0);
        if (a <= last_odd) {
          count_ += seg_.count_range((a - seg_.lo()) / 2, (last_odd - seg_.lo()) / 2);
        }
      }
      counted_ = upto;
    }
    return count_;
  }

 private:
  SieveConfig cfg_;
  std::vector<std::uint32_t> base_;
  std::uint64_t odds_per_segment_ = 0;
  detail::OddSegment seg_;
  std::uint64_t counted_ = 1;     // every integer <= counted_ has been classified
  std::uint64_t count_ = 0;       // primes <= counted_
  std::uint64_t last_query_ = 0;
};

// Decade prime counts pi(10^k) for k = 1..29. Small decades are re-derivable
// by the sieve above; the large ones carry published values, so each entry
// reports its provenance.
class PiTable {
 public:
  static constexpr int kMinExponent = 1;
  static constexpr int kMaxExponent = 29;
  static constexpr int kMaxSieveExponent = 9;

  static mpz_class value(int k) {
    static const char* const kValues[] = {
        "4",
        "25",
        "168",
        "1229",
        "9592",
        "78498",
        "664579",
        "5761455",
        "50847534",
        "455052511",
        "4118054813",
        "37607912018",
        "346065536839",
        "3204941750802",
        "29844570422669",
        "279238341033925",
        "2623557157654233",
        "24739954287740860",
        "234057667276344607",
        "2220819602560918840",
        "21127269486018731928",
        "201467286689315906290",
        "1925320391606803968923",
        "18435599767349200867866",
        "176846309399143769411680",
        "1699246750872437141327603",
        "16352460426841680446427399",
        "157589269275973410412739598",
        "1520698109714272166094258063",
    };
    if (k < kMinExponent || k > kMaxExponent) {
      throw DomainError("decade exponent outside 1..29");
    }
    return mpz_class(kValues[k - 1]);
  }

  static const char* provenance(int k) {
    if (k < kMinExponent || k > kMaxExponent) {
      throw DomainError("decade exponent outside 1..29");
    }
    return k <= kMaxSieveExponent ? "sieve-checked" : "published";
  }
};

}  // namespace libounds
