#pragma once

// Certification layer: every inequality the library relies on is restated
// here as an executable check over an explicit grid, producing a certificate
// with the grid hash, the number of points, the number of violations, and the
// smallest margin seen. Inequalities are tested non-strictly; exact equality
// is recorded, never counted as a violation. A negative margin is a violation
// and the first few offenders are kept verbatim in the report.

#include "libounds/li.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace libounds {

struct CheckFailure {
  std::string where;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::string grid_description;
  std::uint64_t grid_hash = 0;
  std::uint64_t points_tested = 0;  // individual inequality instances evaluated
  std::uint64_t failures = 0;
  Real margin_min;  // +inf until a point is recorded
  bool equality_observed = false;
  std::string notes;
  std::vector<CheckFailure> failure_samples;

  CheckReport(std::string check_name, mpfr_prec_t bits)
      : name(std::move(check_name)), margin_min(bits) {
    mpfr_set_inf(margin_min.raw(), 1);
  }

  bool passed() const { return failures == 0; }

  std::string certificate_line() const {
    std::ostringstream out;
    out << "check=" << name << " grid=0x" << std::hex << grid_hash << std::dec
        << " points=" << points_tested << " failures=" << failures << " min_margin="
        << (points_tested ? margin_min.str(6) : std::string("none"))
        << " equality=" << (equality_observed ? "yes" : "no")
        << " status=" << (passed() ? "PASS" : "FAIL");
    if (!notes.empty()) out << " notes=\"" << notes << '"';
    return out.str();
  }
};

namespace detail {

inline void record_margin(CheckReport& rep, const Real& margin, const std::string& where,
                          const std::string& detail) {
  ++rep.points_tested;
  if (margin < rep.margin_min) rep.margin_min = margin;
  if (margin.is_zero()) rep.equality_observed = true;
  if (margin < 0) {
    ++rep.failures;
    if (rep.failure_samples.size() < 8) rep.failure_samples.push_back({where, detail});
  }
}

// margin of "lhs <= rhs", scaled so values are comparable across magnitudes
inline Real rel_margin(const Real& lhs, const Real& rhs) {
  Real scale = max(max(abs(lhs), abs(rhs)), Real(1L, lhs.precision()));
  return (rhs - lhs) / scale;
}

inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

struct Grid {
  std::vector<Real> points;
  std::string description;
  std::uint64_t hash = 0;
};

// Log-spaced backbone over [x_min, x_max] plus, for each supplied scale k, a
// tight cluster of points around every x where k * log x crosses an integer;
// those crossings are where the truncation cut jumps and margins are thinnest.
inline Grid build_grid(const Real& x_min, const Real& x_max, const std::vector<Real>& scales,
                       std::size_t base_points, std::size_t cluster_points,
                       const PrecisionContext& ctx) {
  if (x_min <= 1 || x_max < x_min) throw DomainError("grid range must satisfy 1 < x_min <= x_max");
  if (base_points < 2 || cluster_points < 2) {
    throw DomainError("grid needs at least two backbone and two cluster points");
  }
  Grid g;
  Real ylo = log(x_min), yhi = log(x_max);
  g.points.reserve(base_points);
  // clamping keeps exp(log ...) round-trips from leaving [x_min, x_max]
  auto push = [&](const Real& y) {
    Real x = exp(y);
    if (x < x_min) x = x_min;
    if (x > x_max) x = x_max;
    g.points.push_back(std::move(x));
  };
  for (std::size_t j = 0; j < base_points; ++j) {
    if (j == 0) {
      g.points.push_back(x_min);
    } else if (j == base_points - 1) {
      g.points.push_back(x_max);
    } else {
      push(ylo + (yhi - ylo) * static_cast<long>(j) / static_cast<long>(base_points - 1));
    }
  }
  const Real delta = pow2(-20, ctx.bits());
  for (const Real& kappa : scales) {
    std::int64_t m_lo = std::max<std::int64_t>(1, (kappa * ylo - delta).floor_int64());
    std::int64_t m_hi = (kappa * yhi + delta).floor_int64();
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
      Real wlo = max((ctx.make(static_cast<long>(m)) - delta) / kappa, ylo);
      Real whi = min((ctx.make(static_cast<long>(m)) + delta) / kappa, yhi);
      if (whi < wlo) continue;
      for (std::size_t t = 0; t < cluster_points; ++t) {
        push(wlo + (whi - wlo) * static_cast<long>(t) / static_cast<long>(cluster_points - 1));
      }
    }
  }
  std::uint64_t h = 1469598103934665603ULL;
  for (const Real& p : g.points) h = detail::fnv1a64(p.str(25), h);
  g.hash = h;
  std::ostringstream desc;
  desc << g.points.size() << " points, log-spaced [" << x_min.str(6) << ", " << x_max.str(6)
       << "] with " << cluster_points << "-point clusters at cut crossings";
  g.description = desc.str();
  return g;
}

// The default certification grid for a root pair: backbone plus clusters for
// both roots and for the natural cut.
inline Grid build_default_grid(const KappaSolution& sol, const Real& x_max,
                               const PrecisionContext& ctx, std::size_t base_points = 10000,
                               std::size_t cluster_points = 200) {
  std::vector<Real> scales{sol.kappa_under, sol.kappa_over, ctx.make(1L)};
  return build_grid(ctx.e(), x_max, scales, base_points, cluster_points, ctx);
}

// m!/log^(m+1)(x) < C_k * x^(-w) / sqrt(log x) with m = floor(k log x), for
// x >= e^(1/k). Margin is (bound - value) / bound. A grid point below the
// domain is a caller error, not a skip.
inline CheckReport check_stirling_upper(const Real& kappa, const Grid& grid,
                                        const PrecisionContext& ctx) {
  CheckReport rep("stirling_upper", ctx.bits());
  rep.grid_description = grid.description;
  rep.grid_hash = grid.hash;
  Real omega = omega_of_kappa(kappa, ctx);
  Real c = sqrt(2L * ctx.pi() / kappa) * exp(ctx.make(13) / 12L);
  Real x_floor = exp(1L / kappa);
  for (const Real& x : grid.points) {
    if (x < x_floor) throw DomainError("grid point below e^(1/kappa)");
    Real y = log(x);
    std::int64_t m = (kappa * y).floor_int64();
    Real value = ctx.factorial_real(static_cast<unsigned long>(m)) / pow_int(y, m + 1);
    Real bound = c * pow(x, -omega) / sqrt(y);
    detail::record_margin(rep, (bound - value) / bound, "x=" + x.str(20),
                          "value=" + value.str(20) + " bound=" + bound.str(20));
  }
  return rep;
}

// B_k * x^(-w) / sqrt(log x) < m!/log^(m+1)(x), same domain and cut as the
// upper check. Margin is (value - bound) / value.
inline CheckReport check_stirling_lower(const Real& kappa, const Grid& grid,
                                        const PrecisionContext& ctx) {
  CheckReport rep("stirling_lower", ctx.bits());
  rep.grid_description = grid.description;
  rep.grid_hash = grid.hash;
  Real omega = omega_of_kappa(kappa, ctx);
  Real b = sqrt(ctx.pi() / (2L * kappa));
  Real x_floor = exp(1L / kappa);
  for (const Real& x : grid.points) {
    if (x < x_floor) throw DomainError("grid point below e^(1/kappa)");
    Real y = log(x);
    std::int64_t m = (kappa * y).floor_int64();
    Real value = ctx.factorial_real(static_cast<unsigned long>(m)) / pow_int(y, m + 1);
    Real bound = b * pow(x, -omega) / sqrt(y);
    detail::record_margin(rep, (value - bound) / value, "x=" + x.str(20),
                          "value=" + value.str(20) + " bound=" + bound.str(20));
  }
  return rep;
}

// a^(a log x) = x^(a log a) and (a/e)^(a log x) = x^(-a(1 - log a)), computed
// along different routes; agreement is required to within 2^(16 - bits)
// relative. Exact equality of the two routes is recorded when it happens.
inline CheckReport check_aux_identities(const Grid& grid, const PrecisionContext& ctx) {
  CheckReport rep("aux_identities", ctx.bits());
  rep.grid_description = grid.description;
  rep.grid_hash = grid.hash;
  const Real tol = pow2(16 - static_cast<long>(ctx.bits()), ctx.bits());
  std::mt19937_64 rng(0x616c706861ULL);
  std::uniform_real_distribution<double> pick(1.0 / 64, 4.0);
  std::vector<Real> alphas{ctx.make(1L) / 2L, ctx.make(1L), ctx.make(2L), ctx.e()};
  for (const Real& x : grid.points) {
    Real a = ctx.make(pick(rng));
    Real loga = log(a);
    Real y = log(x);
    Real lhs = pow(a, a * y);
    Real rhs = pow(x, a * loga);
    Real rel = abs(lhs - rhs) / rhs;
    if (lhs == rhs) rep.equality_observed = true;
    detail::record_margin(rep, (tol - rel) / tol, "x=" + x.str(20) + " a=" + a.str(20),
                          "lhs=" + lhs.str(25) + " rhs=" + rhs.str(25));
    Real lhs2 = pow(a / ctx.e(), a * y);
    Real rhs2 = 1L / pow(x, a * (1L - loga));
    Real rel2 = abs(lhs2 - rhs2) / rhs2;
    if (lhs2 == rhs2) rep.equality_observed = true;
    detail::record_margin(rep, (tol - rel2) / tol, "x=" + x.str(20) + " a=" + a.str(20),
                          "lhs=" + lhs2.str(25) + " rhs=" + rhs2.str(25));
  }
  // fixed weights, including a = 1 where both sides collapse to 1 exactly
  for (const Real& a : alphas) {
    for (const Real& x : {ctx.e(), ctx.make(100L), ctx.make("1e9")}) {
      Real lhs = pow(a, a * log(x));
      Real rhs = pow(x, a * log(a));
      if (lhs == rhs) rep.equality_observed = true;
      Real rel = abs(lhs - rhs) / rhs;
      detail::record_margin(rep, (tol - rel) / tol, "x=" + x.str(20) + " a=" + a.str(20),
                            "lhs=" + lhs.str(25) + " rhs=" + rhs.str(25));
    }
  }
  return rep;
}

// a - 1 < floor(a) <= ceil(a) < a + 1 for a > 0, and for 0 < r <= s:
// (r/s)^floor(a) <= (s/r)(r/s)^a and (r/s)(r/s)^a <= (r/s)^ceil(a).
// Real-valued samples come from a fixed-seed generator; integer and
// near-integer a are forced in, and the r = s degenerate case exercises the
// equality path.
inline CheckReport check_floor_lemmas(const PrecisionContext& ctx) {
  CheckReport rep("floor_lemmas", ctx.bits());
  rep.grid_description = "1000 seeded (a, r, s) samples plus integer, near-integer, and r=s cases";
  std::mt19937_64 rng(0x666c6f6fULL);
  std::uniform_real_distribution<double> pick_a(1.0 / 1024, 200.0);
  std::uniform_real_distribution<double> pick_rs(1.0 / 128, 8.0);
  std::vector<std::pair<Real, std::pair<Real, Real>>> samples;
  for (int i = 0; i < 1000; ++i) {
    double r = pick_rs(rng), s = pick_rs(rng);
    if (r > s) std::swap(r, s);
    samples.push_back({ctx.make(pick_a(rng)), {ctx.make(r), ctx.make(s)}});
  }
  for (long k = 1; k <= 24; ++k) {
    samples.push_back({ctx.make(k), {ctx.make(1L) / 3L, ctx.make(2L)}});
    samples.push_back({ctx.make(k) + pow2(-50, ctx.bits()), {ctx.make(2L), ctx.make(3L)}});
    samples.push_back({ctx.make(k) - pow2(-50, ctx.bits()), {ctx.make(3L), ctx.make(3L)}});
  }
  for (const auto& sample : samples) {
    const Real& a = sample.first;
    const Real& r = sample.second.first;
    const Real& s = sample.second.second;
    Real fl = floor(a), ce = ceil(a);
    detail::record_margin(rep, fl - (a - 1L), "a=" + a.str(20), "floor=" + fl.str(5));
    detail::record_margin(rep, ce - fl, "a=" + a.str(20), "ceil=" + ce.str(5));
    detail::record_margin(rep, (a + 1L) - ce, "a=" + a.str(20), "ceil=" + ce.str(5));
    Real ratio = r / s;
    Real base = pow(ratio, a);
    Real left = pow_int(ratio, fl.floor_int64());
    Real mid = (s / r) * base;
    Real right = pow_int(ratio, ce.floor_int64());
    detail::record_margin(rep, detail::rel_margin(left, mid),
                          "a=" + a.str(20) + " r/s=" + ratio.str(20), "floor-power bound");
    detail::record_margin(rep, detail::rel_margin(ratio * base, right),
                          "a=" + a.str(20) + " r/s=" + ratio.str(20), "ceil-power bound");
  }
  return rep;
}

// S(n) = sum_{k=1..n} k!/n^k satisfies S(n+1) <= S(n) <= 1, with equality
// S(1) = S(2) = 1. Verified in exact integer arithmetic (numerator against
// n^n, cross-multiplied for monotonicity), and the floating evaluation must
// agree with the exact value to 2^(16 - bits) relative.
inline CheckReport check_sum_factorial_power(unsigned long n_max, const PrecisionContext& ctx) {
  CheckReport rep("sum_factorial_power", ctx.bits());
  std::ostringstream desc;
  desc << "exact rational S(n) for n = 1.." << n_max;
  rep.grid_description = desc.str();
  const Real tol = pow2(16 - static_cast<long>(ctx.bits()), ctx.bits());
  mpz_class prev_num = 0, prev_den = 1;
  for (unsigned long n = 1; n <= n_max; ++n) {
    mpz_class den, num = 0, power = 1;  // power = n^(n-k), built downward
    mpz_pow_ui(den.get_mpz_t(), mpz_class(n).get_mpz_t(), n);
    // k runs from n down to 1 so the power of n can grow upward
    mpz_class fact_k = ctx.factorial(n);
    for (unsigned long k = n; k >= 1; --k) {
      num += fact_k * power;
      power *= n;
      fact_k /= k;
    }
    bool equal_one = (num == den);
    if (equal_one) rep.equality_observed = true;
    Real margin(Real(mpz_class(den - num), ctx.bits()) / Real(den, ctx.bits()));
    detail::record_margin(rep, margin, "n=" + std::to_string(n), "S(n) vs 1, exact");
    if (n > 1) {
      mpz_class lhs = num * prev_den, rhs = prev_num * den;
      Real mono(Real(mpz_class(rhs - lhs), ctx.bits()) / Real(rhs, ctx.bits()));
      if (lhs == rhs) rep.equality_observed = true;
      detail::record_margin(rep, mono, "n=" + std::to_string(n), "S(n) vs S(n-1), exact");
    }
    prev_num = num;
    prev_den = den;
    Real yn = ctx.make(static_cast<long>(n));
    Real streamed = truncated_factorial_series(yn, static_cast<std::int64_t>(n), ctx.make(1L)) - 1L;
    Real exact = Real(num, ctx.bits()) / Real(den, ctx.bits());
    Real rel = abs(streamed - exact) / max(exact, Real(1L, ctx.bits()));
    detail::record_margin(rep, (tol - rel) / tol, "n=" + std::to_string(n),
                          "float vs exact agreement");
  }
  return rep;
}

namespace detail {

// terms of the two product shapes, exact in rationals when y is rational
inline mpq_class lower_terms_sum(const mpq_class& y, long m, long upto) {
  mpq_class sum = 0, term = 1;
  for (long k = 1; k <= upto; ++k) {
    term *= mpq_class(m + k) / y;
    sum += term;
  }
  return sum;
}

inline mpq_class upper_terms_sum(const mpq_class& y, long m, long upto) {
  mpq_class sum = 0, term = 1;
  for (long k = 1; k <= upto; ++k) {
    term *= y / mpq_class(m - k + 1);
    sum += term;
  }
  return sum;
}

}  // namespace detail

// The six product-sum facts behind the error-bound corollaries, each with
// 1000 seeded samples, evaluated in exact rational arithmetic:
//  1. (1/y^k) prod_{i<=k}(m+i) is nonincreasing in k and bounded by 1
//     (m < floor(y), k <= floor(y) - m)
//  2. their sum up to floor(y) - m is at most floor(y) - m
//  3. the same sum is at most 2(y+m)/(y-m)
//  4. y^k prod_{i<k} 1/(m-i) is nonincreasing in k and bounded by y/m <= 1
//     (m > floor(y), k <= m - floor(y))
//  5. their sum up to m - floor(y) is at most m - floor(y)
//  6. the same sum is at most 2(2y/(m-y+1))
inline CheckReport check_product_sum_bounds(const PrecisionContext& ctx) {
  CheckReport rep("product_sum_bounds", ctx.bits());
  rep.grid_description = "6 statements x 1000 seeded rational (y, m, j, k) samples";
  std::mt19937_64 rng(0x70726f64ULL);
  auto rand_in = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto to_real = [&](const mpq_class& q) {
    return Real(q.get_num(), ctx.bits()) / Real(q.get_den(), ctx.bits());
  };
  for (int sample = 0; sample < 1000; ++sample) {
    // rational y in [2, 120] with a modest denominator
    long den = rand_in(1, 64);
    long num = rand_in(2 * den, 120 * den);
    mpq_class y(num, den);
    y.canonicalize();
    long n = static_cast<long>(mpz_class(y.get_num() / y.get_den()).get_si());

    {  // lower shape: 0 <= m < n
      long m = rand_in(0, n - 1);
      long kmax = n - m;
      long k = rand_in(1, kmax);
      long j = rand_in(1, k);
      mpq_class t_j = detail::lower_terms_sum(y, m, j) - detail::lower_terms_sum(y, m, j - 1);
      mpq_class t_k = detail::lower_terms_sum(y, m, k) - detail::lower_terms_sum(y, m, k - 1);
      if (t_k == t_j) rep.equality_observed = true;
      detail::record_margin(rep, to_real(t_j - t_k), "y=" + y.get_str() + " m=" + std::to_string(m),
                            "statement 1: term(k) <= term(j)");
      detail::record_margin(rep, to_real(1 - t_j), "y=" + y.get_str() + " m=" + std::to_string(m),
                            "statement 1: term <= 1");
      mpq_class total = detail::lower_terms_sum(y, m, kmax);
      detail::record_margin(rep, to_real(mpq_class(kmax) - total),
                            "y=" + y.get_str() + " m=" + std::to_string(m),
                            "statement 2: sum <= n - m");
      mpq_class cap = 2 * (y + m) / (y - m);
      detail::record_margin(rep, to_real(cap - total), "y=" + y.get_str() + " m=" + std::to_string(m),
                            "statement 3: sum <= 2(y+m)/(y-m)");
    }

    {  // upper shape: m > n
      long m = n + rand_in(1, 60);
      long kmax = m - n;
      long k = rand_in(1, kmax);
      long j = rand_in(1, k);
      mpq_class u_j = detail::upper_terms_sum(y, m, j) - detail::upper_terms_sum(y, m, j - 1);
      mpq_class u_k = detail::upper_terms_sum(y, m, k) - detail::upper_terms_sum(y, m, k - 1);
      if (u_k == u_j) rep.equality_observed = true;
      detail::record_margin(rep, to_real(u_j - u_k), "y=" + y.get_str() + " m=" + std::to_string(m),
                            "statement 4: term(k) <= term(j)");
      mpq_class head = y / m;
      if (u_j == head) rep.equality_observed = true;
      detail::record_margin(rep, to_real(head - u_j), "y=" + y.get_str() + " m=" + std::to_string(m),
                            "statement 4: term <= y/m");
      detail::record_margin(rep, to_real(1 - head), "y=" + y.get_str() + " m=" + std::to_string(m),
                            "statement 4: y/m <= 1");
      mpq_class total = detail::upper_terms_sum(y, m, kmax);
      detail::record_margin(rep, to_real(mpq_class(kmax) - total),
                            "y=" + y.get_str() + " m=" + std::to_string(m),
                            "statement 5: sum <= m - n");
      mpq_class cap = 4 * y / (mpq_class(m + 1) - y);
      detail::record_margin(rep, to_real(cap - total), "y=" + y.get_str() + " m=" + std::to_string(m),
                            "statement 6: sum <= 4y/(m-y+1)");
    }
  }
  return rep;
}

// The raw, S-shaped, and D-shaped envelopes on the four truncation gaps:
// for the under root, li* - li_{k,a} lies in [0, (C x^(1-w)/sqrt y) * sum],
// below S x^(1-w) sqrt y and below D x^(1-w)/sqrt y; mirrored for the over
// root with its own raw sum. Both last-term weights are exercised per root.
inline CheckReport check_error_bounds(const KappaSolution& sol, const Grid& grid,
                                      const PrecisionContext& ctx) {
  CheckReport rep("error_bounds", ctx.bits());
  rep.grid_description = grid.description;
  rep.grid_hash = grid.hash;
  BoundConstants under_c = constants_for(sol.kappa_under, Branch::under, ctx);
  BoundConstants over_c = constants_for(sol.kappa_over, Branch::over, ctx);
  Real one_minus_omega = 1L - sol.omega;
  for (const Real& x : grid.points) {
    Real y = log(x);
    std::int64_t n = y.floor_int64();
    Real natural = li_star(x, ctx);
    Real growth = pow(x, one_minus_omega);
    Real sqrt_y = sqrt(y);
    {  // under root
      std::int64_t m = (sol.kappa_under * y).floor_int64();
      Real raw_sum(ctx.bits());
      Real term = ctx.make(1L);
      for (std::int64_t k = 1; k <= n; ++k) {
        term = term * static_cast<long>(m + k) / y;
        raw_sum = raw_sum + term;
      }
      Real raw_bound = under_c.c_upper * growth / sqrt_y * raw_sum;
      Real s_bound = under_c.s_bound * growth * sqrt_y;
      Real d_bound = under_c.d_bound * growth / sqrt_y;
      for (AlphaMode mode : {AlphaMode::zero, AlphaMode::fractional}) {
        Real eps = natural - li_family(x, sol.kappa_under, mode, ctx);
        const char* tag = mode == AlphaMode::zero ? "under/zero" : "under/fractional";
        detail::record_margin(rep, eps / (abs(natural) + 1L), "x=" + x.str(20),
                              std::string(tag) + ": gap >= 0");
        detail::record_margin(rep, detail::rel_margin(eps, raw_bound), "x=" + x.str(20),
                              std::string(tag) + ": raw envelope");
        detail::record_margin(rep, detail::rel_margin(eps, s_bound), "x=" + x.str(20),
                              std::string(tag) + ": s envelope");
        detail::record_margin(rep, detail::rel_margin(eps, d_bound), "x=" + x.str(20),
                              std::string(tag) + ": d envelope");
      }
    }
    {  // over root
      std::int64_t m = (sol.kappa_over * y).floor_int64();
      Real raw_sum = ctx.make(1L);
      Real term = ctx.make(1L);
      for (std::int64_t k = 1; k <= m - n; ++k) {
        term = term * y / static_cast<long>(m - k + 1);
        raw_sum = raw_sum + term;
      }
      Real raw_bound = over_c.c_upper * growth / sqrt_y * raw_sum;
      Real s_bound = over_c.s_bound * growth * sqrt_y;
      Real d_bound = over_c.d_bound * growth / sqrt_y;
      for (AlphaMode mode : {AlphaMode::fractional, AlphaMode::one}) {
        Real eps = li_family(x, sol.kappa_over, mode, ctx) - natural;
        const char* tag = mode == AlphaMode::one ? "over/one" : "over/fractional";
        detail::record_margin(rep, eps / (abs(natural) + 1L), "x=" + x.str(20),
                              std::string(tag) + ": gap >= 0");
        detail::record_margin(rep, detail::rel_margin(eps, raw_bound), "x=" + x.str(20),
                              std::string(tag) + ": raw envelope");
        detail::record_margin(rep, detail::rel_margin(eps, s_bound), "x=" + x.str(20),
                              std::string(tag) + ": s envelope");
        detail::record_margin(rep, detail::rel_margin(eps, d_bound), "x=" + x.str(20),
                              std::string(tag) + ": d envelope");
      }
    }
  }
  return rep;
}

// The chain li_zero <= li_under <= li* <= li_over <= li_one at any root pair;
// when the pair solves for exponent 1/2, also the full-integral chain
// li - f <= li_zero and li_under <= li <= li_over and li_one <= li + f with
// f(x) = D_under * sqrt(x/log x) - 1.265692883422.
inline CheckReport check_ordering(const KappaSolution& sol, const Grid& grid,
                                  const PrecisionContext& ctx) {
  CheckReport rep("ordering", ctx.bits());
  rep.grid_description = grid.description;
  rep.grid_hash = grid.hash;
  bool half = abs(sol.omega - ctx.make(1L) / 2L) < pow2(-64, ctx.bits());
  Real d_under = constants_for(sol.kappa_under, Branch::under, ctx).d_bound;
  const Real shift = ctx.make("1.265692883422");
  for (const Real& x : grid.points) {
    Real zero = li_family(x, sol.kappa_under, AlphaMode::zero, ctx);
    Real under = li_family(x, sol.kappa_under, AlphaMode::fractional, ctx);
    Real natural = li_star(x, ctx);
    Real over = li_family(x, sol.kappa_over, AlphaMode::fractional, ctx);
    Real one = li_family(x, sol.kappa_over, AlphaMode::one, ctx);
    detail::record_margin(rep, detail::rel_margin(zero, under), "x=" + x.str(20), "zero <= under");
    detail::record_margin(rep, detail::rel_margin(under, natural), "x=" + x.str(20),
                          "under <= natural");
    detail::record_margin(rep, detail::rel_margin(natural, over), "x=" + x.str(20),
                          "natural <= over");
    detail::record_margin(rep, detail::rel_margin(over, one), "x=" + x.str(20), "over <= one");
    if (half) {
      Real full = li(x, ctx);
      Real f = d_under * sqrt(x / log(x)) - shift;
      detail::record_margin(rep, detail::rel_margin(full - f, zero), "x=" + x.str(20),
                            "li - f <= zero");
      detail::record_margin(rep, detail::rel_margin(under, full), "x=" + x.str(20), "under <= li");
      detail::record_margin(rep, detail::rel_margin(full, over), "x=" + x.str(20), "li <= over");
      detail::record_margin(rep, detail::rel_margin(one, full + f), "x=" + x.str(20),
                            "one <= li + f");
    }
  }
  return rep;
}

// |li(x) - li*(x)| stays below 1.265692883423 on the grid; the observed
// supremum and where it occurs are reported in the notes.
inline CheckReport check_stieltjes(const Grid& grid, const PrecisionContext& ctx) {
  CheckReport rep("stieltjes_gap", ctx.bits());
  rep.grid_description = grid.description;
  rep.grid_hash = grid.hash;
  const Real cap = ctx.make("1.265692883423");
  Real sup(ctx.bits());
  Real arg(ctx.bits());
  for (const Real& x : grid.points) {
    Real gap = abs(li(x, ctx) - li_star(x, ctx));
    if (gap > sup) {
      sup = gap;
      arg = x;
    }
    detail::record_margin(rep, (cap - gap) / cap, "x=" + x.str(20), "gap=" + gap.str(20));
  }
  rep.notes = "sup=" + sup.str(20) + " at x=" + arg.str(20);
  return rep;
}

}  // namespace libounds
