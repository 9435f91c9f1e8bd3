#pragma once

// Conjecture layer: the interval-advancing walk that certifies the
// fractional under-truncation stays at or below the prime count, and a
// direct per-integer scan of all four sandwich inequalities within sieve
// range. The walk step is max{n > x : f(n) <= P} for the strictly increasing
// f = under-truncation, found by exponential then binary search, never a
// linear scan; each accepted step is re-verified against its defining
// property at full precision.

#include "libounds/primes.hpp"
#include "libounds/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace libounds {

struct IntervalStep {
  std::uint64_t i = 0;
  std::uint64_t x = 0;       // x_i
  std::uint64_t pi = 0;      // exact prime count at x_i
  std::uint64_t x_next = 0;  // max{n > x_i : under(n) <= pi}
};

struct WalkReport {
  std::vector<IntervalStep> steps;
  std::uint64_t last_index = 0;  // index of the final accepted step
  std::uint64_t x_final = 0;     // its x_next, the first value at or past the limit
  bool limit_reached = false;
  double elapsed_seconds = 0.0;
};

struct WalkConfig {
  SieveConfig sieve;
  std::string checkpoint_path;    // empty disables checkpointing
  std::size_t monotone_grid = 4096;  // pre-walk monotonicity sample count
  int probe_bits = 128;  // search probes need no cancellation headroom
};

namespace detail {

inline Real under_at(std::uint64_t n, const Real& kappa_under, const PrecisionContext& ctx) {
  return li_family(ctx.make(n), kappa_under, AlphaMode::fractional, ctx);
}

}  // namespace detail

// Largest integer n > x with under(n) <= pi_x. The candidate range doubles
// upward from x+1 until the value exceeds pi_x, then binary search pins the
// last admissible n. Fails loudly, with full-precision values, if even x+1
// is inadmissible: that would be a counterexample candidate.
inline std::uint64_t advance(std::uint64_t x, std::uint64_t pi_x, const Real& kappa_under,
                             const PrecisionContext& ctx) {
  Real target = ctx.make(pi_x);
  std::uint64_t lo = x + 1;
  if (!(detail::under_at(lo, kappa_under, ctx) <= target)) {
    Real value = detail::under_at(lo, kappa_under, ctx);
    throw DomainError("walk cannot advance at x=" + std::to_string(x) +
                      ": under(" + std::to_string(lo) + ")=" + value.str(30) +
                      " > pi=" + std::to_string(pi_x) + " (counterexample candidate)");
  }
  std::uint64_t span = 1;
  std::uint64_t hi = lo;  // invariant: under(lo) <= target, hi last probed admissible
  for (;;) {
    std::uint64_t probe = x + (span *= 2);
    if (detail::under_at(probe, kappa_under, ctx) <= target) {
      hi = probe;
      continue;
    }
    // largest admissible n lies in [hi, probe)
    std::uint64_t bad = probe;
    while (bad - hi > 1) {
      std::uint64_t mid = hi + (bad - hi) / 2;
      if (detail::under_at(mid, kappa_under, ctx) <= target) {
        hi = mid;
      } else {
        bad = mid;
      }
    }
    return hi;
  }
}

// Contract-shaped variant: solves the root for the given exponent first.
inline std::uint64_t advance_at_omega(std::uint64_t x, std::uint64_t pi_x, const Real& omega_value,
                                      const PrecisionContext& ctx) {
  return advance(x, pi_x, solve_kappa(omega_value, ctx).kappa_under, ctx);
}

namespace detail {

// the search depends on strict growth of the under-truncation; sample it
inline void require_monotone(const Real& kappa_under, std::uint64_t limit, std::size_t samples,
                             const PrecisionContext& ctx) {
  if (samples < 2) return;
  Real prev(ctx.bits());
  bool have_prev = false;
  for (std::size_t j = 0; j < samples; ++j) {
    double t = static_cast<double>(j) / static_cast<double>(samples - 1);
    double lx = 1.0 + t * (std::log(static_cast<double>(limit)) - 1.0);
    std::uint64_t n = static_cast<std::uint64_t>(std::exp(lx));
    if (n < 3) n = 3;
    Real value = under_at(n, kappa_under, ctx);
    if (have_prev && value < prev) {
      throw DomainError("under-truncation not increasing near n=" + std::to_string(n));
    }
    prev = value;
    have_prev = true;
  }
}

inline void append_checkpoint(const std::string& path, const IntervalStep& step) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  out << step.i << ' ' << step.x << ' ' << step.pi << '\n';
}

inline std::vector<IntervalStep> load_checkpoint(const std::string& path) {
  std::vector<IntervalStep> steps;
  if (path.empty()) return steps;
  std::ifstream in(path);
  if (!in) return steps;
  std::uint64_t i, x, pi;
  while (in >> i >> x >> pi) {
    steps.push_back(IntervalStep{i, x, pi, 0});
  }
  return steps;
}

}  // namespace detail

// Runs the walk from x0 = 2 until a step lands at or past the limit. Every
// accepted step is checked against its defining property (value admissible,
// successor not), and prime counts stream from the segmented sieve. With a
// checkpoint path, completed steps are appended as "i x pi" lines and a rerun
// resumes after the last recorded step, reproducing the identical report.
inline WalkReport run_walk(std::uint64_t limit, const Real& omega_value, const WalkConfig& cfg,
                           const PrecisionContext& ctx) {
  if (limit > cfg.sieve.limit) throw CapacityError("walk limit beyond the sieve limit");
  if (limit < 3) throw DomainError("walk limit must be at least 3");
  auto t0 = std::chrono::steady_clock::now();
  KappaSolution sol = solve_kappa(omega_value, ctx);
  detail::require_monotone(sol.kappa_under, limit, cfg.monotone_grid, ctx);

  // Search probes run at reduced precision; every accepted step is then
  // re-verified against the full-precision root below.
  PrecisionContext probe_ctx(cfg.probe_bits);
  Real probe_kappa = probe_ctx.make(sol.kappa_under.str(40));

  WalkReport report;
  report.steps = detail::load_checkpoint(cfg.checkpoint_path);
  for (std::size_t j = 0; j + 1 < report.steps.size(); ++j) {
    report.steps[j].x_next = report.steps[j + 1].x;
  }
  PrimeCounter counter(cfg.sieve);
  std::uint64_t x, pi_x;
  if (report.steps.empty()) {
    x = 2;
    pi_x = counter.count_upto(2);
    report.steps.push_back(IntervalStep{0, x, pi_x, 0});
    detail::append_checkpoint(cfg.checkpoint_path, report.steps.back());
  } else {
    x = report.steps.back().x;
    pi_x = counter.count_upto(x);
    if (pi_x != report.steps.back().pi) {
      throw DomainError("checkpoint disagrees with the sieve at x=" + std::to_string(x));
    }
  }

  for (;;) {
    std::uint64_t next = advance(x, pi_x, probe_kappa, probe_ctx);
    // defining property, re-verified at full precision
    if (!(detail::under_at(next, sol.kappa_under, ctx) <= ctx.make(pi_x)) ||
        detail::under_at(next + 1, sol.kappa_under, ctx) <= ctx.make(pi_x)) {
      throw DomainError("step at x=" + std::to_string(x) + " violates the maximum property");
    }
    report.steps.back().x_next = next;
    if (next >= limit) {
      report.last_index = report.steps.back().i;
      report.x_final = next;
      report.limit_reached = true;
      break;
    }
    x = next;
    pi_x = counter.count_upto(x);
    report.steps.push_back(IntervalStep{report.steps.back().i + 1, x, pi_x, 0});
    detail::append_checkpoint(cfg.checkpoint_path, report.steps.back());
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// Direct check of zero <= pi, under <= pi, pi <= over, pi <= one at every
// integer in [3, limit]; the prime count streams alongside, and the two
// truncated series per integer are shared across the four comparisons.
inline CheckReport scan_conjectures(std::uint64_t limit, const Real& omega_value,
                                    const PrecisionContext& ctx, SieveConfig sieve = {}) {
  if (limit > sieve.limit) throw CapacityError("scan limit beyond the sieve limit");
  CheckReport rep("conjecture_scan", ctx.bits());
  {
    std::ostringstream desc;
    desc << "every integer in [3, " << limit << "]";
    rep.grid_description = desc.str();
  }
  KappaSolution sol = solve_kappa(omega_value, ctx);
  PrimeCounter counter(sieve);
  // one pass of the factorial series yields both the alpha = 0 base and the
  // weighted last term, so each root costs a single series per integer
  auto series_parts = [&](const Real& y, std::int64_t cut, Real& base, Real& last) {
    base = Real(0L, ctx.bits());
    last = Real(1L, ctx.bits());
    for (std::int64_t k = 0; k < cut; ++k) {
      base = base + last;
      last = last * static_cast<long>(k + 1) / y;
    }
  };
  for (std::uint64_t n = 3; n <= limit; ++n) {
    Real x = ctx.make(n);
    Real y = log(x);
    Real pi_n = ctx.make(counter.count_upto(n));
    Real ratio = x / y;
    Real base_u(ctx.bits()), tail_u(ctx.bits()), base_o(ctx.bits()), tail_o(ctx.bits());

    TruncationState su = detail::truncation_state(sol.kappa_under * y, AlphaMode::fractional,
                                                  ctx.bits());
    series_parts(y, su.cut, base_u, tail_u);
    Real zero = ratio * base_u;
    Real under = ratio * (base_u + su.alpha * tail_u);

    TruncationState so = detail::truncation_state(sol.kappa_over * y, AlphaMode::fractional,
                                                  ctx.bits());
    series_parts(y, so.cut, base_o, tail_o);
    Real over = ratio * (base_o + so.alpha * tail_o);
    Real one = ratio * (base_o + tail_o);

    std::string where = "n=" + std::to_string(n);
    detail::record_margin(rep, detail::rel_margin(zero, pi_n), where, "zero <= pi");
    detail::record_margin(rep, detail::rel_margin(under, pi_n), where, "under <= pi");
    detail::record_margin(rep, detail::rel_margin(pi_n, over), where, "pi <= over");
    detail::record_margin(rep, detail::rel_margin(pi_n, one), where, "pi <= one");
  }
  return rep;
}

}  // namespace libounds
