#pragma once

// Shape-parameter layer: for a target exponent w in (0,1) solve
// k*(1 - log k) = w on both sides of k = 1, and derive the four envelope
// constants attached to a root. The map k -> k(1 - log k) increases on (0,1)
// and decreases on (1,e], so each side holds exactly one root.

#include "libounds/real.hpp"

namespace libounds {

enum class Branch { under, over };

struct KappaSolution {
  Real omega;
  Real kappa_under;
  Real kappa_over;
  Real residual_under;  // kappa(1 - log kappa) - omega at the reported root
  Real residual_over;
};

struct BoundConstants {
  Real c_upper;  // sqrt(2*pi/k) * e^(13/12)
  Real b_lower;  // sqrt(pi/(2k))
  Real s_bound;  // series-tail envelope scale
  Real d_bound;  // two-sided envelope scale
};

// k(1 - log k) on (0, e]; the right endpoint maps to exactly zero.
inline Real omega_of_kappa(const Real& kappa, const PrecisionContext& ctx) {
  if (kappa <= 0 || kappa > ctx.e()) {
    throw DomainError("kappa outside (0, e]");
  }
  if (kappa == ctx.e()) {
    return ctx.make(0L);
  }
  return kappa * (1L - log(kappa));
}

namespace detail {

// One root of k(1 - log k) = w inside [lo, hi], where the bracket endpoints
// straddle the root. Bisection down to a quarter of the precision lands in
// the Newton basin, then a fixed quadratic schedule finishes: a step count
// chosen so that doubling digits per step overshoots the target, with any
// step that escapes the bracket replaced by its midpoint. The caller's
// residual cap, not a step-size test, certifies the result.
inline Real solve_branch(const Real& omega, Real lo, Real hi, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  auto f = [&](const Real& k) { return k * (1L - log(k)) - omega; };
  bool increasing = f(hi) > f(lo);

  for (long i = 0; i < static_cast<long>(bits) / 4; ++i) {
    Real mid = (lo + hi) / 2L;
    bool left = increasing ? (f(mid) < 0) : (f(mid) > 0);
    (left ? lo : hi) = mid;
  }

  Real k = (lo + hi) / 2L;
  long newton_steps = 4;
  for (long remaining = bits; remaining > 1; remaining /= 2) ++newton_steps;
  for (long i = 0; i < newton_steps; ++i) {
    Real fk = f(k);
    bool left = increasing ? (fk < 0) : (fk > 0);
    (left ? lo : hi) = k;
    Real next = k + fk / log(k);  // Newton: k - f/f' with f' = -log k
    // strict test: the converged fixpoint may sit exactly on a pinned endpoint
    if (next < lo || next > hi) next = (lo + hi) / 2L;
    k = next;
  }
  return k;
}

}  // namespace detail

// Both roots for w in (0,1); w within 2^-64 of either endpoint is rejected
// because the matching root degenerates (k -> 0 or both roots collide at 1).
inline KappaSolution solve_kappa(const Real& omega, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const Real margin = pow2(-64, bits);
  if (omega <= margin || omega >= 1L - margin) {
    throw DomainError("omega must lie in (0,1), away from the endpoints");
  }

  Real one = ctx.make(1L);
  Real tiny = pow2(-static_cast<long>(bits), bits);
  Real under = detail::solve_branch(omega, tiny, one, ctx);
  Real over = detail::solve_branch(omega, one, ctx.e(), ctx);

  KappaSolution sol{omega, under, over, omega_of_kappa(under, ctx) - omega,
                    omega_of_kappa(over, ctx) - omega};
  const Real residual_cap = pow2(8 - static_cast<long>(bits), bits) * omega;
  if (abs(sol.residual_under) > residual_cap || abs(sol.residual_over) > residual_cap) {
    throw DomainError("root residual above the certified cap");
  }
  return sol;
}

inline const Real& kappa_of(const KappaSolution& sol, Branch branch) {
  return branch == Branch::under ? sol.kappa_under : sol.kappa_over;
}

// Envelope constants for one root. The s and d scales depend on which side
// of 1 the root lies: the under side weights the tail by (1-k), the over
// side by (k+1), and the two-sided scale combines both tail shapes.
inline BoundConstants constants_for(const Real& kappa, Branch branch,
                                    const PrecisionContext& ctx) {
  if (kappa <= 0) throw DomainError("kappa must be positive");
  if (branch == Branch::under ? kappa >= 1 : kappa <= 1) {
    throw DomainError("kappa on the wrong side of 1 for this branch");
  }
  Real c = sqrt(2L * ctx.pi() / kappa) * exp(ctx.make(13L) / 12L);
  Real b = sqrt(ctx.pi() / (2L * kappa));
  Real s(ctx.bits()), d(ctx.bits());
  if (branch == Branch::under) {
    s = (1L - kappa) * c;
    d = 2L * c * (1L + kappa) / (1L - kappa);
  } else {
    s = (kappa + 1L) * c;
    d = c * (kappa + 3L) / (kappa - 1L);
  }
  return BoundConstants{c, b, s, d};
}

}  // namespace libounds
