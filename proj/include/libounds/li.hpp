#pragma once

// Evaluation layer: the logarithmic-integral series, its factorial-series
// truncation at the natural cut, and the one-parameter family of truncations
// whose cut is scaled by a root from the shape-parameter layer. Every member
// has the closed form (x/y) * (sum_{k<m} k!/y^k + a * m!/y^m) with y = log x;
// they differ only in where the cut m sits and how the last term is weighted.

#include "libounds/kappa.hpp"

#include <cstdint>

namespace libounds {

enum class AlphaMode { zero, fractional, one };

struct TruncationState {
  std::int64_t cut;    // m, the index of the weighted last term
  Real alpha;          // weight applied to the term at the cut
  bool near_boundary;  // scaled log within 2^-48 of an integer
};

// sum_{k=0}^{m-1} k!/y^k + alpha * m!/y^m, by the term recurrence
// t_k = t_{k-1} * k / y starting from t_0 = 1.
inline Real truncated_factorial_series(const Real& y, std::int64_t m, const Real& alpha) {
  if (y <= 0) throw DomainError("series requires a positive logarithm");
  if (m < 0) throw DomainError("series cut must be nonnegative");
  Real term(1L, y.precision());
  Real sum(y.precision());
  for (std::int64_t k = 0; k < m; ++k) {
    sum = sum + term;
    term = term * static_cast<long>(k + 1) / y;
  }
  return sum + alpha * term;
}

namespace detail {

inline TruncationState truncation_state(const Real& scaled_log, AlphaMode mode,
                                        mpfr_prec_t bits) {
  Real cut_real = floor(scaled_log);
  std::int64_t m = cut_real.floor_int64();
  Real frac = scaled_log - cut_real;
  Real dist = abs(scaled_log - round_nearest(scaled_log));
  bool near = dist < pow2(-48, bits);
  Real alpha(bits);
  switch (mode) {
    case AlphaMode::zero: alpha = Real(0L, bits); break;
    case AlphaMode::fractional: alpha = frac; break;
    case AlphaMode::one: alpha = Real(1L, bits); break;
  }
  return TruncationState{m, alpha, near};
}

}  // namespace detail

// gamma + log log x + sum_{k>=1} y^k / (k * k!), the convergent expansion of
// the logarithmic integral for x >= e. Terms are accumulated until they drop
// below the running sum by a factor 2^-(bits+8).
inline Real li(const Real& x, const PrecisionContext& ctx) {
  if (x < ctx.e()) throw DomainError("li evaluated below e");
  const mpfr_prec_t bits = ctx.bits();
  Real y = log(x);
  Real power = ctx.make(1L);  // y^k / k!
  Real sum = ctx.euler_gamma() + log(y);
  const Real cutoff = pow2(-(static_cast<long>(bits) + 8), bits);
  for (long k = 1; k < 100000; ++k) {
    power = power * y / k;
    Real term = power / k;
    sum = sum + term;
    if (term < cutoff * sum) {
      return sum;
    }
  }
  throw CapacityError("series did not settle");
}

// Family member with cut m = floor(kappa * log x) and the chosen last-term
// weight; defined for every x > 1.
inline Real li_family(const Real& x, const Real& kappa, AlphaMode mode,
                      const PrecisionContext& ctx) {
  if (x <= 1) throw DomainError("truncation evaluated at or below 1");
  if (kappa <= 0 || kappa > ctx.e()) throw DomainError("kappa outside (0, e]");
  Real y = log(x);
  TruncationState st = detail::truncation_state(kappa * y, mode, ctx.bits());
  return (x / y) * truncated_factorial_series(y, st.cut, st.alpha);
}

// Natural truncation: kappa = 1 with the fractional last-term weight.
inline Real li_star(const Real& x, const PrecisionContext& ctx) {
  return li_family(x, ctx.make(1L), AlphaMode::fractional, ctx);
}

inline TruncationState truncation_state(const Real& x, const Real& kappa, AlphaMode mode,
                                        const PrecisionContext& ctx) {
  if (x <= 1) throw DomainError("truncation evaluated at or below 1");
  return detail::truncation_state(kappa * log(x), mode, ctx.bits());
}

// One evaluation point with all six members, the full-minus-natural gap, the
// four gaps measured from the natural truncation, and those gaps scaled by
// sqrt(x / log x).
struct EvaluationRow {
  Real x;
  Real li_full;
  Real li_natural;
  Real li_zero;     // under root, weight 0
  Real li_under;    // under root, fractional weight
  Real li_over;     // over root, fractional weight
  Real li_one;      // over root, weight 1
  Real eps_star;    // li_full - li_natural
  Real eps_zero;    // li_natural - li_zero
  Real eps_one;     // li_one - li_natural
  Real eps_under;   // li_natural - li_under
  Real eps_over;    // li_over - li_natural
  Real ratio_zero;
  Real ratio_one;
  Real ratio_under;
  Real ratio_over;
  TruncationState natural_cut;  // state of the kappa = 1 truncation
};

inline EvaluationRow evaluate_row(const Real& x, const KappaSolution& sol,
                                  const PrecisionContext& ctx) {
  Real full = li(x, ctx);
  Real natural = li_star(x, ctx);
  Real zero = li_family(x, sol.kappa_under, AlphaMode::zero, ctx);
  Real under = li_family(x, sol.kappa_under, AlphaMode::fractional, ctx);
  Real over = li_family(x, sol.kappa_over, AlphaMode::fractional, ctx);
  Real one = li_family(x, sol.kappa_over, AlphaMode::one, ctx);
  Real scale = sqrt(x / log(x));
  Real e0 = natural - zero;
  Real e1 = one - natural;
  Real eu = natural - under;
  Real eo = over - natural;
  TruncationState cut = truncation_state(x, ctx.make(1L), AlphaMode::fractional, ctx);
  return EvaluationRow{x,
                       full,
                       natural,
                       zero,
                       under,
                       over,
                       one,
                       full - natural,
                       e0,
                       e1,
                       eu,
                       eo,
                       e0 / scale,
                       e1 / scale,
                       eu / scale,
                       eo / scale,
                       cut};
}

}  // namespace libounds
