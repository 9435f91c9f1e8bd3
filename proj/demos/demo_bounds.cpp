#include "libounds/conjecture.hpp"
#include "libounds/verify.hpp"

#include <cstdio>

// Walks through the library surface: solve the two roots for omega = 1/2,
// bracket li between the four truncated families at x = 10^6, certify the
// ordering on a small grid, then run the interval walk to one million.
int main() {
  using namespace libounds;
  PrecisionContext ctx = make_context(192);

  KappaSolution sol = solve_kappa(ctx.make(1L) / 2L, ctx);
  std::printf("kappa_under = %s\n", sol.kappa_under.str(30).c_str());
  std::printf("kappa_over  = %s\n", sol.kappa_over.str(30).c_str());

  Real x = ctx.make("1e6");
  EvaluationRow row = evaluate_row(x, sol, ctx);
  std::printf("at x = 10^6\n");
  std::printf("  li_zero  = %s\n", row.li_zero.str(25).c_str());
  std::printf("  li_under = %s\n", row.li_under.str(25).c_str());
  std::printf("  li       = %s\n", row.li_full.str(25).c_str());
  std::printf("  li_over  = %s\n", row.li_over.str(25).c_str());
  std::printf("  li_one   = %s\n", row.li_one.str(25).c_str());
  std::printf("  li_star - li = %s\n", (row.li_natural - row.li_full).str(25).c_str());

  Grid grid = build_default_grid(sol, ctx.make("1e8"), ctx, 2000, 50);
  CheckReport ordering = check_ordering(sol, grid, ctx);
  std::printf("%s\n", ordering.certificate_line().c_str());

  WalkConfig cfg;
  cfg.sieve.limit = 2000000;
  WalkReport walk = run_walk(1000000, sol.omega, cfg, ctx);
  std::printf("walk to 10^6: I=%llu x_final=%llu (%.2fs)\n",
              static_cast<unsigned long long>(walk.last_index),
              static_cast<unsigned long long>(walk.x_final), walk.elapsed_seconds);
  return ordering.passed() && walk.limit_reached ? 0 : 1;
}
