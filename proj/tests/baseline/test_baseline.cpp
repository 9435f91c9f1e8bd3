#include "libounds/conjecture.hpp"
#include "libounds/table.hpp"

#include "../data/published_tables.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <string>

// Baseline suite: pins the measured relationship between this library's
// computed tables and the externally published decade rows. The published
// figures carry per-row noise of a few tenths, a systematic relative drift of
// order 3e-9 in the large rows, and one isolated two-million offset, so these
// tests assert envelopes around those documented effects rather than exact
// agreement. A failure here means the computation moved, or the published
// characterization no longer holds.

using namespace libounds;

namespace {

struct TableData {
  PrecisionContext ctx{256};
  KappaSolution sol;
  RenderedTable one, two, three;

  TableData()
      : sol(solve_kappa(ctx.make(1L) / 2L, ctx)),
        one(render_table(TableSpec{1, 1, 29}, sol, ctx)),
        two(render_table(TableSpec{2, 1, 29}, sol, ctx)),
        three(render_table(TableSpec{3, 1, 29}, sol, ctx)) {}

  Real scale(int k) const {  // sqrt(x / log x) at x = 10^k
    Real x = pow_int(ctx.make(10L), k);
    return sqrt(x / log(x));
  }
};

TableData& tables() {
  static TableData data;
  return data;
}

Real dev(const PrecisionContext& ctx, const char* published, const Real& computed) {
  return ctx.make(published) - computed;
}

}  // namespace

TEST_CASE("published roots round-trip within their printed precision") {
  auto& t = tables();
  auto& ctx = t.ctx;
  REQUIRE(abs(ctx.make(published::kKappaUnder) - t.sol.kappa_under) < ctx.make("1e-8"));
  REQUIRE(abs(ctx.make(published::kKappaOver) - t.sol.kappa_over) < ctx.make("1e-9"));
}

TEST_CASE("published envelope constants sit two nanounits off the derived values") {
  // The printed ten-decimal constants differ from the derived values by
  // 1.7e-9, seventeen times the last printed digit; recorded, not hidden.
  auto& t = tables();
  auto& ctx = t.ctx;
  Real d_under = constants_for(t.sol.kappa_under, Branch::under, ctx).d_bound;
  Real d_over = constants_for(t.sol.kappa_over, Branch::over, ctx).d_bound;
  Real dev_under = d_under - ctx.make(published::kDUnder);
  Real dev_over = d_over - ctx.make(published::kDOver);
  REQUIRE(dev_under > ctx.make("1.5e-9"));
  REQUIRE(dev_under < ctx.make("2.0e-9"));
  REQUIRE(dev_over < ctx.make("-1.5e-9"));
  REQUIRE(dev_over > ctx.make("-2.0e-9"));
}

TEST_CASE("first table rows deviate by anti-correlated per-row noise") {
  auto& t = tables();
  auto& ctx = t.ctx;
  for (std::size_t j = 0; j < 29; ++j) {
    const auto& pub = published::kTableOne[j];
    const TableRow& row = t.one.rows[j];
    INFO("k=" << pub.k);
    Real d0 = dev(ctx, pub.first, row.cells[0].value);
    Real d1 = dev(ctx, pub.second, row.cells[2].value);
    if (pub.k == 22) {
      // Isolated anomaly: both gap columns are offset by exactly two million,
      // in opposite directions, on top of the usual noise.
      d0 = d0 - ctx.make(2000000L);
      d1 = d1 + ctx.make(2000000L);
    }
    // Envelope: a few tenths of noise plus the large-row relative drift.
    Real budget = ctx.make("0.65") + ctx.make("2e-8") * abs(row.cells[0].value);
    REQUIRE(abs(d0) < budget + ctx.make("2e-8") * abs(row.cells[2].value));
    REQUIRE(abs(d1) < budget + ctx.make("2e-8") * abs(row.cells[2].value));
    if (pub.k <= 28) {
      // The noise enters the two gap columns with opposite signs: it is a
      // shared offset in the natural truncation, so the sum cancels it.
      REQUIRE(abs(d0 + d1) < ctx.make("0.06"));
    }
  }
}

TEST_CASE("second table rows share the same noise and drift model") {
  auto& t = tables();
  auto& ctx = t.ctx;
  for (std::size_t j = 0; j < 29; ++j) {
    const auto& pub = published::kTableTwo[j];
    const TableRow& row = t.two.rows[j];
    INFO("k=" << pub.k);
    Real d_under = dev(ctx, pub.first, row.cells[0].value);
    Real d_over = dev(ctx, pub.second, row.cells[2].value);
    if (pub.k == 22) {
      d_under = d_under - ctx.make(2000000L);
      d_over = d_over + ctx.make(2000000L);
    }
    REQUIRE(abs(d_under) < ctx.make("0.65") + ctx.make("2e-8") * abs(row.cells[0].value));
    REQUIRE(abs(d_over) < ctx.make("0.65") + ctx.make("2e-8") * abs(row.cells[2].value));
    if (pub.k <= 12) {
      REQUIRE(abs(d_under + d_over) < ctx.make("0.02"));
    }
  }
}

TEST_CASE("the two-million anomaly is absent from the prime-count table") {
  // The k = 22 offset appears in every column that involves the natural
  // truncation and in neither column of the prime-count table, so it is a
  // defect in the published natural-truncation value at 10^22.
  auto& t = tables();
  auto& ctx = t.ctx;
  const auto& pub = published::kTableThree[21];
  REQUIRE(pub.k == 22);
  const TableRow& row = t.three.rows[21];
  REQUIRE(abs(dev(ctx, pub.first, row.cells[0].value)) < ctx.make(200L));
  REQUIRE(abs(dev(ctx, pub.second, row.cells[1].value)) < ctx.make(400L));
}

TEST_CASE("prime-count rows agree to display precision until the drift regime") {
  auto& t = tables();
  auto& ctx = t.ctx;
  for (std::size_t j = 0; j < 29; ++j) {
    const auto& pub = published::kTableThree[j];
    const TableRow& row = t.three.rows[j];
    INFO("k=" << pub.k);
    Real d1 = dev(ctx, pub.first, row.cells[0].value);
    Real d2 = dev(ctx, pub.second, row.cells[1].value);
    Real budget1 = ctx.make("0.011") + ctx.make("2e-8") * abs(row.cells[0].value);
    Real budget2 = ctx.make("0.011") + ctx.make("2e-8") * abs(row.cells[1].value);
    REQUIRE(abs(d1) < budget1);
    REQUIRE(abs(d2) < budget2);
    if (pub.k <= 12) {
      // display-level agreement in the small rows
      REQUIRE(abs(d1) < ctx.make("0.01"));
      REQUIRE(abs(d2) < ctx.make("0.01"));
    }
    if (pub.k >= 14) {
      // and genuinely beyond display rounding once the drift dominates
      REQUIRE(abs(d1) > ctx.make("0.012"));
    }
  }
}

TEST_CASE("published ratio columns are consistent with their own gap columns") {
  // Including the anomalous row: the printed ratios divide the printed gaps,
  // so the ratio columns inherit whatever the gap columns carry.
  auto& t = tables();
  auto& ctx = t.ctx;
  for (std::size_t j = 0; j < 29; ++j) {
    const auto& p1 = published::kTableOne[j];
    const auto& p2 = published::kTableTwo[j];
    Real s = t.scale(p1.k);
    INFO("k=" << p1.k);
    REQUIRE(abs(ctx.make(p1.first) / s - ctx.make(p1.first_ratio)) < ctx.make("0.02"));
    REQUIRE(abs(ctx.make(p1.second) / s - ctx.make(p1.second_ratio)) < ctx.make("0.02"));
    REQUIRE(abs(ctx.make(p2.first) / s - ctx.make(p2.first_ratio)) < ctx.make("0.02"));
    REQUIRE(abs(ctx.make(p2.second) / s - ctx.make(p2.second_ratio)) < ctx.make("0.02"));
  }
}

TEST_CASE("computed ratio columns track the published ones from the third decade") {
  // The first two decades disagree by up to 0.26 because the published gap
  // columns there carry their noise into small denominators; from k = 3 the
  // ratio columns agree within 0.016, including the sawtooth drop at k = 28.
  auto& t = tables();
  auto& ctx = t.ctx;
  Real worst(ctx.bits());
  for (std::size_t j = 2; j < 29; ++j) {
    const auto& p1 = published::kTableOne[j];
    const auto& p2 = published::kTableTwo[j];
    const TableRow& r1 = t.one.rows[j];
    const TableRow& r2 = t.two.rows[j];
    INFO("k=" << p1.k);
    REQUIRE(abs(dev(ctx, p1.first_ratio, r1.cells[1].value)) < ctx.make("0.017"));
    REQUIRE(abs(dev(ctx, p1.second_ratio, r1.cells[3].value)) < ctx.make("0.017"));
    REQUIRE(abs(dev(ctx, p2.first_ratio, r2.cells[1].value)) < ctx.make("0.017"));
    REQUIRE(abs(dev(ctx, p2.second_ratio, r2.cells[3].value)) < ctx.make("0.017"));
    Real d = abs(dev(ctx, p1.second_ratio, r1.cells[3].value));
    if (d > worst) worst = d;
  }
  // The drop from 6.86 at k = 27 to 3.29 at k = 28 is genuine, not a typo.
  REQUIRE(t.one.rows[26].cells[3].value > 6L);
  REQUIRE(t.one.rows[27].cells[3].value < ctx.make("3.4"));
}

TEST_CASE("the gap cap holds with the observed supremum far below it") {
  auto& t = tables();
  auto& ctx = t.ctx;
  Real sup = li(ctx.e(), ctx) - li_star(ctx.e(), ctx);
  REQUIRE(abs(sup) < ctx.make(published::kGapCap));
  REQUIRE(abs(sup) > ctx.make("0.8231"));
  REQUIRE(abs(sup) < ctx.make("0.8232"));
}

TEST_CASE("the full-scale walk frontier differs from the recorded run by last-integer drift") {
  // The recorded full-scale run reports last index 13408 with frontier
  // 2090132958. Recomputation gives 13409 with frontier 2090390637, stable
  // across 128/192/256-bit evaluation and across the solved root versus its
  // published 8-decimal rounding; the frontier at index 13408 lands at
  // 2090132465, 493 integers short of the recorded frontier. The walk's final
  // digits are chaotically sensitive: a one-integer shift in some x_i adds the
  // primes in the shifted window to pi(x_i), moving the next frontier by about
  // 1/li_under'(x) ~ 21 integers per prime hit, and decaying otherwise. The
  // certified region 2090390637 strictly contains the recorded one, so the
  // mathematical content of the recorded run is reproduced and exceeded.
  auto& ctx = tables().ctx;
  Real half = ctx.make(1L) / 2L;
  WalkReport rep = run_walk(2090132958ULL, half, WalkConfig{}, ctx);
  REQUIRE(rep.limit_reached);
  REQUIRE(rep.x_final == 2090390637ULL);
  REQUIRE(rep.last_index == 13409ULL);
  REQUIRE(rep.steps.size() == 13410);
  REQUIRE(rep.steps[13408].x_next == 2090132465ULL);
  REQUIRE(rep.steps[13408].x_next + 493 == 2090132958ULL);
  REQUIRE(rep.x_final > 2090132958ULL);
}
