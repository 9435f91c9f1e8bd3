#include "libounds/conjecture.hpp"

#include "oracle_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace libounds;

namespace {

struct FrozenWalk {
  std::vector<IntervalStep> steps;  // x_next left at zero
  std::uint64_t final_index = 0;
  std::uint64_t x_final = 0;
  std::uint64_t pi_final = 0;
};

FrozenWalk frozen_walk() {
  FrozenWalk w;
  for (const auto& row : oracle::rows("walk_1e6.txt")) {
    if (row[0] == "final") {
      w.final_index = std::stoull(row[1]);
      w.x_final = std::stoull(row[2]);
      w.pi_final = std::stoull(row[3]);
    } else {
      w.steps.push_back(IntervalStep{std::stoull(row[0]), std::stoull(row[1]),
                                     std::stoull(row[2]), 0});
    }
  }
  return w;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("the walk to a million reproduces the frozen record exactly") {
  PrecisionContext ctx(192);
  FrozenWalk frozen = frozen_walk();
  WalkReport report = run_walk(1000000, ctx.make(1L) / 2L, WalkConfig{}, ctx);

  REQUIRE(report.limit_reached);
  REQUIRE(report.last_index == frozen.final_index);
  REQUIRE(report.x_final == frozen.x_final);
  REQUIRE(report.steps.size() == frozen.steps.size());
  for (std::size_t j = 0; j < frozen.steps.size(); ++j) {
    INFO("step " << j);
    REQUIRE(report.steps[j].i == frozen.steps[j].i);
    REQUIRE(report.steps[j].x == frozen.steps[j].x);
    REQUIRE(report.steps[j].pi == frozen.steps[j].pi);
  }
  // x_next chains into the successor's x; the last one is the final value.
  for (std::size_t j = 0; j + 1 < report.steps.size(); ++j) {
    REQUIRE(report.steps[j].x_next == report.steps[j + 1].x);
  }
  REQUIRE(report.steps.back().x_next == frozen.x_final);
  REQUIRE(pi_sieve(frozen.x_final) == frozen.pi_final);
}

TEST_CASE("single advances find the maximal admissible integer") {
  PrecisionContext ctx(192);
  KappaSolution sol = solve_kappa(ctx.make(1L) / 2L, ctx);
  REQUIRE(advance(2, 1, sol.kappa_under, ctx) == 5);
  REQUIRE(advance(5, 3, sol.kappa_under, ctx) == 16);
  REQUIRE(advance(16, 6, sol.kappa_under, ctx) == 32);
  REQUIRE(advance_at_omega(2, 1, ctx.make(1L) / 2L, ctx) == 5);
}

TEST_CASE("below the first cut the under-truncation is linear") {
  // With cut zero the weighted series collapses to (x/y) * kappa * y.
  PrecisionContext ctx(192);
  KappaSolution sol = solve_kappa(ctx.make(1L) / 2L, ctx);
  for (long n : {5L, 100L, 211L}) {
    Real value = li_family(ctx.make(n), sol.kappa_under, AlphaMode::fractional, ctx);
    REQUIRE(oracle::close_rel(value, sol.kappa_under * n, "1e-55"));
  }
}

TEST_CASE("a checkpointed walk resumes into the identical report") {
  PrecisionContext ctx(192);
  std::string path = "walk_checkpoint_roundtrip.txt";  // lands in the test's cwd
  std::remove(path.c_str());

  WalkConfig plain;
  WalkReport reference = run_walk(200000, ctx.make(1L) / 2L, plain, ctx);

  WalkConfig recorded;
  recorded.checkpoint_path = path;
  WalkReport first = run_walk(200000, ctx.make(1L) / 2L, recorded, ctx);
  std::string bytes_after_first = slurp(path);
  REQUIRE_FALSE(bytes_after_first.empty());

  WalkReport resumed = run_walk(200000, ctx.make(1L) / 2L, recorded, ctx);
  REQUIRE(slurp(path) == bytes_after_first);  // nothing re-appended

  REQUIRE(first.steps.size() == reference.steps.size());
  REQUIRE(resumed.steps.size() == reference.steps.size());
  for (std::size_t j = 0; j < reference.steps.size(); ++j) {
    REQUIRE(first.steps[j].x == reference.steps[j].x);
    REQUIRE(resumed.steps[j].x == reference.steps[j].x);
    REQUIRE(resumed.steps[j].x_next == reference.steps[j].x_next);
    REQUIRE(resumed.steps[j].pi == reference.steps[j].pi);
  }
  REQUIRE(resumed.x_final == reference.x_final);
  REQUIRE(resumed.last_index == reference.last_index);
  std::remove(path.c_str());
}

TEST_CASE("a checkpoint contradicting the sieve is rejected") {
  PrecisionContext ctx(192);
  std::string path = "walk_checkpoint_contradicted.txt";
  {
    std::ofstream out(path);
    out << "0 2 1\n1 5 2\n";  // the count at 5 is 3, not 2
  }
  WalkConfig cfg;
  cfg.checkpoint_path = path;
  REQUIRE_THROWS_AS(run_walk(100000, ctx.make(1L) / 2L, cfg, ctx), DomainError);
  std::remove(path.c_str());
}

TEST_CASE("probe precision does not influence the accepted steps") {
  PrecisionContext ctx(192);
  WalkConfig wide;
  wide.probe_bits = 192;
  WalkReport a = run_walk(1000000, ctx.make(1L) / 2L, WalkConfig{}, ctx);
  WalkReport b = run_walk(1000000, ctx.make(1L) / 2L, wide, ctx);
  REQUIRE(a.steps.size() == b.steps.size());
  for (std::size_t j = 0; j < a.steps.size(); ++j) {
    REQUIRE(a.steps[j].x == b.steps[j].x);
    REQUIRE(a.steps[j].x_next == b.steps[j].x_next);
  }
  REQUIRE(a.x_final == b.x_final);
}

TEST_CASE("the per-integer scan certifies the sandwich to twenty thousand") {
  PrecisionContext ctx(160);
  CheckReport rep = scan_conjectures(20000, ctx.make(1L) / 2L, ctx);
  REQUIRE(rep.passed());
  REQUIRE(rep.points_tested == 4 * (20000 - 2));
  REQUIRE(rep.margin_min.sign() > 0);
}

TEST_CASE("walk and scan limits are validated against their domains") {
  PrecisionContext ctx(160);
  REQUIRE_THROWS_AS(run_walk(2, ctx.make(1L) / 2L, WalkConfig{}, ctx), DomainError);
  WalkConfig small;
  small.sieve.limit = 1000;
  REQUIRE_THROWS_AS(run_walk(2000, ctx.make(1L) / 2L, small, ctx), CapacityError);
  REQUIRE_THROWS_AS(scan_conjectures(2000, ctx.make(1L) / 2L, ctx, SieveConfig{1000, 1 << 12}),
                    CapacityError);
  REQUIRE_THROWS_WITH(advance(1000, 3, solve_kappa(ctx.make(1L) / 2L, ctx).kappa_under, ctx),
                      Catch::Matchers::ContainsSubstring("counterexample candidate"));
}
