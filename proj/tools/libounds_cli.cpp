#include "CLI11.hpp"

#include "libounds/conjecture.hpp"
#include "libounds/table.hpp"
#include "libounds/verify.hpp"

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

int significant_digits(int bits) {
  // bits * log10(2), minus guard; floor at the machine-column width
  int digits = static_cast<int>(bits * 0.30103) - 2;
  return digits < 20 ? 20 : digits;
}

void print_report(const libounds::CheckReport& rep) {
  std::printf("%s\n", rep.certificate_line().c_str());
  for (const auto& f : rep.failure_samples) {
    std::printf("  failed %s: %s\n", f.where.c_str(), f.detail.c_str());
  }
}

int cmd_kappa(double omega, int bits) {
  using namespace libounds;
  PrecisionContext ctx(bits);
  KappaSolution sol = solve_kappa(ctx.make(omega), ctx);
  int digits = significant_digits(bits);
  std::printf("omega       = %s\n", sol.omega.str(digits).c_str());
  std::printf("kappa_under = %s\n", sol.kappa_under.str(digits).c_str());
  std::printf("kappa_over  = %s\n", sol.kappa_over.str(digits).c_str());
  std::printf("residual_under = %s\n", sol.residual_under.str(6).c_str());
  std::printf("residual_over  = %s\n", sol.residual_over.str(6).c_str());
  BoundConstants under = constants_for(sol.kappa_under, Branch::under, ctx);
  BoundConstants over = constants_for(sol.kappa_over, Branch::over, ctx);
  std::printf("C_under = %s\n", under.c_upper.str(digits).c_str());
  std::printf("B_under = %s\n", under.b_lower.str(digits).c_str());
  std::printf("S_under = %s\n", under.s_bound.str(digits).c_str());
  std::printf("D_under = %s\n", under.d_bound.str(digits).c_str());
  std::printf("C_over  = %s\n", over.c_upper.str(digits).c_str());
  std::printf("B_over  = %s\n", over.b_lower.str(digits).c_str());
  std::printf("S_over  = %s\n", over.s_bound.str(digits).c_str());
  std::printf("D_over  = %s\n", over.d_bound.str(digits).c_str());
  return kExitCertified;
}

int cmd_table(int table_id, int k_min, int k_max, const std::string& format, double omega,
              int bits) {
  using namespace libounds;
  PrecisionContext ctx(bits);
  KappaSolution sol = solve_kappa(ctx.make(omega), ctx);
  TableSpec spec;
  spec.table_id = table_id;
  spec.k_min = k_min;
  spec.k_max = k_max;
  RenderedTable table = render_table(spec, sol, ctx);
  if (format == "markdown") {
    std::printf("%s", to_markdown(table).c_str());
  } else {
    std::printf("%s", to_csv(table).c_str());
  }
  return kExitCertified;
}

int cmd_verify(const std::string& suite, double omega, const std::string& x_max,
               std::size_t points, int bits) {
  using namespace libounds;
  PrecisionContext ctx(bits);
  Real top = ctx.make(x_max);
  std::vector<CheckReport> reports;
  if (suite == "stirling") {
    const char* kappas[] = {"0.1", "0.18668231", "0.5", "1", "2.155535203"};
    std::vector<Real> kappa_set;
    for (const char* s : kappas) kappa_set.push_back(ctx.make(s));
    kappa_set.push_back(ctx.e());
    for (const Real& kappa : kappa_set) {
      Real x_min = exp(1L / kappa);
      if (x_min < ctx.e()) x_min = ctx.e();
      Grid grid = build_grid(x_min, max(top, x_min * 2L), {kappa}, points, 50, ctx);
      reports.push_back(check_stirling_upper(kappa, grid, ctx));
      reports.push_back(check_stirling_lower(kappa, grid, ctx));
    }
  } else if (suite == "aux") {
    KappaSolution sol = solve_kappa(ctx.make(omega), ctx);
    Grid grid = build_grid(ctx.e(), top, {sol.kappa_under, sol.kappa_over, ctx.make(1L)},
                           points, 50, ctx);
    reports.push_back(check_aux_identities(grid, ctx));
    reports.push_back(check_floor_lemmas(ctx));
    reports.push_back(check_sum_factorial_power(500, ctx));
    reports.push_back(check_product_sum_bounds(ctx));
  } else {
    KappaSolution sol = solve_kappa(ctx.make(omega), ctx);
    Grid grid = build_grid(ctx.e(), top, {sol.kappa_under, sol.kappa_over, ctx.make(1L)},
                           points, 50, ctx);
    if (suite == "error-bounds") {
      reports.push_back(check_error_bounds(sol, grid, ctx));
    } else if (suite == "ordering") {
      reports.push_back(check_ordering(sol, grid, ctx));
    } else if (suite == "stieltjes") {
      reports.push_back(check_stieltjes(grid, ctx));
    } else {
      std::fprintf(stderr, "unknown verify suite: %s\n", suite.c_str());
      return kExitUsage;
    }
  }
  bool all_passed = true;
  for (const auto& rep : reports) {
    print_report(rep);
    all_passed = all_passed && rep.passed();
  }
  return all_passed ? kExitCertified : kExitCheckFailure;
}

int cmd_walk(std::uint64_t limit, double omega, const std::string& checkpoint,
             std::uint64_t segment_size, int bits) {
  using namespace libounds;
  PrecisionContext ctx(bits);
  WalkConfig cfg;
  cfg.checkpoint_path = checkpoint;
  if (segment_size != 0) cfg.sieve.segment_size = segment_size;
  if (limit + limit / 8 > cfg.sieve.limit) cfg.sieve.limit = limit + limit / 8;
  try {
    WalkReport report = run_walk(limit, ctx.make(omega), cfg, ctx);
    std::printf("I=%llu x_final=%llu steps=%zu elapsed=%.3fs\n",
                static_cast<unsigned long long>(report.last_index),
                static_cast<unsigned long long>(report.x_final), report.steps.size(),
                report.elapsed_seconds);
    return report.limit_reached ? kExitCertified : kExitCheckFailure;
  } catch (const DomainError& err) {
    std::fprintf(stderr, "walk failed: %s\n", err.what());
    return kExitCheckFailure;
  }
}

int cmd_figure1(std::size_t points, const std::string& format, int bits) {
  using namespace libounds;
  PrecisionContext ctx(bits);
  bool markdown = format == "markdown";
  if (markdown) {
    std::printf("| kappa | omega |\n| ---: | ---: |\n");
  } else {
    std::printf("kappa,omega\n");
  }
  for (std::size_t j = 1; j <= points; ++j) {
    Real fraction = ctx.make(static_cast<std::uint64_t>(j)) /
                    ctx.make(static_cast<std::uint64_t>(points));
    Real kappa = ctx.e() * fraction;
    Real omega_value = omega_of_kappa(kappa, ctx);
    if (markdown) {
      std::printf("| %s | %s |\n", kappa.str(20).c_str(), omega_value.str(20).c_str());
    } else {
      std::printf("%s,%s\n", kappa.str(20).c_str(), omega_value.str(20).c_str());
    }
  }
  return kExitCertified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval bounds for the logarithmic integral: evaluation, tables, "
               "certificates, and the prime-counting walk"};
  app.require_subcommand(1);

  int bits = 192;
  app.add_option("--precision-bits", bits, "working precision in bits")
      ->envname("LIBOUNDS_PRECISION_BITS")
      ->capture_default_str();

  double omega = 0.5;
  std::string x_max = "1e12";
  std::string format = "csv";
  std::size_t points = 10000;

  CLI::App* kappa_cmd = app.add_subcommand("kappa", "solve kappa(1 - log kappa) = omega and "
                                                    "print both roots with their constants");
  kappa_cmd->add_option("--omega", omega, "target omega in (0, 1)")->capture_default_str();

  CLI::App* table_cmd = app.add_subcommand("table", "reproduce a decade table");
  int table_id = 1;
  int k_min = 1;
  int k_max = 29;
  table_cmd->add_option("--table", table_id, "table number (1, 2, or 3)")
      ->capture_default_str();
  table_cmd->add_option("--k-min", k_min, "first decade exponent")->capture_default_str();
  table_cmd->add_option("--k-max", k_max, "last decade exponent")->capture_default_str();
  table_cmd->add_option("--omega", omega, "family parameter")->capture_default_str();
  table_cmd->add_option("--format", format, "csv or markdown")->capture_default_str();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a certificate suite");
  std::string suite;
  verify_cmd->add_option("suite", suite,
                         "one of: stirling, aux, error-bounds, ordering, stieltjes")
      ->required();
  verify_cmd->add_option("--omega", omega, "family parameter")->capture_default_str();
  verify_cmd->add_option("--x-max", x_max, "upper end of the x grid")->capture_default_str();
  verify_cmd->add_option("--points", points, "base grid points")->capture_default_str();

  CLI::App* walk_cmd = app.add_subcommand("walk", "certify under-family <= prime count by "
                                                  "maximal interval steps");
  std::uint64_t limit = 1000000;
  std::string checkpoint;
  std::uint64_t segment_size = 0;
  walk_cmd->add_option("--limit", limit, "walk until the next step reaches this bound")
      ->capture_default_str();
  walk_cmd->add_option("--omega", omega, "family parameter")->capture_default_str();
  walk_cmd->add_option("--checkpoint", checkpoint, "append-and-resume step file");
  walk_cmd->add_option("--segment-size", segment_size, "sieve segment bytes (0 = default)");

  CLI::App* figure_cmd = app.add_subcommand("figure1", "emit (kappa, omega) curve data");
  std::size_t figure_points = 50;
  figure_cmd->add_option("--points", figure_points, "number of kappa samples")
      ->capture_default_str();
  figure_cmd->add_option("--format", format, "csv or markdown")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (kappa_cmd->parsed()) return cmd_kappa(omega, bits);
    if (table_cmd->parsed()) return cmd_table(table_id, k_min, k_max, format, omega, bits);
    if (verify_cmd->parsed()) return cmd_verify(suite, omega, x_max, points, bits);
    if (walk_cmd->parsed()) return cmd_walk(limit, omega, checkpoint, segment_size, bits);
    if (figure_cmd->parsed()) return cmd_figure1(figure_points, format, bits);
  } catch (const libounds::ConfigError& err) {
    std::fprintf(stderr, "configuration error: %s\n", err.what());
    return kExitUsage;
  } catch (const libounds::DomainError& err) {
    std::fprintf(stderr, "domain error: %s\n", err.what());
    return kExitUsage;
  } catch (const libounds::CapacityError& err) {
    std::fprintf(stderr, "capacity error: %s\n", err.what());
    return kExitUsage;
  }
  return kExitUsage;
}
