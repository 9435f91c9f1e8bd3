#pragma once

// Table layer: renders the three decade tables over x = 10^k. Tables 1 and 2
// hold the four truncation gaps and their sqrt(x/log x) ratios; table 3 holds
// the exact prime count against the fractional-weight pair. Each cell carries
// the full-precision value plus two strings: a 2-decimal half-even display
// and a 20-significant-digit machine form, so output is reproducible and
// round-trips through CSV unchanged.

#include "libounds/li.hpp"
#include "libounds/primes.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace libounds {

struct TableSpec {
  int table_id = 1;  // 1, 2, or 3
  int k_min = 1;
  int k_max = 29;
};

struct TableCell {
  Real value;
  std::string display;  // fixed 2 decimals, ties to even
  std::string machine;  // 20 significant digits
};

struct TableRow {
  int k = 0;  // the row evaluates x = 10^k
  std::vector<TableCell> cells;
};

struct RenderedTable {
  int table_id = 1;
  std::vector<std::string> headers;  // one per cell column, excludes the x label
  std::vector<TableRow> rows;
};

namespace detail {

inline TableCell make_cell(const Real& v) {
  return TableCell{v, v.str_fixed(2), v.str(20)};
}

}  // namespace detail

// Builds one of the three decade tables for the given root pair.
inline RenderedTable render_table(const TableSpec& spec, const KappaSolution& sol,
                                  const PrecisionContext& ctx) {
  if (spec.table_id < 1 || spec.table_id > 3) {
    throw DomainError("table id must be 1, 2, or 3");
  }
  if (spec.k_min < 1 || spec.k_min > spec.k_max || spec.k_max > PiTable::kMaxExponent) {
    throw DomainError("decade range must satisfy 1 <= k_min <= k_max <= 29");
  }
  RenderedTable out;
  out.table_id = spec.table_id;
  switch (spec.table_id) {
    case 1: out.headers = {"eps0", "eps0_ratio", "eps1", "eps1_ratio"}; break;
    case 2: out.headers = {"eps_under", "eps_under_ratio", "eps_over", "eps_over_ratio"}; break;
    case 3: out.headers = {"pi_minus_under", "over_minus_pi"}; break;
  }
  Real ten = ctx.make(10L);
  for (int k = spec.k_min; k <= spec.k_max; ++k) {
    Real x = pow_int(ten, k);
    TableRow row;
    row.k = k;
    if (spec.table_id == 3) {
      Real pi_exact(PiTable::value(k), ctx.bits());
      Real under = li_family(x, sol.kappa_under, AlphaMode::fractional, ctx);
      Real over = li_family(x, sol.kappa_over, AlphaMode::fractional, ctx);
      row.cells.push_back(detail::make_cell(pi_exact - under));
      row.cells.push_back(detail::make_cell(over - pi_exact));
    } else {
      EvaluationRow ev = evaluate_row(x, sol, ctx);
      if (spec.table_id == 1) {
        row.cells.push_back(detail::make_cell(ev.eps_zero));
        row.cells.push_back(detail::make_cell(ev.ratio_zero));
        row.cells.push_back(detail::make_cell(ev.eps_one));
        row.cells.push_back(detail::make_cell(ev.ratio_one));
      } else {
        row.cells.push_back(detail::make_cell(ev.eps_under));
        row.cells.push_back(detail::make_cell(ev.ratio_under));
        row.cells.push_back(detail::make_cell(ev.eps_over));
        row.cells.push_back(detail::make_cell(ev.ratio_over));
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

// CSV with a decimal point, no thousands separators, and for every quantity a
// display column plus a machine column; parsing the emitted text and printing
// it again yields the identical bytes.
inline std::string to_csv(const RenderedTable& table) {
  std::ostringstream out;
  out << "x";
  for (const std::string& h : table.headers) {
    out << ',' << h << ',' << h << "_machine";
  }
  out << '\n';
  for (const TableRow& row : table.rows) {
    out << "10^" << row.k;
    for (const TableCell& cell : row.cells) {
      out << ',' << cell.display << ',' << cell.machine;
    }
    out << '\n';
  }
  return out.str();
}

// Pipe-delimited layout with the same column pairing as the CSV.
inline std::string to_markdown(const RenderedTable& table) {
  std::ostringstream out;
  out << "| x |";
  for (const std::string& h : table.headers) {
    out << ' ' << h << " | " << h << "_machine |";
  }
  out << '\n';
  out << "| --- |";
  for (std::size_t i = 0; i < table.headers.size(); ++i) {
    out << " ---: | ---: |";
  }
  out << '\n';
  for (const TableRow& row : table.rows) {
    out << "| 10^" << row.k << " |";
    for (const TableCell& cell : row.cells) {
      out << ' ' << cell.display << " | " << cell.machine << " |";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace libounds
