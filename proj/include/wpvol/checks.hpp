#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wpvol/coeff_table.hpp"
#include "wpvol/discrete.hpp"

namespace wpvol::checks {

struct Line {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Line> lines;
  bool pass() const {
    for (const Line& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

struct Config {
  mpfr_prec_t prec = 192;
  unsigned threads = 1;
  unsigned chi_max = 12;   // structural scope
  unsigned n_max = 5;
  unsigned g_min = 2;      // residual/derivative trend range
  unsigned g_max = 8;
  unsigned g_max_f1 = 12;  // f1 convergence range (n = 1)
  unsigned order = 1;      // N for the constructive approximant
};

/// Geometric axis {1/4, 1/2, 1, 2, 4, 8}.
std::vector<Rational> geometric_axis();
/// Cartesian grid over n coordinates, optionally with the zero vector.
std::vector<std::vector<Rational>> grid(unsigned n, bool include_zero);

// One function per acceptance criterion, plus the extra trend suites the
// check command aggregates. All are deterministic.
Report base_values(CoeffTable& table);                                  // 1
Report structural(CoeffTable& table, const Config& cfg);                // 2
Report cusp_bounds(CoeffTable& table, const Config& cfg);               // 3
Report u_sequence();                                                    // 4
Report discrete_identities(uint64_t seed);                                  // 5
Report residual_first_order(CoeffTable& table, const Config& cfg);      // 6
Report residual_second_order(CoeffTable& table, const Config& cfg);     // 7
Report constructive_approximant(CoeffTable& table, const Config& cfg);  // 8
Report derivative_bounds(CoeffTable& table, const Config& cfg);         // 9
Report cut_sums(CoeffTable& table, const Config& cfg);                  // 10
Report persistence(CoeffTable& table, const std::filesystem::path& dir);// 11
Report pk_closed_forms(const Config& cfg);                              // 12

/// |V_{g-1,n+2}/V_{g,n} - 1| <g> bounded-trend (same Euler characteristic).
Report same_euler_trend(CoeffTable& table, const Config& cfg);
/// Bounded-trend suites for the second-order models of the coefficient and
/// its first discrete derivative.
Report model_trends(CoeffTable& table, const Config& cfg);

void print_report(const Report& rep, bool verbose = true);

}  // namespace wpvol::checks
