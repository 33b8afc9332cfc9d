// Command-line front-end: fill/extend coefficient caches, evaluate volume
// polynomials, run residual and verification suites, emit CSV reports.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "wpvol/asymptotics.hpp"
#include "wpvol/checks.hpp"
#include "wpvol/discrete.hpp"
#include "wpvol/recursion.hpp"
#include "wpvol/store.hpp"

using namespace wpvol;

namespace {

struct Global {
  std::string cache;
  bool no_cache = false;
  unsigned precision = 192;
  std::string convention = "paper";
  unsigned threads = 1;
  std::string out;
};

Convention parse_convention(const std::string& s) {
  if (s == "paper") return Convention::paper;
  if (s == "half") return Convention::half;
  throw CLI::ValidationError("--convention must be paper or half");
}

std::string default_cache() {
  const char* env = std::getenv("WPVOL_CACHE");
  return env ? env : "wpvol-cache.txt";
}

CoeffTable open_table(const Global& g) {
  Convention conv = parse_convention(g.convention);
  if (!g.no_cache && std::filesystem::exists(g.cache))
    return load_cache(g.cache, conv);
  return CoeffTable(conv);
}

void maybe_save(const Global& g, const CoeffTable& t) {
  if (!g.no_cache) save_cache(t, g.cache);
}

std::vector<Rational> parse_lengths(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

std::ostream& output(const Global& g, std::ofstream& file) {
  if (g.out.empty()) return std::cout;
  file.open(g.out, std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + g.out);
  return file;
}

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil-Petersson volume polynomials: exact computation and "
               "large-genus verification"};
  app.require_subcommand(1);

  Global g;
  g.cache = default_cache();
  app.add_option("--cache", g.cache, "coefficient cache file")
      ->capture_default_str();
  app.add_flag("--no-cache", g.no_cache, "do not read or write the cache");
  app.add_option("--precision", g.precision, "working precision in bits (>= 64)")
      ->check(CLI::Range(64u, 65536u))
      ->capture_default_str();
  app.add_option("--convention", g.convention, "(1,1) reporting convention")
      ->check(CLI::IsMember({"paper", "half"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for table fill")
      ->capture_default_str();
  app.add_option("--out", g.out, "write report/CSV here instead of stdout");

  // fill
  auto* fill_cmd = app.add_subcommand("fill", "compute coefficient tables");
  unsigned chi_max = 12, n_max = 5;
  fill_cmd->add_option("--chi-max", chi_max, "largest |chi| = 2g-2+n")
      ->capture_default_str();
  fill_cmd->add_option("--n-max", n_max, "largest boundary count")
      ->capture_default_str();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate V_{g,n}(x)");
  unsigned eg = 0, en = 0;
  std::string ex;
  eval_cmd->add_option("--g", eg, "genus")->required();
  eval_cmd->add_option("--n", en, "boundary count")->required();
  eval_cmd->add_option("--x", ex, "comma-separated lengths (default zeros)");

  // residuals
  auto* res_cmd = app.add_subcommand("residuals", "residual CSV over the grid");
  unsigned rg_min = 2, rg_max = 8, rn = 1, rorder = 1;
  std::string rgrid;
  res_cmd->add_option("--g-min", rg_min)->capture_default_str();
  res_cmd->add_option("--g-max", rg_max)->capture_default_str();
  res_cmd->add_option("--n", rn)->capture_default_str();
  res_cmd->add_option("--grid", rgrid, "axis values (default 1/4,1/2,1,2,4,8)");
  res_cmd->add_option("--order", rorder, "N for the constructive approximant")
      ->capture_default_str();

  // check
  auto* check_cmd = app.add_subcommand("check", "run verification suites");
  std::string suite = "all";
  check_cmd->add_option("--suite", suite, "all|exact|ratios|residuals|derivative")
      ->check(CLI::IsMember({"all", "exact", "ratios", "residuals", "derivative"}))
      ->capture_default_str();

  // lambda
  auto* lam_cmd = app.add_subcommand("lambda", "Poisson intensity of the length window");
  std::string la = "1", lb = "2";
  double lerr = 1e-12;
  lam_cmd->add_option("--a", la)->required();
  lam_cmd->add_option("--b", lb)->required();
  lam_cmd->add_option("--abs-err", lerr)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fill_cmd) {
      CoeffTable table = open_table(g);
      uint64_t before_n = table.size(), before_c = table.computed_count();
      auto t0 = std::chrono::steady_clock::now();
      std::vector<Signature> targets = signatures_upto(chi_max, n_max);
      fill(table, targets, g.threads);
      auto t1 = std::chrono::steady_clock::now();
      maybe_save(g, table);
      double secs = std::chrono::duration<double>(t1 - t0).count();
      std::printf("tables: %zu signatures, %llu coefficients (%llu new)\n",
                  table.signatures().size(),
                  static_cast<unsigned long long>(table.size()),
                  static_cast<unsigned long long>(table.size() - before_n));
      std::printf("computed %llu values in %.2fs (%u threads)\n",
                  static_cast<unsigned long long>(table.computed_count() - before_c),
                  secs, g.threads);
      auto fr = table.frontier();
      for (const auto& [n, chi] : fr)
        std::printf("frontier: n=%u complete through |chi|=%u\n", n, chi);
      return 0;
    }

    if (*eval_cmd) {
      CoeffTable table = open_table(g);
      Signature sig{eg, en};
      if (!sig.valid()) {
        std::fprintf(stderr, "invalid signature (need n >= 1, 2g-2+n > 0)\n");
        return 2;
      }
      if (!table.complete(sig)) {
        std::fprintf(stderr,
                     "tables for (g=%u, n=%u) are not in the cache; run:\n"
                     "  wpvol --cache %s fill --chi-max %u --n-max %u\n",
                     eg, en, g.cache.c_str(), sig.chi(), en);
        return 3;
      }
      std::vector<Rational> x =
          ex.empty() ? std::vector<Rational>(en, Rational(0)) : parse_lengths(ex);
      if (x.size() != en) {
        std::fprintf(stderr, "expected %u lengths\n", en);
        return 2;
      }
      PiPoly v = eval_volume_exact(sig, x, table);
      PiPoly v0 = vgn(sig, table);
      Interval ratio = v.eval(g.precision) / v0.eval(g.precision);
      std::printf("V_{%u,%u}(x) = %s\n", eg, en, v.pretty().c_str());
      std::printf("            ~ %.17g\n", v.eval(g.precision).mid());
      std::printf("V(x)/V(0)   = %.17g\n", ratio.mid());
      return 0;
    }

    if (*res_cmd) {
      CoeffTable table = open_table(g);
      for (unsigned gg = rg_min; gg <= rg_max; ++gg) {
        Signature sig{gg, rn};
        if (!sig.valid()) continue;
        bool ok = table.complete(sig) &&
                  (gg == 0 || table.complete(Signature{gg - 1, rn + 1})) &&
                  (rn == 1 || table.complete(Signature{gg, rn - 1}));
        if (!ok) {
          std::fprintf(stderr,
                       "tables through (g=%u, n=%u) are not in the cache; run:\n"
                       "  wpvol --cache %s fill --chi-max %u --n-max %u\n",
                       rg_max, rn, g.cache.c_str(),
                       Signature{rg_max, rn}.chi() + 1, rn + 1);
          return 3;
        }
      }
      std::ofstream file;
      std::ostream& os = output(g, file);
      std::vector<Rational> axis = rgrid.empty()
                                       ? checks::geometric_axis()
                                       : parse_lengths(rgrid);
      unsigned a = 2 * rorder + 2;
      // all grid points for one genus, in deterministic order
      std::vector<std::vector<Rational>> pts;
      {
        std::vector<size_t> idx(rn, 0);
        for (;;) {
          std::vector<Rational> x;
          for (size_t i = 0; i < rn; ++i) x.push_back(axis[idx[i]]);
          pts.push_back(std::move(x));
          size_t p = 0;
          while (p < rn) {
            if (++idx[p] < axis.size()) break;
            idx[p] = 0;
            ++p;
          }
          if (p == rn) break;
        }
      }
      os << "g,n,x,exact_ratio,F0,F1,FN,R0,R1,RN\n";
      for (unsigned gg = rg_min; gg <= rg_max; ++gg) {
        Signature sig{gg, rn};
        if (!sig.valid()) continue;
        Interval v = vgn(sig, table).eval(g.precision);
        Approximant ap = build_FN(sig, rorder, a, table);
        std::vector<std::string> rows(pts.size());
        auto eval_point = [&](size_t k) {
          const std::vector<Rational>& x = pts[k];
          Interval ratio = eval_volume_exact(sig, x, table).eval(g.precision) / v;
          Interval f0 = F0(x, g.precision);
          Interval f1v = F1(sig, x, table, g.precision);
          Interval fn = ap.eval(x, g.precision);
          Interval eh = Interval::exact(l1(x) / Rational(2), g.precision).exp();
          Interval r0 = (ratio - f0).abs() * jap(gg, g.precision) /
                        (Interval::exact(l1(x), g.precision) * eh);
          Interval r1 = (ratio - f1v).abs() * jap(gg, g.precision).pow(2) /
                        (jap(x, g.precision).pow(3) * eh);
          Interval rN = (ratio - fn).abs() * jap(gg, g.precision).pow(rorder + 1) /
                        (jap(x, g.precision).pow(3 * rorder + 1) * eh);
          std::string row = std::to_string(gg) + ',' + std::to_string(rn) + ',';
          for (size_t i = 0; i < rn; ++i) row += (i ? ";" : "") + x[i].str();
          row += ',' + csv_num(ratio.mid()) + ',' + csv_num(f0.mid()) + ',' +
                 csv_num(f1v.mid()) + ',' + csv_num(fn.mid()) + ',' +
                 csv_num(r0.mid()) + ',' + csv_num(r1.mid()) + ',' +
                 csv_num(rN.mid()) + '\n';
          rows[k] = std::move(row);
        };
        if (g.threads <= 1) {
          for (size_t k = 0; k < pts.size(); ++k) eval_point(k);
        } else {
          std::vector<std::thread> pool;
          std::atomic<size_t> next{0};
          for (unsigned t = 0; t < std::min<unsigned>(g.threads, 64); ++t)
            pool.emplace_back([&] {
              for (size_t k = next.fetch_add(1); k < pts.size();
                   k = next.fetch_add(1))
                eval_point(k);
            });
          for (auto& th : pool) th.join();
        }
        for (const std::string& row : rows) os << row;
      }
      return 0;
    }

    if (*check_cmd) {
      CoeffTable table = open_table(g);
      checks::Config cfg;
      cfg.prec = g.precision;
      cfg.threads = g.threads;
      std::vector<checks::Report> reports;
      bool exact = suite == "all" || suite == "exact";
      bool ratios = suite == "all" || suite == "ratios";
      bool residuals = suite == "all" || suite == "residuals";
      bool derivative = suite == "all" || suite == "derivative";
      if (exact) {
        reports.push_back(checks::base_values(table));
        reports.push_back(checks::structural(table, cfg));
        reports.push_back(checks::u_sequence());
        reports.push_back(checks::discrete_identities(20240229));
      }
      if (ratios) {
        reports.push_back(checks::cusp_bounds(table, cfg));
        reports.push_back(checks::same_euler_trend(table, cfg));
        reports.push_back(checks::cut_sums(table, cfg));
      }
      if (residuals) {
        reports.push_back(checks::residual_first_order(table, cfg));
        reports.push_back(checks::residual_second_order(table, cfg));
        reports.push_back(checks::constructive_approximant(table, cfg));
        reports.push_back(checks::pk_closed_forms(cfg));
      }
      if (derivative) {
        reports.push_back(checks::derivative_bounds(table, cfg));
        reports.push_back(checks::model_trends(table, cfg));
      }
      maybe_save(g, table);
      bool all_pass = true;
      for (const auto& rep : reports) {
        checks::print_report(rep);
        all_pass = all_pass && rep.pass();
      }
      std::printf("%s\n", all_pass ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT");
      return all_pass ? 0 : 1;
    }

    if (*lam_cmd) {
      Rational a = Rational::parse(la), b = Rational::parse(lb);
      Interval v = lambda_intensity(a, b, lerr, g.precision);
      std::printf("lambda = %.17g (error bound %.3g)\n", v.mid(), v.width() / 2 + lerr);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
