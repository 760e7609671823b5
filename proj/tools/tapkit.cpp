// tapkit command-line front end.
//
// Exit codes: 0 success, 1 mathematical error, 2 usage error. The report is
// fully built before anything is written, so a failing run prints nothing
// on standard output.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "tapkit/commands.hpp"
#include "tapkit/parallel.hpp"

namespace {

using namespace tapkit;

bool is_usage_error(Errc c) { return c == Errc::ParseError || c == Errc::ValidationError; }

struct Globals {
  std::string catalog;
  std::string format = "json";
  std::optional<int> digits;
  int jobs = 0;
};

void add_poly_source(CLI::App* sub, PolyInput& in) {
  sub->add_option("--poly", in.poly, "Laurent polynomial in t");
  sub->add_option("--knot", in.knot, "catalog knot; uses the norm of its twisted Alexander polynomial");
  sub->add_option("--rep", in.rep, "catalog representation")->capture_default_str();
}

void add_knot_rep(CLI::App* sub, KnotRep& kr) {
  sub->add_option("--knot", kr.knot, "catalog knot")->required();
  sub->add_option("--rep", kr.rep, "catalog representation")->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"Twisted Alexander polynomials, Mahler measures and cover homology"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--catalog", g.catalog, "JSON catalog of knots and representations");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--digits", g.digits, "decimal digits for real values")->check(CLI::Range(10, 2000));
  app.add_option("--jobs", g.jobs, "worker threads (0 = available parallelism)")->check(CLI::NonNegativeNumber);

  std::function<Report(const Context&)> action;

  std::string knot;
  KnotRep kr;
  PolyInput pin;
  std::string poly, field, f, g_poly;
  int depth = 64, n = 1, n_min = 1, n_max = 12, k_max = 13, embedding = 0;
  std::optional<int> n_single, d, growth_n_max;
  long p = 0, p_max = 200;
  std::vector<long> primes, s_primes;
  std::optional<std::string> power;

  auto* present = app.add_subcommand("present", "show a knot presentation");
  present->add_option("--knot", knot)->required();
  present->callback([&] { action = [&](const Context& c) { return cmd_present(c, knot); }; });

  auto* riley_poly = app.add_subcommand("riley-poly", "Riley polynomial and its factors");
  riley_poly->add_option("--knot", knot)->required();
  riley_poly->callback([&] { action = [&](const Context& c) { return cmd_riley_poly(c, knot); }; });

  auto* riley_rep = app.add_subcommand("riley-rep", "matrices of a representation");
  add_knot_rep(riley_rep, kr);
  riley_rep->callback([&] { action = [&](const Context& c) { return cmd_riley_rep(c, kr); }; });

  auto* tap = app.add_subcommand("tap", "twisted Alexander polynomials, Wada invariant and norm");
  add_knot_rep(tap, kr);
  tap->callback([&] { action = [&](const Context& c) { return cmd_tap(c, kr); }; });

  auto* norm = app.add_subcommand("norm", "norm polynomial of a polynomial over a number field");
  norm->add_option("--poly", poly, "polynomial in t and a")->required();
  norm->add_option("--field", field, "minimal polynomial of a")->required();
  norm->callback([&] { action = [&](const Context& c) { return cmd_norm(c, poly, field); }; });

  auto* mahler = app.add_subcommand("mahler", "Mahler measure");
  add_poly_source(mahler, pin);
  mahler->callback([&] { action = [&](const Context& c) { return cmd_mahler(c, pin); }; });

  auto* padic = app.add_subcommand("padic-mahler", "p-adic Mahler measures");
  add_poly_source(padic, pin);
  padic->add_option("--primes", primes)->delimiter(',');
  padic->callback([&] { action = [&](const Context& c) { return cmd_padic_mahler(c, pin, primes); }; });

  auto* newton = app.add_subcommand("newton", "p-adic Newton polygon");
  add_poly_source(newton, pin);
  newton->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  newton->callback([&] { action = [&](const Context& c) { return cmd_newton(c, pin, p); }; });

  auto* cyc = app.add_subcommand("cyclic-res", "cyclic resultants Res(f, t^n - 1)");
  add_poly_source(cyc, pin);
  cyc->add_option("--n", n_single, "single n");
  cyc->add_option("--n-min", n_min)->capture_default_str();
  cyc->add_option("--n-max", n_max)->capture_default_str();
  cyc->callback([&] {
    action = [&](const Context& c) {
      return n_single ? cmd_cyclic_res(c, pin, *n_single, *n_single) : cmd_cyclic_res(c, pin, n_min, n_max);
    };
  });

  auto* hillar = app.add_subcommand("hillar", "Hillar-class comparison of two integer polynomials");
  hillar->add_option("--f", f)->required();
  hillar->add_option("--g", g_poly)->required();
  hillar->add_option("--depth", depth)->capture_default_str()->check(CLI::PositiveNumber);
  hillar->callback([&] { action = [&](const Context& c) { return cmd_hillar(c, f, g_poly, depth); }; });

  auto* strip = app.add_subcommand("strip-cyclotomic", "split off cyclotomic factors");
  add_poly_source(strip, pin);
  strip->callback([&] { action = [&](const Context& c) { return cmd_strip_cyclotomic(c, pin); }; });

  auto* homology = app.add_subcommand("homology", "twisted homology of the n-fold cyclic cover");
  add_knot_rep(homology, kr);
  homology->add_option("--n", n)->required();
  homology->callback([&] { action = [&](const Context& c) { return cmd_homology(c, kr, n); }; });

  auto* growth = app.add_subcommand("growth", "torsion growth over cyclic covers");
  add_knot_rep(growth, kr);
  growth->add_option("--n-max", growth_n_max);
  growth->add_option("--primes", primes)->delimiter(',');
  growth->add_option("--s-primes", s_primes, "primes inverted in the coefficient ring")->delimiter(',');
  growth->callback([&] {
    action = [&](const Context& c) {
      return cmd_growth(c, kr, growth_n_max.value_or(c.catalog.defaults().n_max), primes, s_primes);
    };
  });

  auto* teich = app.add_subcommand("teichmuller", "orders of root residues mod p");
  add_poly_source(teich, pin);
  teich->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  teich->add_option("--power", power, "exponent u for the residue orbit");
  teich->callback([&] { action = [&](const Context& c) { return cmd_teichmuller(c, pin, p, power); }; });

  auto* split = app.add_subcommand("split-scan", "primes where a polynomial splits completely");
  add_poly_source(split, pin);
  split->add_option("--d", d, "Galois closure degree");
  split->add_option("--p-max", p_max)->capture_default_str()->check(CLI::PositiveNumber);
  split->callback([&] { action = [&](const Context& c) { return cmd_split_scan(c, pin, d, p_max); }; });

  auto* volume = app.add_subcommand("volume-trend", "symmetric-power torsion estimates of the volume");
  add_knot_rep(volume, kr);
  volume->add_option("--k-max", k_max)->capture_default_str()->check(CLI::Range(2, 64));
  volume->add_option("--embedding", embedding)->capture_default_str()->check(CLI::NonNegativeNumber);
  volume->callback([&] { action = [&](const Context& c) { return cmd_volume_trend(c, kr, k_max, embedding); }; });

  auto* suite = app.add_subcommand("paper-suite", "regression over the worked two-bridge examples");
  suite->callback([&] { action = [&](const Context& c) { return cmd_paper_suite(c); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string out;
  try {
    Context ctx;
    if (!g.catalog.empty()) ctx.catalog = Catalog::load(g.catalog);
    ctx.digits = g.digits.value_or(ctx.catalog.defaults().digits);
    ctx.jobs = resolve_jobs(g.jobs);
    Report report = action(ctx);
    out = g.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
  } catch (const Error& e) {
    std::cerr << "tapkit: " << e.what() << "\n";
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "tapkit: " << e.what() << "\n";
    return 1;
  }
  std::cout << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
