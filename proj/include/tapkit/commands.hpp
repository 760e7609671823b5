#pragma once

// Subcommand implementations. Each returns a Report; the CLI only parses
// arguments and prints.

#include <optional>
#include <string>
#include <vector>

#include "tapkit/catalog.hpp"
#include "tapkit/report.hpp"

namespace tapkit {

struct Context {
  Catalog catalog = Catalog::builtin();
  int digits = 20;
  int jobs = 1;
};

struct KnotRep {
  std::string knot;
  std::string rep = "riley0";
};

// A polynomial given literally, or the norm polynomial of a catalog knot/rep.
struct PolyInput {
  std::string poly;
  std::string knot;
  std::string rep = "riley0";
};

Report cmd_present(const Context& ctx, const std::string& knot);
Report cmd_riley_poly(const Context& ctx, const std::string& knot);
Report cmd_riley_rep(const Context& ctx, const KnotRep& kr);
Report cmd_tap(const Context& ctx, const KnotRep& kr);
// Norm of a polynomial in t with coefficients in Q(a), m(a) = 0.
Report cmd_norm(const Context& ctx, const std::string& poly, const std::string& field);
Report cmd_mahler(const Context& ctx, const PolyInput& in);
Report cmd_padic_mahler(const Context& ctx, const PolyInput& in, const std::vector<long>& primes);
Report cmd_newton(const Context& ctx, const PolyInput& in, long p);
Report cmd_cyclic_res(const Context& ctx, const PolyInput& in, int n_min, int n_max);
Report cmd_hillar(const Context& ctx, const std::string& f, const std::string& g, int depth);
Report cmd_strip_cyclotomic(const Context& ctx, const PolyInput& in);
Report cmd_homology(const Context& ctx, const KnotRep& kr, int n);
Report cmd_growth(const Context& ctx, const KnotRep& kr, int n_max, const std::vector<long>& primes,
                  const std::vector<long>& s_primes);
Report cmd_teichmuller(const Context& ctx, const PolyInput& in, long p, const std::optional<std::string>& power);
// Without a literal polynomial the knot's Riley factor is scanned.
Report cmd_split_scan(const Context& ctx, const PolyInput& in, std::optional<int> d, long p_max);
Report cmd_volume_trend(const Context& ctx, const KnotRep& kr, int k_max, int embedding);
Report cmd_paper_suite(const Context& ctx);

// Lobachevsky function by its Fourier series, summed to double precision.
double lobachevsky(double theta);
// Vol(4_1) / 4 pi from the ideal-tetrahedron decomposition.
double figure_eight_volume_ratio();

}  // namespace tapkit
