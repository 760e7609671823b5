#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tapkit/covers.hpp"
#include "tapkit/measures.hpp"
#include "tapkit/parse.hpp"

using namespace tapkit;

namespace {

ZLaurent zl(const std::string& s) { return parse_integer_laurent(s); }

const char* const kSextic = "25*t^6-104*t^5+219*t^4-272*t^3+219*t^2-104*t+25";

Rat padic_abs(const Int& x, long p) {
  if (x == 0) return 0;
  Int y = abs(x);
  Rat r = 1;
  while (y % p == 0) {
    y /= p;
    r /= p;
  }
  return r;
}

// Lobachevsky function by its Fourier series (1/2) sum sin(2 k t) / k^2.
double lobachevsky_series(double theta) {
  long double s = 0;
  for (long k = 1; k <= 2000000; ++k) s += std::sin(2.0L * k * theta) / (static_cast<long double>(k) * k);
  return static_cast<double>(s / 2);
}

// Roots of f in F_{p^2} = F_p[x]/(m) by enumeration, raised to u and
// encoded as c0 + c1 p.
std::vector<Int> brute_orbit_quadratic(const ZPoly& f, long p, const oracle::FpPoly& m, long u) {
  const oracle::FpPoly fp = oracle::fp_reduce(f, p);
  std::vector<Int> out;
  for (long c0 = 0; c0 < p; ++c0)
    for (long c1 = 0; c1 < p; ++c1) {
      oracle::FpPoly z{c0, c1};
      oracle::trim(z);
      oracle::FpPoly v;
      for (std::size_t i = fp.size(); i-- > 0;) {
        v = oracle::fp_rem(oracle::fp_mul(v, z, p), m, p);
        v.resize(std::max<std::size_t>(v.size(), 1), 0);
        v[0] = oracle::md(v[0] + fp[i], p);
        oracle::trim(v);
      }
      if (!v.empty()) continue;
      oracle::FpPoly w = oracle::fp_powmod(z, static_cast<unsigned long long>(u), m, p);
      w.resize(2, 0);
      out.emplace_back(w[0] + w[1] * p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Mahler measures of the worked polynomials") {
  MahlerMeasure a = mahler(zl("t^2+1"), 30);
  CHECK(std::fabs(a.value.to_double() - 1) < 1e-20);
  CHECK(a.roots_on_circle == 2);
  MahlerMeasure b = mahler(zl("t^2-4*t+1"), 30);
  CHECK(b.value.to_double() == doctest::Approx(2 + std::sqrt(3.0)).epsilon(1e-14));
  CHECK(b.error.to_double() < 1e-25);
  MahlerMeasure c = mahler(zl("(t^2-4*t+1)^2"), 30);
  const Real exact = Real(7L, 256) + Real(4L, 256) * sqrt(Real(3L, 256));
  CHECK(abs(c.value - exact).to_double() < 1e-25);
  CHECK(mahler(zl("3*t+9"), 20).value.to_double() == doctest::Approx(9).epsilon(1e-15));
  CHECK(mahler(zl("t^3-t-1"), 20).value.to_double() ==
        doctest::Approx(static_cast<double>(oracle::mahler_numeric(parse_integer_poly("t^3-t-1")))).epsilon(1e-12));
}

TEST_CASE("Mahler measure properties on random polynomials") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 60; ++it) {
    const ZPoly fp = oracle::random_zpoly(rng, 5, 9), gp = oracle::random_zpoly(rng, 5, 9);
    const ZLaurent f(fp, 0), g(gp, 0);
    const MahlerMeasure mf = mahler(f, 25), mg = mahler(g, 25), mfg = mahler(f * g, 25);
    const Real bound = mfg.error + mf.error * mg.value + mg.error * mf.value + mf.error * mg.error +
                       Real(1e-20, 128) * mfg.value;
    CHECK(abs(mfg.value - mf.value * mg.value) <= bound);
    const MahlerMeasure mr = mahler(f.inverted(), 25);
    CHECK(abs(mr.value - mf.value) <= mr.error + mf.error + Real(1e-20, 128) * mf.value);
    CHECK(mf.value.to_double() == doctest::Approx(static_cast<double>(oracle::mahler_numeric(fp))).epsilon(1e-9));
  }
}

TEST_CASE("p-adic Mahler measures") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 23L}) CHECK(padic_mahler(zl("t^2-4*t+1"), p) == 1);
  CHECK(padic_mahler(zl("3*t+9"), 3) == Rat(1, 3));
  CHECK(padic_mahler(zl(kSextic), 5) == 1);
  CHECK(gauss_norm(zl("3*t+9"), 3) == Rat(1, 3));

  std::mt19937_64 rng(32);
  std::vector<long> primes;
  for (long q = 2; q < 100; ++q) {
    bool prime = true;
    for (long r = 2; r * r <= q; ++r) prime = prime && q % r != 0;
    if (prime) primes.push_back(q);
  }
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<int> small(0, 3);
  for (int it = 0; it < 1000; ++it) {
    const long p = small(rng) == 0 ? primes[pick(rng)] : primes[static_cast<std::size_t>(small(rng))];
    ZPoly f = oracle::random_zpoly(rng, 6, 60);
    const ZLaurent lf(f, 0);
    CHECK(gauss_norm(lf, p) == newton_mahler(lf, p));
    CHECK(padic_mahler(lf, p) == padic_mahler(lf.inverted(), p));
  }
}

TEST_CASE("Newton polygons") {
  NewtonPolygon a = newton_polygon(zl("t^2-4*t+1"), 7);
  REQUIRE(a.segments.size() == 1);
  CHECK(a.segments[0].first == 0);
  CHECK(a.segments[0].second == 2);
  CHECK(a.roots_on_unit_circle());

  NewtonPolygon b = newton_polygon(zl("3*t+9"), 3);
  CHECK(b.vertices == std::vector<std::pair<int, long>>{{0, 2}, {1, 1}});
  REQUIRE(b.segments.size() == 1);
  CHECK(b.segments[0].first == -1);
  CHECK_FALSE(b.roots_on_unit_circle());

  NewtonPolygon c = newton_polygon(zl("t"), 5);
  CHECK(c.span() == 0);

  std::mt19937_64 rng(33);
  for (int it = 0; it < 200; ++it) {
    const ZLaurent f(oracle::random_zpoly(rng, 7, 200), 0);
    const long p = std::array<long, 4>{2, 3, 5, 7}[static_cast<std::size_t>(it % 4)];
    NewtonPolygon np = newton_polygon(f, p);
    int total = 0;
    for (std::size_t i = 0; i < np.segments.size(); ++i) {
      total += np.segments[i].second;
      if (i > 0) CHECK(np.segments[i - 1].first < np.segments[i].first);
    }
    CHECK(total == f.span());
    CHECK(np.span() == f.span());
  }
}

TEST_CASE("Teichmuller order data") {
  TeichmullerData a = teichmuller_data(zl("t^2-4*t+1"), 5);
  REQUIRE(a.entries.size() == 1);
  CHECK(a.entries[0].degree == 2);
  CHECK(a.entries[0].order == 3);
  CHECK(a.entries[0].multiplicity == 2);
  CHECK(a.m == 3);
  CHECK(oracle::fp_order_brute({1, 1, 1}, 5) == 3);

  TeichmullerData b = teichmuller_data(zl("t^2-4*t+1"), 11);
  CHECK(b.orders() == std::vector<Int>{10, 10});
  CHECK(b.m == 10);
  for (long r : {7L, 8L}) {
    long x = r, k = 1;
    while (x != 1) {
      x = x * r % 11;
      ++k;
    }
    CHECK(k == 10);
  }
  CHECK(teichmuller_data(zl("t-1"), 7).m == 1);

  std::mt19937_64 rng(34);
  for (int it = 0; it < 100; ++it) {
    const long p = std::array<long, 5>{3, 5, 7, 11, 13}[static_cast<std::size_t>(it % 5)];
    const ZPoly f = oracle::random_zpoly(rng, 5, 30);
    if (f.lead() % p == 0 || f[0] % p == 0) continue;
    const ZLaurent lf(f, 0);
    const oracle::FpPoly fr = oracle::fp_reduce(f, p);
    oracle::FpPoly deriv;
    for (std::size_t i = 1; i < fr.size(); ++i) deriv.push_back(oracle::md(static_cast<long>(i) * fr[i], p));
    oracle::trim(deriv);
    if (deriv.empty() || oracle::fp_gcd(fr, deriv, p).size() > 1) {
      try {
        teichmuller_data(lf, p);
        FAIL("expected NotSquarefreeModP");
      } catch (const Error& err) {
        CHECK(err.code() == Errc::NotSquarefreeModP);
      }
      continue;
    }
    TeichmullerData d = teichmuller_data(lf, p);
    CHECK(d.orders() == teichmuller_data(lf.inverted(), p).orders());
    Int m = 1;
    for (const auto& e : d.entries) {
      CHECK(e.order == oracle::fp_order_brute(oracle::FpPoly(e.factor.begin(), e.factor.end()), p));
      const Int group = ipow(Int(p), static_cast<unsigned long>(e.degree)) - 1;
      CHECK(group % e.order == 0);
      m = lcm(m, e.order);
    }
    CHECK(m == d.m);
  }
}

TEST_CASE("residue power orbits") {
  TeichmullerData d = teichmuller_data(zl("t^2-4*t+1"), 11);
  CHECK(residue_power_orbit(d, 1) == std::vector<Int>{7, 8});
  CHECK(residue_power_orbit(d, 3) == std::vector<Int>{2, 6});
  // Closure: raising orbit(u) to v gives orbit(u v mod m).
  const long m = d.m.get_si();
  for (long u = 1; u < m; ++u) {
    if (std::gcd(u, m) != 1) continue;
    const std::vector<Int> ou = residue_power_orbit(d, u);
    for (long v = 1; v < m; ++v) {
      if (std::gcd(v, m) != 1) continue;
      std::vector<Int> raised;
      for (const auto& x : ou) {
        long y = 1;
        for (long i = 0; i < v; ++i) y = y * x.get_si() % 11;
        raised.emplace_back(y);
      }
      std::sort(raised.begin(), raised.end());
      CHECK(raised == residue_power_orbit(d, (u * v) % m));
    }
  }

  TeichmullerData e = teichmuller_data(zl("t^2-4*t+1"), 5);
  CHECK(residue_extension_degree(e) == 2);
  const ModPoly mod = FqField::canonical(5, 2).modulus();
  const oracle::FpPoly m25(mod.begin(), mod.end());
  for (long u : {1L, 2L, 4L, 5L})
    CHECK(residue_power_orbit(e, u) == brute_orbit_quadratic(parse_integer_poly("t^2-4*t+1"), 5, m25, u));
}

TEST_CASE("split-prime scans") {
  const ZPoly cubic = parse_integer_poly("u^3+u^2+2*u+1");
  CHECK(galois_closure_degree(cubic) == 6);
  CHECK(galois_closure_degree(parse_integer_poly("x^2+1")) == 2);
  CHECK(galois_closure_degree(parse_integer_poly("x-5")) == 1);

  SplitScan lin = split_scan(parse_integer_poly("x-5"), 1, 200);
  CHECK(lin.violations().empty());
  CHECK(lin.rows.size() == 46);

  // Evidence table only.
  SplitScan gauss = split_scan(parse_integer_poly("x^2+1"), std::nullopt, 100);
  for (const auto& row : gauss.rows)
    if (!row.excluded && row.p % 2 == 1) CHECK(row.splits == (row.p % 4 == 1));

  // Split status against brute-force root counting.
  SplitScan c = split_scan(cubic, std::nullopt, 200);
  CHECK(c.d == 6);
  for (const auto& row : c.rows) {
    if (row.excluded) continue;
    int count = 0;
    for (long x = 0; x < row.p; ++x) count += oracle::fp_eval(oracle::fp_reduce(cubic, row.p), x, row.p) == 0;
    CHECK(row.splits == (count == 3));
  }
}

TEST_CASE("cyclic resultants approach the Mahler measures") {
  for (const char* s : {"t^2-4*t+1", "2*t^2-3*t+2", "t^3-t-1", "3*t+9", "5*t^2+t-2"}) {
    const ZLaurent f = zl(s);
    REQUIRE(strip_cyclotomic(f).factors.empty());
    const int n = 200;
    const Int r = abs(cyclic_resultant(f, n));
    const double root = std::exp(std::log(r.get_d()) / n);
    const double m = mahler(f, 20).value.to_double();
    CHECK(std::fabs(root - m) < 0.1 * m);
    for (long p : {2L, 3L, 5L, 11L}) {
      const double rp = std::pow(padic_abs(r, p).get_d(), 1.0 / n);
      const double mp = padic_mahler(f, p).get_d();
      CHECK(std::fabs(rp - mp) < 0.1 * mp);
    }
  }
}

TEST_CASE("volume trend for the figure-eight knot") {
  TwoBridge tb = two_bridge_presentation(5, 3);
  Rep rho = riley_rep(5, 3, 0).first;
  VolumeTrend v = volume_trend(tb.pres, rho, tb.alpha, 13, 0, 30, 2);
  REQUIRE(v.odd.size() == 6);
  CHECK(v.odd[0].k == 3);
  CHECK(v.odd[0].value == 0);
  for (std::size_t i = 0; i + 1 < v.odd.size(); ++i) CHECK(v.odd[i].value <= v.odd[i + 1].value + 1e-4);
  const double target = 6 * lobachevsky_series(std::numbers::pi / 3) / (4 * std::numbers::pi);
  CHECK(target == doctest::Approx(0.16153).epsilon(1e-4));
  CHECK(std::fabs(v.odd.back().value - target) < 0.15 * target);
}
