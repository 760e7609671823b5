#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tapkit/catalog.hpp"
#include "tapkit/parse.hpp"
#include "tapkit/twistpoly.hpp"

using namespace tapkit;

namespace {

ZLaurent zl(const std::string& s) { return parse_integer_laurent(s); }
ZPoly zp(const std::string& s) { return parse_integer_poly(s); }

struct Knot {
  TwoBridge tb;
  Rep rho;
  FieldPtr field;
};

Knot riley_knot(int p, int q, int factor = 0) {
  TwoBridge tb = two_bridge_presentation(p, q);
  auto [rho, field] = riley_rep(p, q, factor);
  return Knot{tb, rho, field};
}

ZLaurent random_zlaurent(std::mt19937_64& rng, int max_deg, long bound) {
  std::uniform_int_distribution<int> shift(-3, 3);
  return ZLaurent(oracle::random_zpoly(rng, max_deg, bound), shift(rng));
}

LPoly random_lpoly(std::mt19937_64& rng, const FieldPtr& f, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> c(-5, 5);
  const int d = deg(rng);
  std::vector<NFElem> coeffs;
  for (int i = 0; i <= d; ++i) {
    std::vector<Rat> v;
    for (int k = 0; k < f->degree(); ++k) v.emplace_back(c(rng));
    coeffs.emplace_back(f, v);
  }
  if (coeffs.back().is_zero()) coeffs.back() = NFElem(Rat(1), f);
  return LPoly(NFPoly(coeffs), 0);
}

ZLaurent reciprocal(const ZLaurent& f) { return f.inverted(); }

}  // namespace

TEST_CASE("resultants") {
  CHECK(resultant(zp("t-3"), zp("t-5")) == -2);
  CHECK(resultant(zp("t^2-4*t+1"), zp("t-1")) == -2);
  CHECK(Rat(resultant(zp("t^2-4*t+1"), zp("t-1"))) ==
        oracle::sylvester(oracle::rat_coeffs(zp("t^2-4*t+1")), oracle::rat_coeffs(zp("t-1"))));
}

TEST_CASE("resultant multiplicativity on random triples") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 500; ++it) {
    const ZPoly f = oracle::random_zpoly(rng, 5, 9), g = oracle::random_zpoly(rng, 5, 9),
                h = oracle::random_zpoly(rng, 5, 9);
    const Int rfg = resultant(f, g);
    CHECK(resultant(f, g * h) == rfg * resultant(f, h));
    if (it % 25 == 0) CHECK(Rat(rfg) == oracle::sylvester(oracle::rat_coeffs(f), oracle::rat_coeffs(g)));
  }
}

TEST_CASE("cyclic resultants") {
  CHECK(cyclic_resultant(zl("t-2"), 3) == -7);
  CHECK(cyclic_resultant(zl("t^2-t+1"), 2) == 3);
  CHECK(cyclic_resultant(zl("t^2-t+1"), 6) == 0);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    const ZLaurent f = random_zlaurent(rng, 4, 6);
    const int n = 1 + it % 12;
    const Int r = cyclic_resultant(f, n);
    const oracle::cplx num = oracle::cyclic_product(f, n);
    CHECK(std::fabs(static_cast<double>(num.imag())) <= 1e-6 * std::max(1.0, std::fabs(r.get_d())));
    CHECK(std::fabs(static_cast<double>(num.real()) - r.get_d()) <= 1e-6 * std::max(1.0, std::fabs(r.get_d())));
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == zp("t-1"));
  CHECK(cyclotomic(4) == zp("t^2+1"));
  CHECK(cyclotomic(20) == zp("t^8-t^6+t^4-t^2+1"));
  for (int n = 1; n <= 60; ++n) {
    ZPoly prod(Int(1));
    for (int m = 1; m <= n; ++m)
      if (n % m == 0) prod = prod * cyclotomic(m);
    CHECK(prod == ZPoly::monomial(Int(1), static_cast<std::size_t>(n)) - ZPoly(Int(1)));
    CHECK(cyclotomic(n).degree() == euler_phi(n));
  }
}

TEST_CASE("cyclotomic stripping") {
  CyclotomicSplit s = strip_cyclotomic(zl("(t^2+1)^2*(t^8-t^6+t^4-t^2+1)"));
  CHECK(s.core == zl("1"));
  CHECK(s.factors == std::vector<std::pair<int, int>>{{4, 2}, {20, 1}});
  CyclotomicSplit s2 = strip_cyclotomic(zl("t^2-4*t+1"));
  CHECK(s2.core == zl("t^2-4*t+1"));
  CHECK(s2.factors.empty());
  CyclotomicSplit s3 = strip_cyclotomic(zl("t-1"));
  CHECK(s3.core == zl("1"));
  CHECK(s3.factors == std::vector<std::pair<int, int>>{{1, 1}});

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> pick(1, 30), mult(1, 2), count(0, 3);
  for (int it = 0; it < 100; ++it) {
    ZLaurent f(oracle::random_zpoly(rng, 3, 5), 0);
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      const ZPoly c = cyclotomic(pick(rng));
      for (int e = mult(rng); e > 0; --e) f = f * ZLaurent(c, 0);
    }
    CyclotomicSplit sp = strip_cyclotomic(f);
    ZLaurent back = sp.core;
    for (const auto& [m, e] : sp.factors)
      for (int i = 0; i < e; ++i) back = back * ZLaurent(cyclotomic(m), 0);
    CHECK(back == f);
    const int d = f.span();
    for (int n = 1; n <= std::min(2 * d * d, 60); ++n) CHECK(cyclic_resultant(sp.core, n) != 0);
  }
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(zl("-t^3+t")) == zl("t^2-1"));
  CHECK(canonical_form(zl("t^-1-1")) == zl("t-1"));
  std::mt19937_64 rng(4);
  for (int it = 0; it < 100; ++it) {
    const ZLaurent f = random_zlaurent(rng, 5, 9);
    CHECK(canonical_form(canonical_form(f)) == canonical_form(f));
    CHECK(canonical_form(f.scaled(Int(-1)).times_t(3)) == canonical_form(f));
  }
  const FieldPtr f = NumberField::make(zp("x^2-x+1"));
  for (int it = 0; it < 50; ++it) {
    const LPoly g = random_lpoly(rng, f, 3);
    const LPoly c = canonical_form(g);
    CHECK(canonical_form(c) == c);
    // Any torsion unit multiple has the same canonical form.
    for (const auto& zeta : torsion_units(f)) CHECK(canonical_form(g * LPoly::monomial(zeta, 2)) == c);
  }
}

TEST_CASE("torsion units") {
  CHECK(torsion_units(NumberField::make(zp("x^2-x+1"))).size() == 6);
  CHECK(torsion_units(NumberField::make(zp("x^2+1"))).size() == 4);
  CHECK(torsion_units(NumberField::make(zp("u^3+u^2+2*u+1"))).size() == 2);
  const FieldPtr g = NumberField::make(zp("x^2-x-1"));
  CHECK(torsion_units(g).size() == 2);
  CHECK(is_algebraic_unit(NFElem::generator(g)));
  CHECK_FALSE(is_torsion_unit(NFElem::generator(g)));
}

TEST_CASE("Laurent determinants: interpolation against Bareiss") {
  std::mt19937_64 rng(10);
  const FieldPtr f = NumberField::make(zp("x^2-x+1"));
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + static_cast<std::size_t>(it % 4);
    LMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_lpoly(rng, f, 2).times_t(static_cast<int>(i) - 1);
    CHECK(det_laurent(m) == det_laurent_bareiss(m));
  }
}

TEST_CASE("minor gcds") {
  LMatrix id(2, 2);
  id(0, 0) = LPoly(NFPoly(NFElem(1)), 0);
  id(1, 1) = LPoly(NFPoly(NFElem(1)), 0);
  CHECK(unit_compare(minor_gcd(id, 2), to_lpoly(zl("1"))) == UnitCheck::Equal);
  LMatrix d(2, 2);
  d(0, 0) = to_lpoly(zl("t-1"));
  d(1, 1) = to_lpoly(zl("t-1"));
  CHECK(unit_compare(minor_gcd(d, 1), to_lpoly(zl("t-1"))) == UnitCheck::Equal);
  CHECK(unit_compare(minor_gcd(d, 2), to_lpoly(zl("(t-1)^2"))) == UnitCheck::Equal);
  TwoBridge tb = two_bridge_presentation(3, 1);
  LMatrix a = alexander_matrix(tb.pres, trivial_rep(2), tb.alpha);
  CHECK(unit_compare(minor_gcd(a, 1), to_lpoly(zl("t^2-t+1"))) == UnitCheck::Equal);
  CHECK(unit_compare(maximal_minor_gcd(a), to_lpoly(zl("t^2-t+1"))) == UnitCheck::Equal);
}

TEST_CASE("twisted Alexander polynomials of the worked examples") {
  Knot k31 = riley_knot(3, 1), k41 = riley_knot(5, 3);
  CHECK(unit_compare(twisted_alexander(k31.tb.pres, k31.rho, k31.tb.alpha, 1).poly, to_lpoly(zl("t^2+1"), k31.field)) ==
        UnitCheck::Equal);
  CHECK(unit_compare(twisted_alexander(k41.tb.pres, k41.rho, k41.tb.alpha, 1).poly,
                     to_lpoly(zl("t^2-4*t+1"), k41.field)) == UnitCheck::Equal);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 1}, {5, 3}, {5, 1}, {7, 3}, {7, 1}}) {
    Knot k = riley_knot(p, q);
    CHECK(unit_compare(twisted_alexander(k.tb.pres, k.rho, k.tb.alpha, 0).poly, to_lpoly(zl("1"), k.field)) ==
          UnitCheck::Equal);
  }
}

TEST_CASE("Wada invariants") {
  Knot k52 = riley_knot(7, 3);
  WadaResult w = wada_invariant(k52.tb.pres, k52.rho, k52.tb.alpha);
  REQUIRE(w.polynomial);
  CHECK(unit_compare(w.reduced, parse_nf_laurent("(4+a^2)*t^2-4*t+(4+a^2)", k52.field)) == UnitCheck::Equal);
  CHECK(w.columns_agree == UnitCheck::Equal);

  // 5_1: Phi_4(t) (t^4 + c t^2 + 1) with c a root of x^2 + x - 1.
  Knot k51 = riley_knot(5, 1);
  WadaResult w51 = wada_invariant(k51.tb.pres, k51.rho, k51.tb.alpha);
  REQUIRE(w51.polynomial);
  auto [q, r] = divmod(canonical_form(w51.reduced).poly(), to_lpoly(zl("t^2+1"), k51.field).poly());
  CHECK(r.is_zero());
  REQUIRE(q.degree() == 4);
  const NFElem c = q.coeff(2) / q.lead();
  CHECK(c * c + c - NFElem(Rat(1), k51.field) == NFElem(Rat(0), k51.field));
  CHECK(q.coeff(0) == q.lead());
  CHECK(q.coeff(1).is_zero());

  Knot k41 = riley_knot(5, 3);
  WadaResult w41 = wada_invariant(k41.tb.pres, k41.rho, k41.tb.alpha);
  CHECK(w41.valid_columns == std::vector<int>{0, 1});
  CHECK(w41.columns_agree == UnitCheck::Equal);
}

TEST_CASE("delta_1 equals Wada times delta_0 for Riley representations") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 1}, {5, 3}, {5, 1}, {7, 3}, {7, 1}, {9, 5}, {9, 7}}) {
    Knot k = riley_knot(p, q);
    TwistedAlexander d0 = twisted_alexander(k.tb.pres, k.rho, k.tb.alpha, 0);
    TwistedAlexander d1 = twisted_alexander(k.tb.pres, k.rho, k.tb.alpha, 1);
    WadaResult w = wada_invariant(k.tb.pres, k.rho, k.tb.alpha);
    REQUIRE(w.polynomial);
    CHECK(d1.definition_checked);
    CHECK(make_unit_class(d1.poly).poly == make_unit_class(w.reduced * d0.poly).poly);
    CHECK(is_reciprocal(d1.poly));
    CHECK(is_reciprocal(norm_primitive(d1.poly)));
  }
}

TEST_CASE("norm polynomials") {
  const FieldPtr cubic = NumberField::make(zp("u^3+u^2+2*u+1"));
  CHECK(norm_primitive(parse_nf_laurent("(4+a^2)*t^2-4*t+(4+a^2)", cubic)) ==
        zl("25*t^6-104*t^5+219*t^4-272*t^3+219*t^2-104*t+25"));
  CHECK(to_zlaurent(norm_polynomial(parse_nf_laurent("(4+a^2)*t^2-4*t+(4+a^2)", cubic))) ==
        zl("25*t^6-104*t^5+219*t^4-272*t^3+219*t^2-104*t+25"));
  const FieldPtr eis = NumberField::make(zp("x^2-x+1"));
  CHECK(norm_primitive(to_lpoly(zl("t^2-4*t+1"), eis)) == zl("(t^2-4*t+1)^2"));
  CHECK(norm_primitive(to_lpoly(zl("1"), eis)) == zl("1"));

  std::mt19937_64 rng(12);
  for (int it = 0; it < 500; ++it) {
    const FieldPtr& f = it % 2 ? cubic : eis;
    const LPoly a = random_lpoly(rng, f, 3), b = random_lpoly(rng, f, 3);
    CHECK(norm_polynomial(a * b) == norm_polynomial(a) * norm_polynomial(b));
  }
}

TEST_CASE("reciprocity") {
  CHECK(is_reciprocal(zl("t^2-4*t+1")));
  CHECK_FALSE(is_reciprocal(zl("t-2")));
  const FieldPtr cubic = NumberField::make(zp("u^3+u^2+2*u+1"));
  CHECK(is_reciprocal(parse_nf_laurent("(4+a^2)*t^2-4*t+(4+a^2)", cubic)));
}

TEST_CASE("integer factorization") {
  IntegerFactorization f = factor_over_z(zp("t^4-1"));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].first == zp("t-1"));
  CHECK(f.factors[1].first == zp("t+1"));
  CHECK(f.factors[2].first == zp("t^2+1"));
  const ZPoly sextic = zp("25*t^6-104*t^5+219*t^4-272*t^3+219*t^2-104*t+25");
  IntegerFactorization g = factor_over_z(sextic);
  CHECK(g.product() == sextic);
  CHECK(g.factors.size() == 1);
  IntegerFactorization h = factor_over_z(zp("6*t"));
  CHECK(h.content == 6);
  CHECK(h.factors.size() == 1);
  CHECK(h.factors[0].first == zp("t"));

  std::mt19937_64 rng(13);
  for (int it = 0; it < 50; ++it) {
    ZPoly a = oracle::random_zpoly(rng, 4, 9), b = oracle::random_zpoly(rng, 4, 9);
    CHECK(factor_over_z(a * b * b).product() == a * b * b);
  }
}

TEST_CASE("Hillar classes") {
  const ZLaurent f = zl("t^2-3*t+5");
  HillarResult same = hillar_test(f, f);
  CHECK(same.kind == HillarResult::Kind::SameClassCertified);
  HillarResult h = hillar_test(zl("2*t-1"), zl("t-2"));
  CHECK(h.kind == HillarResult::Kind::SameClassCertified);
  CHECK(unit_equal(h.u * h.v, zl("2*t-1")));
  CHECK(unit_equal(h.u * h.v.inverted(), zl("t-2")));
  HillarResult d = hillar_test(zl("t-2"), zl("t-3"));
  CHECK(d.kind == HillarResult::Kind::Distinct);
  CHECK(d.n == 1);

  std::mt19937_64 rng(14);
  for (int it = 0; it < 100; ++it) {
    const ZLaurent g = random_zlaurent(rng, 6, 9);
    HillarResult r = hillar_test(g, reciprocal(g));
    CHECK(r.kind == HillarResult::Kind::SameClassCertified);
    CHECK(unit_equal(r.u * r.v, g));
    CHECK(unit_equal(r.u * r.v.inverted(), reciprocal(g)));
  }
}
