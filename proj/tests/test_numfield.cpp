#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tapkit/finite_field.hpp"
#include "tapkit/numfield.hpp"
#include "tapkit/parse.hpp"

using namespace tapkit;

namespace {

ZPoly zp(const std::string& s) { return parse_integer_poly(s); }

NFElem random_elem(std::mt19937_64& rng, const FieldPtr& f) {
  std::uniform_int_distribution<long> c(-9, 9);
  std::vector<Rat> v;
  for (int i = 0; i < f->degree(); ++i) {
    Rat x(c(rng), 1 + (c(rng) + 9) % 4);
    x.canonicalize();
    v.push_back(x);
  }
  return NFElem(f, v);
}

const FieldPtr& cubic() {
  static const FieldPtr f = NumberField::make(zp("u^3+u^2+2*u+1"));
  return f;
}

}  // namespace

TEST_CASE("number fields are validated at construction") {
  CHECK(NumberField::make(zp("x-1"))->degree() == 1);
  CHECK(cubic()->degree() == 3);
  CHECK(cubic()->discriminant() == -23);
  CHECK(NumberField::make(zp("x^2+1"))->discriminant() == -4);
  CHECK_THROWS_AS(NumberField::make(zp("x^2-1")), Error);
  try {
    NumberField::make(zp("x^2-1"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Reducible);
  }
  CHECK_THROWS(NumberField::make(zp("2*x^2+1")));
}

TEST_CASE("field arithmetic") {
  const NFElem a = NFElem::generator(cubic());
  CHECK(a * a.inverse() == NFElem(Rat(1), cubic()));
  // a^3 reduced by the minimal polynomial, compared with polynomial division
  auto [q, r] = divmod(QPoly({Rat(0), Rat(0), Rat(0), Rat(1)}), to_q(cubic()->min_poly()));
  CHECK(a * (a * a) == NFElem(cubic(), r.coeffs()));
  CHECK(a * (a * a) == NFElem(cubic(), {Rat(-1), Rat(-2), Rat(-1)}));
  const NFElem one(Rat(1), cubic());
  CHECK((one + a) + (one - a) == NFElem(Rat(2), cubic()));
  CHECK_THROWS(NFElem(Rat(0), cubic()).inverse());
}

TEST_CASE("field norms") {
  CHECK(nf_norm(NFElem(Rat(2), cubic())) == 8);
  CHECK(nf_norm(NFElem(Rat(0), cubic())) == 0);
  const NFElem a = NFElem::generator(cubic());
  CHECK(nf_norm(a) == -1);
  // Norm of a as Res(m, x) by the Sylvester determinant.
  CHECK(nf_norm(a) == oracle::sylvester(oracle::rat_coeffs(cubic()->min_poly()), {Rat(0), Rat(1)}));
  const NFElem x = a * a + NFElem(Rat(4), cubic());
  CHECK(nf_norm(x) == oracle::sylvester(oracle::rat_coeffs(cubic()->min_poly()), {Rat(4), Rat(0), Rat(1)}));
}

TEST_CASE("embeddings") {
  auto e = nf_embeddings(*NumberField::make(zp("x^2+1")), 30);
  REQUIRE(e.size() == 2);
  CHECK(std::fabs(e[0].re.to_double()) < 1e-25);
  CHECK(e[0].im.to_double() == doctest::Approx(-1).epsilon(1e-15));
  CHECK(e[1].im.to_double() == doctest::Approx(1).epsilon(1e-15));

  auto g = nf_embeddings(*NumberField::make(zp("u^2-u-1")), 30);
  REQUIRE(g.size() == 2);
  CHECK(g[0].re.to_double() == doctest::Approx((1 - std::sqrt(5.0)) / 2).epsilon(1e-15));
  CHECK(g[1].re.to_double() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));

  auto c = nf_embeddings(*cubic(), 30);
  auto ref = oracle::roots(oracle::to_ld(cubic()->min_poly()));
  REQUIRE(c.size() == 3);
  int real_count = 0;
  for (const auto& z : c) {
    if (z.im.is_zero()) {
      ++real_count;
      CHECK(z.re.to_double() == doctest::Approx(-0.5698402909980532).epsilon(1e-12));
    }
    bool matched = false;
    for (const auto& r : ref)
      matched = matched || std::abs(r - oracle::cplx(z.re.to_double(), z.im.to_double())) < 1e-12L;
    CHECK(matched);
  }
  CHECK(real_count == 1);
}

TEST_CASE("regular representation") {
  const FieldPtr gi = NumberField::make(zp("x^2+1"));
  CHECK(nf_regular_rep(NFElem(Rat(1), gi)) == RatMatrix::identity(2));
  RatMatrix m = nf_regular_rep(NFElem::generator(gi));
  CHECK(m(0, 0) == 0);
  CHECK(m(0, 1) == -1);
  CHECK(m(1, 0) == 1);
  CHECK(m(1, 1) == 0);
  for (const FieldPtr& f : {gi, cubic(), NumberField::make(zp("x^4-x^2+1"))}) {
    const NFElem x = NFElem(Rat(2), f) + NFElem::generator(f);
    CHECK(det_field(nf_regular_rep(x)) == nf_norm(x));
  }
}

TEST_CASE("norm properties on random elements") {
  std::mt19937_64 rng(11);
  const std::vector<FieldPtr> fields{cubic(), NumberField::make(zp("x^2-x+1")), NumberField::make(zp("x^2+x-1")),
                                     NumberField::make(zp("x^4+1"))};
  for (int it = 0; it < 200; ++it) {
    const FieldPtr& f = fields[static_cast<std::size_t>(it) % fields.size()];
    const NFElem x = random_elem(rng, f), y = random_elem(rng, f);
    CHECK(nf_norm(x * y) == nf_norm(x) * nf_norm(y));
    CHECK(nf_regular_rep(x + y) == nf_regular_rep(x) + nf_regular_rep(y));
    CHECK(nf_regular_rep(x * y) == nf_regular_rep(x) * nf_regular_rep(y));
    if (it % 10 == 0 && !x.is_zero()) {
      // Norm against the product of the complex embeddings.
      const int digits = 30;
      Complex prod(Real(1L, 128), Real(0L, 128));
      for (const auto& root : nf_embeddings(*f, digits)) prod = prod * nf_embed(x, root);
      const Real exact(nf_norm(x), 128);
      const double scale = std::max(1.0, std::fabs(exact.to_double()));
      CHECK(abs(prod.re - exact).to_double() <= 1e-25 * scale);
      CHECK(abs(prod.im).to_double() <= 1e-25 * scale);
    }
  }
}

TEST_CASE("factorization mod p") {
  auto f5 = factor_mod_p(zp("t^2-4*t+1"), 5);
  REQUIRE(f5.factors.size() == 1);
  CHECK(f5.factors[0].first == ModPoly{1, 1, 1});
  for (long x = 0; x < 5; ++x) CHECK(oracle::fp_eval({1, 1, 1}, x, 5) != 0);

  auto f11 = factor_mod_p(zp("t^2-4*t+1"), 11);
  REQUIRE(f11.factors.size() == 2);
  std::vector<long> roots;
  for (long x = 0; x < 11; ++x)
    if (oracle::fp_eval({1, 7, 1}, x, 11) == 0) roots.push_back(x);
  CHECK(roots == std::vector<long>{7, 8});
  CHECK(f11.factors[0].first == ModPoly{3, 1});  // t - 8
  CHECK(f11.factors[1].first == ModPoly{4, 1});  // t - 7

  auto f3 = factor_mod_p(zp("t^2"), 3);
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].first == ModPoly{0, 1});
  CHECK(f3.factors[0].second == 2);
}

TEST_CASE("factorization mod p reassembles into irreducibles") {
  std::mt19937_64 rng(5);
  const std::vector<long> primes{2, 3, 5, 7, 11, 13, 31, 97};
  for (int it = 0; it < 200; ++it) {
    const long p = primes[static_cast<std::size_t>(it) % primes.size()];
    ZPoly f = oracle::random_zpoly(rng, 10, 50);
    if (f.lead() % p == 0) continue;
    ModPFactorization fac = factor_mod_p(f, p);
    oracle::FpPoly prod{fac.unit};
    for (const auto& [g, e] : fac.factors) {
      oracle::FpPoly og(g.begin(), g.end());
      CHECK(oracle::fp_irreducible(og, p));
      for (int k = 0; k < e; ++k) prod = oracle::fp_mul(prod, og, p);
    }
    CHECK(prod == oracle::fp_reduce(f, p));
  }
}

TEST_CASE("element orders in finite fields") {
  CHECK(ff_element_order({6, 1}, 7) == 1);  // t - 1
  CHECK(ff_element_order({10, 1}, 11) == 1);
  CHECK(ff_element_order({1, 1, 1}, 5) == 3);
  CHECK(oracle::fp_order_brute({1, 1, 1}, 5) == 3);
  CHECK(ff_element_order({3, 1}, 11) == 10);  // t - 8
  CHECK(oracle::fp_order_brute({3, 1}, 11) == 10);

  std::mt19937_64 rng(9);
  const std::vector<long> primes{2, 3, 5, 7, 13};
  for (int it = 0; it < 100; ++it) {
    const long p = primes[static_cast<std::size_t>(it) % primes.size()];
    ZPoly f = oracle::random_zpoly(rng, 4, 20);
    if (f.lead() % p == 0) continue;
    for (const auto& [h, e] : factor_mod_p(f, p).factors) {
      if (h.size() == 2 && h[0] == 0) continue;  // t itself has no order
      oracle::FpPoly oh(h.begin(), h.end());
      const Int order = ff_element_order(h, p);
      const long deg = static_cast<long>(h.size()) - 1;
      const Int group = ipow(Int(p), static_cast<unsigned long>(deg)) - 1;
      CHECK(group % order == 0);
      CHECK(order == oracle::fp_order_brute(oh, p));
      CHECK(oracle::fp_powmod({0, 1}, order.get_ui(), oh, p) == oracle::FpPoly{1});
      for (const auto& [q, mult] : factor_integer(order))
        CHECK(oracle::fp_powmod({0, 1}, Int(order / q).get_ui(), oh, p) != oracle::FpPoly{1});
    }
  }
}
