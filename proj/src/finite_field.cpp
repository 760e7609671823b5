#include "tapkit/finite_field.hpp"

#include <string>

namespace tapkit {

FpField::FpField(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw Error(Errc::BadParameters, std::to_string(p) + " is not prime");
}

FpField::Elem FpField::from_int(const Int& n) const {
  Int r = n % Int(static_cast<long>(p_));
  if (sgn(r) < 0) r += p_;
  return r.get_si();
}

FpField::Elem FpField::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivideByZero, "inverse of zero mod " + std::to_string(p_));
  // Fermat: a^(p-2).
  Elem r = 1, b = a;
  std::int64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FqField::FqField(std::int64_t p, ModPoly modulus) : base_(p), modulus_(std::move(modulus)) {
  PolyRing<FpField> r(base_);
  r.trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw Error(Errc::BadParameters, "extension modulus must be monic of positive degree");
}

FqField FqField::canonical(std::int64_t p, int e) {
  if (e < 1) throw Error(Errc::BadParameters, "extension degree must be positive");
  FpField base(p);
  PolyRing<FpField> ring(base);
  ModPoly cand(static_cast<std::size_t>(e) + 1, 0);
  cand[static_cast<std::size_t>(e)] = 1;
  // Enumerate the lower coefficients as base-p digits, constant term first.
  while (true) {
    if (ring.is_irreducible(cand)) return FqField(p, cand);
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(e)) {
      if (++cand[i] < p) break;
      cand[i] = 0;
      ++i;
    }
    if (i == static_cast<std::size_t>(e))
      throw Error(Errc::InternalMismatch, "no irreducible polynomial found");
  }
}

FqField::Elem FqField::inv(const Elem& a) const {
  if (a.empty()) throw Error(Errc::DivideByZero, "inverse of zero in a finite field");
  auto [g, s] = ring().half_ext_gcd(a, modulus_);
  if (!(g.size() == 1 && g[0] == 1)) throw Error(Errc::InternalMismatch, "extension modulus is reducible");
  return ring().rem(s, modulus_);
}

FqField::Elem FqField::pth_root(const Elem& a) const {
  // The inverse of Frobenius is its (E-1)-st power.
  return pow(a, order() / Int(static_cast<long>(characteristic())));
}

ModPoly reduce_mod_p(const ZPoly& f, std::int64_t p) {
  FpField fp(p);
  ModPoly r;
  r.reserve(f.size());
  for (const auto& c : f.coeffs()) r.push_back(fp.from_int(c));
  PolyRing<FpField>(fp).trim(r);
  return r;
}

ZPoly lift_mod_p(const ModPoly& f) {
  std::vector<Int> v;
  v.reserve(f.size());
  for (auto c : f) v.emplace_back(static_cast<long>(c));
  return ZPoly(std::move(v));
}

ModPFactorization factor_mod_p(const ZPoly& f, std::int64_t p) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomialModP, "zero polynomial");
  FpField fp(p);
  ModPoly g = reduce_mod_p(f, p);
  if (g.empty()) throw Error(Errc::ZeroPolynomialModP, "all coefficients divisible by " + std::to_string(p));
  PolyRing<FpField> ring(fp);
  ModPFactorization out;
  out.p = p;
  out.factors = ring.factor(g, &out.unit);
  return out;
}

namespace {

Int pollard_brent(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto step = [&](const Int& v) {
      Int w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Int d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(Int(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(exact_div(n, d), out);
}

}  // namespace

std::map<Int, int> factor_integer(const Int& n0) {
  if (sgn(n0) <= 0) throw Error(Errc::BadParameters, "factor_integer needs a positive integer");
  std::map<Int, int> out;
  Int n = n0;
  for (long p = 2; p < 10000 && n > 1; ++p) {
    if (p > 2 && p % 2 == 0) continue;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      ++out[Int(p)];
      n /= p;
    }
  }
  factor_into(n, out);
  return out;
}

std::map<Int, int> factor_prime_power_minus_one(std::int64_t p, int e) {
  // p^e - 1 = prod over k | e of Phi_k(p).
  std::vector<Int> phi(static_cast<std::size_t>(e) + 1);
  std::map<Int, int> out;
  const Int pp(static_cast<long>(p));
  for (int k = 1; k <= e; ++k) {
    if (e % k != 0) continue;
    Int v = ipow(pp, static_cast<unsigned long>(k)) - 1;
    for (int d = 1; d < k; ++d)
      if (k % d == 0) v = exact_div(v, phi[static_cast<std::size_t>(d)]);
    phi[static_cast<std::size_t>(k)] = v;
    for (auto& [q, m] : factor_integer(v)) out[q] += m;
  }
  return out;
}

Int ff_element_order(const ModPoly& h, std::int64_t p) {
  if (h.empty()) throw Error(Errc::ZeroPolynomialModP, "zero polynomial");
  if (h[0] == 0) throw Error(Errc::ZeroRoot, "h(0) = 0");
  FpField fp(p);
  PolyRing<FpField> ring(fp);
  ModPoly m = ring.monic(h);
  const int e = PolyRing<FpField>::deg(m);
  if (e == 0) throw Error(Errc::BadParameters, "constant polynomial has no roots");
  Int order = ipow(Int(static_cast<long>(p)), static_cast<unsigned long>(e)) - 1;
  const ModPoly one = ring.one();
  for (auto& [q, mult] : factor_prime_power_minus_one(p, e)) {
    for (int i = 0; i < mult; ++i) {
      Int cand = exact_div(order, q);
      if (ring.powmod(ring.x(), cand, m) != ring.rem(one, m)) break;
      order = cand;
    }
  }
  return order;
}

}  // namespace tapkit
