#pragma once

// Finite fields F_p and F_{p^E}, polynomials over them, and factorization
// (squarefree, distinct-degree, Cantor-Zassenhaus equal-degree).

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "tapkit/bigint.hpp"
#include "tapkit/error.hpp"
#include "tapkit/poly.hpp"

namespace tapkit {

// Polynomial over F_p, coefficients in [0, p) lowest degree first, trimmed.
using ModPoly = std::vector<std::int64_t>;

class FpField {
 public:
  using Elem = std::int64_t;

  explicit FpField(std::int64_t p);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return 1; }
  Int order() const { return Int(static_cast<long>(p_)); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const Int& n) const;
  Elem from_int(std::int64_t n) const { return ((n % p_) + p_) % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return a + b >= p_ ? a + b - p_ : a + b; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a - b + p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
                             static_cast<unsigned __int128>(p_));
  }
  Elem inv(Elem a) const;
  Elem pth_root(Elem a) const { return a; }
  Elem random(std::mt19937_64& rng) const {
    return static_cast<Elem>(rng() % static_cast<std::uint64_t>(p_));
  }

 private:
  std::int64_t p_;
};

// Arithmetic in F_p[x] / (f) for a field context F.
template <class F>
class PolyRing {
 public:
  using Elem = typename F::Elem;
  using P = std::vector<Elem>;

  explicit PolyRing(const F& field) : f_(field) {}
  const F& field() const { return f_; }

  void trim(P& a) const {
    while (!a.empty() && f_.is_zero(a.back())) a.pop_back();
  }
  static int deg(const P& a) { return static_cast<int>(a.size()) - 1; }
  P one() const { return P{f_.one()}; }
  P x() const { return P{f_.zero(), f_.one()}; }
  bool is_one(const P& a) const { return a.size() == 1 && a[0] == f_.one(); }

  P add(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f_.add(r[i], b[i]);
    trim(r);
    return r;
  }
  P sub(const P& a, const P& b) const {
    P r(std::max(a.size(), b.size()), f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f_.sub(r[i], b[i]);
    trim(r);
    return r;
  }
  P mul(const P& a, const P& b) const {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (f_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f_.add(r[i + j], f_.mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  P scale(const P& a, const Elem& s) const {
    P r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(f_.mul(c, s));
    trim(r);
    return r;
  }
  std::pair<P, P> divmod(const P& a, const P& b) const {
    if (b.empty()) throw Error(Errc::DivideByZero, "polynomial division by zero over a finite field");
    if (a.size() < b.size()) return {P{}, a};
    P r = a;
    const Elem inv = f_.inv(b.back());
    const std::size_t db = b.size() - 1;
    P q(a.size() - db, f_.zero());
    for (std::size_t k = a.size(); k-- > db;) {
      if (f_.is_zero(r[k])) continue;
      Elem c = f_.mul(r[k], inv);
      q[k - db] = c;
      for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = f_.sub(r[k - db + i], f_.mul(c, b[i]));
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
  }
  P rem(const P& a, const P& b) const { return divmod(a, b).second; }
  P quo(const P& a, const P& b) const { return divmod(a, b).first; }
  P monic(const P& a) const { return a.empty() ? a : scale(a, f_.inv(a.back())); }
  P gcd(P a, P b) const {
    while (!b.empty()) {
      P r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // (g, s) with s*a = g mod b.
  std::pair<P, P> half_ext_gcd(const P& a, const P& b) const {
    P r0 = a, r1 = b, s0 = one(), s1;
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      P s2 = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.empty()) return {r0, s0};
    Elem inv = f_.inv(r0.back());
    return {scale(r0, inv), scale(s0, inv)};
  }
  P derivative(const P& a) const {
    P r;
    for (std::size_t i = 1; i < a.size(); ++i) {
      Elem c = f_.zero();
      for (std::size_t k = 0; k < i % static_cast<std::size_t>(f_.characteristic()); ++k) c = f_.add(c, a[i]);
      r.push_back(c);
    }
    trim(r);
    return r;
  }
  P mulmod(const P& a, const P& b, const P& m) const { return rem(mul(a, b), m); }
  P powmod(P base, const Int& e, const P& m) const {
    P r = rem(one(), m);
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mulmod(r, r, m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m);
    }
    return r;
  }

  // Rabin's test for a monic polynomial.
  bool is_irreducible(const P& g) const;
  // Monic irreducible factors with multiplicities; the unit is returned
  // separately.
  std::vector<std::pair<P, int>> factor(const P& g, Elem* unit = nullptr) const;
  // All roots of a polynomial that splits into distinct linear factors.
  std::vector<Elem> roots_of_split(const P& g) const;

  std::vector<std::pair<P, int>> squarefree(const P& g) const;
  std::vector<std::pair<P, int>> distinct_degree(P g) const;
  std::vector<P> equal_degree(const P& g, int d, std::mt19937_64& rng) const;

 private:
  P random_poly(int below_deg, std::mt19937_64& rng) const {
    P r;
    for (int i = 0; i < below_deg; ++i) r.push_back(f_.random(rng));
    trim(r);
    return r;
  }
  const F& f_;
};

// F_{p^E} = F_p[y] / (Q) for a monic irreducible Q of degree E.
class FqField {
 public:
  using Elem = ModPoly;

  FqField(std::int64_t p, ModPoly modulus);
  // The lexicographically first monic irreducible of degree e over F_p.
  static FqField canonical(std::int64_t p, int e);

  std::int64_t characteristic() const { return base_.characteristic(); }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  Int order() const { return ipow(Int(static_cast<long>(base_.characteristic())), static_cast<unsigned long>(degree())); }
  const ModPoly& modulus() const { return modulus_; }
  const FpField& base() const { return base_; }

  Elem zero() const { return {}; }
  Elem one() const { return {1}; }
  Elem from_int(std::int64_t n) const {
    std::int64_t v = base_.from_int(n);
    return v == 0 ? Elem{} : Elem{v};
  }
  Elem from_base(std::int64_t v) const { return v == 0 ? Elem{} : Elem{v}; }
  bool is_zero(const Elem& a) const { return a.empty(); }
  Elem add(const Elem& a, const Elem& b) const { return ring().add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return ring().sub(a, b); }
  Elem neg(const Elem& a) const { return ring().sub({}, a); }
  Elem mul(const Elem& a, const Elem& b) const { return ring().mulmod(a, b, modulus_); }
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, const Int& e) const { return ring().powmod(a, e, modulus_); }
  Elem pth_root(const Elem& a) const;
  Elem random(std::mt19937_64& rng) const {
    Elem r;
    for (int i = 0; i < degree(); ++i) r.push_back(base_.random(rng));
    ring().trim(r);
    return r;
  }

 private:
  PolyRing<FpField> ring() const { return PolyRing<FpField>(base_); }
  FpField base_;
  ModPoly modulus_;
};

template <class F>
bool PolyRing<F>::is_irreducible(const P& g) const {
  const int n = deg(g);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Int q = f_.order();
  // x^(q^k) mod g for k = 1..n.
  std::vector<P> frob{rem(x(), g)};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, g));
  if (sub(frob[static_cast<std::size_t>(n)], rem(x(), g)) != P{}) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime(r)) continue;
    P h = sub(frob[static_cast<std::size_t>(n / r)], rem(x(), g));
    if (!is_one(gcd(g, h))) return false;
  }
  return true;
}

template <class F>
std::vector<std::pair<typename PolyRing<F>::P, int>> PolyRing<F>::squarefree(const P& g0) const {
  std::vector<std::pair<P, int>> out;
  P g = monic(g0);
  if (deg(g) <= 0) return out;
  P c = gcd(g, derivative(g));
  P w = quo(g, c);
  int i = 1;
  while (!is_one(w)) {
    P y = gcd(w, c);
    P fac = quo(w, y);
    if (deg(fac) > 0) out.emplace_back(fac, i);
    w = y;
    c = quo(c, y);
    ++i;
  }
  if (!is_one(c)) {
    const auto p = static_cast<std::size_t>(f_.characteristic());
    P root;
    for (std::size_t k = 0; k < c.size(); k += p) root.push_back(f_.pth_root(c[k]));
    trim(root);
    for (auto& [h, m] : squarefree(root)) out.emplace_back(h, m * static_cast<int>(p));
  }
  return out;
}

template <class F>
std::vector<std::pair<typename PolyRing<F>::P, int>> PolyRing<F>::distinct_degree(P g) const {
  std::vector<std::pair<P, int>> out;
  const Int q = f_.order();
  P h = rem(x(), g);
  for (int i = 1; 2 * i <= deg(g); ++i) {
    h = powmod(h, q, g);
    P d = gcd(g, sub(h, x()));
    if (!is_one(d)) {
      out.emplace_back(d, i);
      g = quo(g, d);
      h = rem(h, g);
    }
  }
  if (deg(g) > 0) out.emplace_back(monic(g), deg(g));
  return out;
}

template <class F>
std::vector<typename PolyRing<F>::P> PolyRing<F>::equal_degree(const P& g, int d, std::mt19937_64& rng) const {
  if (deg(g) == d) return {g};
  const Int q = f_.order();
  const bool odd = f_.characteristic() != 2;
  while (true) {
    P a = random_poly(deg(g), rng);
    if (deg(a) < 1) continue;
    P b;
    if (odd) {
      Int e = (ipow(q, static_cast<unsigned long>(d)) - 1) / 2;
      b = sub(powmod(a, e, g), one());
    } else {
      // Trace to F_2: sum of a^(2^i) for i < log2(q^d).
      const int k = f_.degree() * d;
      P term = rem(a, g);
      b = term;
      for (int i = 1; i < k; ++i) {
        term = mulmod(term, term, g);
        b = add(b, term);
      }
    }
    P h = gcd(g, b);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      auto left = equal_degree(h, d, rng);
      auto right = equal_degree(quo(g, h), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

template <class F>
std::vector<std::pair<typename PolyRing<F>::P, int>> PolyRing<F>::factor(const P& g, Elem* unit) const {
  if (g.empty()) throw Error(Errc::ZeroPolynomialModP, "factorization of the zero polynomial");
  if (unit) *unit = g.back();
  std::mt19937_64 rng(0x5eedULL);
  std::vector<std::pair<P, int>> out;
  for (auto& [sq, mult] : squarefree(g))
    for (auto& [part, d] : distinct_degree(sq))
      for (auto& h : equal_degree(part, d, rng)) out.emplace_back(monic(h), mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a < b;
  });
  return out;
}

template <class F>
std::vector<typename PolyRing<F>::Elem> PolyRing<F>::roots_of_split(const P& g) const {
  std::mt19937_64 rng(0x5eedULL);
  std::vector<Elem> out;
  for (auto& h : equal_degree(monic(g), 1, rng)) out.push_back(f_.neg(h[0]));
  return out;
}

// Reduction of an integer polynomial mod p.
ModPoly reduce_mod_p(const ZPoly& f, std::int64_t p);
ZPoly lift_mod_p(const ModPoly& f);

struct ModPFactorization {
  std::int64_t p = 0;
  std::int64_t unit = 0;
  std::vector<std::pair<ModPoly, int>> factors;
};

ModPFactorization factor_mod_p(const ZPoly& f, std::int64_t p);

// Multiplicative order of x in F_p[x]/(h), h irreducible of degree e.
Int ff_element_order(const ModPoly& h, std::int64_t p);

// Prime factorization (prime -> exponent) of a positive integer.
std::map<Int, int> factor_integer(const Int& n);
// Prime factorization of p^e - 1 through its cyclotomic factors.
std::map<Int, int> factor_prime_power_minus_one(std::int64_t p, int e);

}  // namespace tapkit
