#include "tapkit/zfactor.hpp"

#include <algorithm>

#include "tapkit/finite_field.hpp"

namespace tapkit {

namespace {

using Vec = std::vector<Int>;

// Polynomial arithmetic modulo an integer, coefficients kept in [0, m).
struct ModRing {
  Int m;

  Vec reduce(Vec a) const {
    for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    return a;
  }
  Vec add(const Vec& a, const Vec& b) const {
    Vec r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return reduce(std::move(r));
  }
  Vec sub(const Vec& a, const Vec& b) const {
    Vec r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(std::move(r));
  }
  Vec mul(const Vec& a, const Vec& b) const {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return reduce(std::move(r));
  }
  Vec scale(const Vec& a, const Int& s) const {
    Vec r = a;
    for (auto& c : r) c *= s;
    return reduce(std::move(r));
  }
  // Division by a monic polynomial.
  std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b) const {
    if (a.size() < b.size()) return {{}, a};
    Vec r = a;
    const std::size_t db = b.size() - 1;
    Vec q(a.size() - db, Int(0));
    for (std::size_t k = a.size(); k-- > db;) {
      Int c = r[k];
      mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
      q[k - db] = c;
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= c * b[i];
    }
    r.resize(db);
    return {reduce(std::move(q)), reduce(std::move(r))};
  }
  Int inv(const Int& a) const {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
      throw Error(Errc::InternalMismatch, "non-invertible leading coefficient in Hensel lifting");
    return r;
  }
};

Vec to_vec(const ZPoly& f) { return Vec(f.coeffs().begin(), f.coeffs().end()); }

Vec from_mod(const ModPoly& f) {
  Vec v;
  for (auto c : f) v.emplace_back(static_cast<long>(c));
  return v;
}

ZPoly symmetric(const Vec& a, const Int& m) {
  Int half = m / 2;
  Vec r = a;
  for (auto& c : r) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  return ZPoly(std::move(r));
}

struct Lifter {
  std::int64_t p;
  Int target;  // final modulus p^(2^j)

  // One quadratic Hensel step from modulus m to m^2.
  void step(const Vec& f, Vec& g, Vec& h, Vec& s, Vec& t, const Int& m) const {
    ModRing r{m * m};
    Vec e = r.sub(f, r.mul(g, h));
    auto [q, rem] = r.divmod(r.mul(s, e), h);
    Vec g2 = r.add(g, r.add(r.mul(t, e), r.mul(q, g)));
    Vec h2 = r.add(h, rem);
    Vec b = r.sub(r.add(r.mul(s, g2), r.mul(t, h2)), Vec{Int(1)});
    auto [c, d] = r.divmod(r.mul(s, b), h2);
    Vec s2 = r.sub(s, d);
    Vec t2 = r.sub(t, r.add(r.mul(t, b), r.mul(c, g2)));
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
  }

  // f = lc(f) * prod(facs) mod p; returns the monic lifts mod target.
  std::vector<Vec> lift(const Vec& f, const std::vector<ModPoly>& facs) const {
    ModRing final_ring{target};
    if (facs.size() == 1) return {final_ring.scale(f, final_ring.inv(f.back()))};
    FpField fp(p);
    PolyRing<FpField> ring(fp);
    const std::size_t half = facs.size() / 2;
    std::vector<ModPoly> left(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<ModPoly> right(facs.begin() + static_cast<std::ptrdiff_t>(half), facs.end());
    ModPoly gl = ring.one(), hr = ring.one();
    for (auto& u : left) gl = ring.mul(gl, u);
    for (auto& u : right) hr = ring.mul(hr, u);
    // s*gl + t*hr = 1 over F_p.
    auto [gcd, s0] = ring.half_ext_gcd(gl, hr);
    if (!ring.is_one(gcd)) throw Error(Errc::InternalMismatch, "Hensel factors not coprime");
    ModPoly t0 = ring.quo(ring.sub(ring.one(), ring.mul(s0, gl)), hr);
    // g carries the leading coefficient: g = lc * gl, s scaled accordingly.
    const std::int64_t lc = fp.from_int(f.back());
    Vec g = from_mod(ring.scale(gl, lc));
    Vec s = from_mod(ring.scale(s0, fp.inv(lc)));
    Vec h = from_mod(hr);
    Vec t = from_mod(t0);
    Int m(static_cast<long>(p));
    while (m < target) {
      step(f, g, h, s, t, m);
      m *= m;
    }
    auto a = lift(g, left);
    auto b = lift(h, right);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
};

// Exact division over Z, if possible.
bool divides(const ZPoly& g, const ZPoly& f, ZPoly* quotient) {
  auto [q, r] = divmod(to_q(f), to_q(g));
  if (!r.is_zero()) return false;
  for (const auto& c : q.coeffs())
    if (c.get_den() != 1) return false;
  if (quotient) *quotient = to_z(q);
  return true;
}

Int norm2_ceil(const ZPoly& f) {
  Int s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  // Choose among a few good primes the one giving the fewest modular factors.
  std::int64_t best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (std::int64_t p = 3; good < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(f.lead().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    FpField fp(p);
    PolyRing<FpField> ring(fp);
    ModPoly g = reduce_mod_p(f, p);
    if (!ring.is_one(ring.gcd(g, ring.derivative(g)))) continue;
    ++good;
    auto fac = ring.factor(g);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best.clear();
      for (auto& [h, m] : fac) best.push_back(h);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw Error(Errc::InternalMismatch, "no good prime found");
  if (best.size() == 1) return {f};

  const Int bound = Int(2) * abs(f.lead()) * ipow(Int(2), static_cast<unsigned long>(n)) * norm2_ceil(f);
  Int target(static_cast<long>(best_p));
  while (target <= bound) target *= target;
  Lifter lifter{best_p, target};
  std::vector<Vec> lifted = lifter.lift(to_vec(f), best);

  std::vector<ZPoly> out;
  ZPoly rest = f;
  ModRing ring{target};
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      Vec g{Int(rest.lead())};
      for (auto i : idx) g = ring.mul(g, lifted[i]);
      ZPoly cand = primitive_part(symmetric(g, target));
      ZPoly q;
      if (cand.degree() > 0 && divides(cand, rest, &q)) {
        out.push_back(cand);
        rest = q;
        for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[k]));
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(primitive_part(rest));
  return out;
}

}  // namespace

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

ZPoly IntegerFactorization::product() const {
  ZPoly r(content);
  for (const auto& [g, m] : factors) r = r * power(g, static_cast<unsigned long>(m));
  return r;
}

IntegerFactorization factor_over_z(const ZPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "factorization of the zero polynomial");
  if (f.degree() > kMaxFactorDegree)
    throw Error(Errc::DegreeCapExceeded, "degree " + std::to_string(f.degree()) + " exceeds 32");
  IntegerFactorization out;
  out.content = content(f);
  if (sgn(f.lead()) < 0) out.content = -out.content;
  if (f.degree() == 0) return out;
  ZPoly prim = primitive_part(f);
  auto parts = squarefree_decomposition(to_q(prim));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    for (auto& g : factor_squarefree(primitive_integer(parts[i])))
      out.factors.emplace_back(g, static_cast<int>(i + 1));
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return zpoly_less(a.first, b.first); });
  if (out.product() != f) throw Error(Errc::InternalMismatch, "factorization does not multiply back");
  return out;
}

}  // namespace tapkit
