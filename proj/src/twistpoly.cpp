#include "tapkit/twistpoly.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>

namespace tapkit {

// ---- conversions ---------------------------------------------------------

LPoly to_lpoly(const ZLaurent& f, const FieldPtr& field) {
  std::vector<NFElem> c;
  for (const auto& x : f.poly().coeffs()) c.emplace_back(Rat(x), field);
  return LPoly(NFPoly(std::move(c)), f.min_deg());
}

LPoly to_lpoly(const QLaurent& f, const FieldPtr& field) {
  std::vector<NFElem> c;
  for (const auto& x : f.poly().coeffs()) c.emplace_back(x, field);
  return LPoly(NFPoly(std::move(c)), f.min_deg());
}

QLaurent to_qlaurent(const LPoly& f) {
  std::vector<Rat> c;
  for (const auto& x : f.poly().coeffs()) {
    if (!x.is_rational()) throw Error(Errc::NonIntegralEntry, "coefficient " + x.to_string() + " is not rational");
    c.push_back(x.coord(0));
  }
  return QLaurent(QPoly(std::move(c)), f.min_deg());
}

ZLaurent to_zlaurent(const QLaurent& f) { return ZLaurent(to_z(f.poly()), f.min_deg()); }

QLaurent to_qlaurent(const ZLaurent& f) { return QLaurent(to_q(f.poly()), f.min_deg()); }

FieldPtr field_of(const LPoly& f) {
  for (const auto& c : f.poly().coeffs())
    if (c.field()) return c.field();
  return nullptr;
}

namespace {

FieldPtr field_of(const LMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (FieldPtr f = tapkit::field_of(m(i, j))) return f;
  return nullptr;
}

// Exact division over the field; throws InternalMismatch when inexact.
NFPoly field_divide(const NFPoly& a, const NFPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::InternalMismatch, "inexact polynomial division over the number field");
  return q;
}

LPoly laurent_divide(const LPoly& a, const LPoly& b) {
  if (a.is_zero()) return a;
  return LPoly(field_divide(a.poly(), b.poly()), a.min_deg() - b.min_deg());
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 1000000000L) return r;
  }
  return r;
}

}  // namespace

// ---- cyclic resultants ---------------------------------------------------

Int cyclic_resultant(const ZLaurent& f, int n) {
  if (n < 1) throw Error(Errc::BadParameters, "cyclic resultant needs n >= 1");
  if (f.is_zero()) return Int(0);
  const ZPoly& g = f.poly();
  // Unit from the monomial factor: (prod zeta)^k = ((-1)^(n+1))^k.
  const long k = f.min_deg();
  const bool flip = (n % 2 == 0) && (k % 2 != 0);
  Int r;
  if (g.degree() == 0) {
    r = ipow(g[0], static_cast<unsigned long>(n));
  } else {
    // Res(t^n - 1, g) = (-1)^(n deg g) Res(g, t^n - 1), and
    // Res(g, A) = lc(g)^(deg A - deg R) Res(g, R) for R = A mod g.
    QPoly gq = to_q(g);
    QPoly tn = QPoly::x();
    QPoly acc(Rat(1));
    unsigned long e = static_cast<unsigned long>(n);
    QPoly base = divmod(tn, gq).second;
    while (e > 0) {
      if (e & 1UL) acc = divmod(acc * base, gq).second;
      e >>= 1;
      if (e) base = divmod(base * base, gq).second;
    }
    QPoly rem = acc - QPoly(Rat(1));
    if (rem.is_zero()) return Int(0);
    Rat res = resultant(gq, rem) *
              power(Rat(g.lead()), static_cast<unsigned long>(n - rem.degree()));
    if ((static_cast<long>(n) * g.degree()) % 2 != 0) res = -res;
    if (res.get_den() != 1) throw Error(Errc::InternalMismatch, "non-integral cyclic resultant");
    r = res.get_num();
  }
  return flip ? Int(-r) : r;
}

// ---- cyclotomic polynomials ---------------------------------------------

int euler_phi(int m) {
  int r = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

namespace {
ZPoly cyclotomic_rec(int m, std::map<int, ZPoly>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  std::vector<Int> c(static_cast<std::size_t>(m) + 1, Int(0));
  c[0] = -1;
  c[static_cast<std::size_t>(m)] = 1;
  ZPoly r(std::move(c));
  for (int d = 1; d < m; ++d)
    if (m % d == 0) r = divexact(r, cyclotomic_rec(d, memo));
  memo.emplace(m, r);
  return r;
}
}  // namespace

ZPoly cyclotomic(int m) {
  if (m < 1) throw Error(Errc::BadParameters, "cyclotomic index must be positive");
  std::map<int, ZPoly> memo;
  return cyclotomic_rec(m, memo);
}

CyclotomicSplit strip_cyclotomic(const ZLaurent& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "strip_cyclotomic of zero");
  CyclotomicSplit out;
  ZPoly core = f.poly();
  const int deg = core.degree();
  std::map<int, ZPoly> memo;
  // phi(m) >= sqrt(m / 2), so m <= 2 deg^2 covers every phi(m) <= deg.
  const int bound = std::max(2, 2 * deg * deg);
  for (int m = 1; m <= bound && core.degree() > 0; ++m) {
    if (euler_phi(m) > core.degree()) continue;
    ZPoly phi = cyclotomic_rec(m, memo);
    int mult = 0;
    while (core.degree() >= phi.degree()) {
      auto [q, r] = divmod(to_q(core), to_q(phi));
      if (!r.is_zero()) break;
      core = to_z(q);
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(m, mult);
  }
  out.core = ZLaurent(core, f.min_deg());
  return out;
}

// ---- units ---------------------------------------------------------------

std::string_view unit_check_name(UnitCheck c) {
  switch (c) {
    case UnitCheck::Equal: return "Equal";
    case UnitCheck::Inconclusive: return "Inconclusive";
    case UnitCheck::Distinct: return "Distinct";
  }
  return "?";
}

namespace {

long torsion_exponent(int d) {
  long l = 1;
  for (int m = 1; m <= 4 * d * d + 10; ++m)
    if (d % euler_phi(m) == 0) l = std::lcm(l, static_cast<long>(m));
  return l;
}

std::vector<NFElem> compute_torsion(const FieldPtr& field) {
  const int d = field->degree();
  std::vector<NFElem> out;
  const long L = torsion_exponent(d);
  if (d == 1) return {NFElem(Rat(1), field), NFElem(Rat(-1), field)};
  // Coordinates c solve V c = s with |s_j| = 1, V_jk = sigma_j(a)^k, so
  // |c_k| <= sum_j |(V^-1)_kj|.
  std::vector<Complex> roots = nf_embeddings(*field, 20);
  using C = std::complex<long double>;
  const std::size_t n = static_cast<std::size_t>(d);
  std::vector<std::vector<C>> a(n, std::vector<C>(2 * n));
  for (std::size_t j = 0; j < n; ++j) {
    C r(roots[j].re.to_double(), roots[j].im.to_double());
    C p = 1;
    for (std::size_t k = 0; k < n; ++k, p *= r) a[j][k] = p;
    a[j][n + j] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    C inv = C(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      C f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<long> bound(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double s = 0;
    for (std::size_t j = 0; j < n; ++j) s += std::abs(a[k][n + j]);
    bound[k] = static_cast<long>(std::floor(s + 1e-6L));
  }
  std::vector<long> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = -bound[k];
  const NFElem one(Rat(1), field);
  while (true) {
    std::vector<Rat> coords;
    for (long v : c) coords.emplace_back(v);
    NFElem x(field, coords);
    if (!x.is_zero() && power(x, static_cast<unsigned long>(L)) == one) out.push_back(x);
    std::size_t k = 0;
    while (k < n && c[k] == bound[k]) {
      c[k] = -bound[k];
      ++k;
    }
    if (k == n) break;
    ++c[k];
  }
  return out;
}

}  // namespace

std::vector<NFElem> torsion_units(const FieldPtr& field) {
  if (!field) return {NFElem(1), NFElem(-1)};
  static std::mutex mu;
  static std::map<std::string, std::vector<std::vector<Rat>>> cache;
  std::string key;
  for (const auto& c : field->min_poly().coeffs()) key += c.get_str() + ",";
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      std::vector<NFElem> out;
      for (const auto& v : it->second) out.emplace_back(field, v);
      return out;
    }
  }
  std::vector<NFElem> units = compute_torsion(field);
  std::lock_guard<std::mutex> lock(mu);
  std::vector<std::vector<Rat>> coords;
  for (const auto& u : units) coords.push_back(u.coords());
  cache.emplace(key, std::move(coords));
  return units;
}

bool is_torsion_unit(const NFElem& x) {
  if (x.is_zero()) return false;
  const long L = torsion_exponent(x.degree());
  return power(x, static_cast<unsigned long>(L)) == NFElem(1);
}

bool is_algebraic_unit(const NFElem& x) {
  if (x.is_zero()) return false;
  QPoly cp = nf_charpoly(x);
  for (const auto& c : cp.coeffs())
    if (c.get_den() != 1) return false;
  Rat n = nf_norm(x);
  return n == 1 || n == -1;
}

ZLaurent canonical_form(const ZLaurent& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "canonical form of zero");
  ZPoly p = f.poly();
  if (sgn(p.lead()) < 0) p = -p;
  return ZLaurent(p, 0);
}

QLaurent canonical_form(const QLaurent& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "canonical form of zero");
  QPoly p = f.poly();
  if (sgn(p.lead()) < 0) p = -p;
  return QLaurent(p, 0);
}

LPoly canonical_form(const LPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "canonical form of zero");
  FieldPtr field = field_of(f);
  NFPoly best;
  std::vector<Rat> best_key;
  for (const auto& u : torsion_units(field)) {
    NFPoly cand = f.poly().scaled(u);
    std::vector<Rat> key = cand.lead().with_field(field).coords();
    if (best.is_zero() || key > best_key) {
      best = std::move(cand);
      best_key = std::move(key);
    }
  }
  return LPoly(best, 0);
}

UnitCheck unit_compare(const LPoly& f, const LPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero() ? UnitCheck::Equal : UnitCheck::Distinct;
  if (f.span() != g.span()) return UnitCheck::Distinct;
  NFElem c = f.lead() / g.lead();
  if (f.poly() != g.poly().scaled(c)) return UnitCheck::Distinct;
  if (is_torsion_unit(c)) return UnitCheck::Equal;
  if (is_algebraic_unit(c)) return UnitCheck::Inconclusive;
  return UnitCheck::Distinct;
}

bool unit_equal(const ZLaurent& f, const ZLaurent& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return canonical_form(f) == canonical_form(g);
}

bool scalar_equal(const LPoly& f, const LPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.span() != g.span()) return false;
  NFElem c = f.lead() / g.lead();
  return f.poly() == g.poly().scaled(c);
}

LPoly integral_representative(const LPoly& f) {
  if (f.is_zero()) return f;
  Int den = 1;
  for (const auto& c : f.poly().coeffs())
    for (const auto& x : c.coords()) den = lcm(den, Int(x.get_den()));
  Int g = 0;
  for (const auto& c : f.poly().coeffs())
    for (const auto& x : c.coords()) g = gcd(g, Int(x.get_num() * exact_div(den, Int(x.get_den()))));
  Rat scale(den, g);
  scale.canonicalize();
  return canonical_form(LPoly(f.poly().scaled(NFElem(scale)), 0));
}

UnitClass make_unit_class(const LPoly& f) {
  UnitClass u;
  u.poly = f.is_zero() ? f : canonical_form(f);
  FieldPtr field = field_of(f);
  if (field && field->degree() > 1) {
    u.ring = "Q(a)";
  } else {
    bool integral = true;
    for (const auto& c : u.poly.poly().coeffs()) integral = integral && c.is_integral();
    u.ring = integral ? "Z" : "Q";
  }
  return u;
}

// ---- determinants --------------------------------------------------------

LPoly det_laurent(const LMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(Errc::DimensionError, "determinant of a non-square matrix");
  if (n == 0) return LPoly(NFElem(1));
  FieldPtr field = field_of(m);
  int shift = 0;
  int bound = 0;
  Matrix<NFPoly> p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    int lo = 0, hi = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      lo = any ? std::min(lo, m(i, j).min_deg()) : m(i, j).min_deg();
      hi = any ? std::max(hi, m(i, j).max_deg()) : m(i, j).max_deg();
      any = true;
    }
    if (!any) return LPoly();
    shift += lo;
    bound += hi - lo;
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) p(i, j) = m(i, j).poly().shifted(static_cast<std::size_t>(m(i, j).min_deg() - lo));
  }
  // Values at t = 0, 1, ..., bound, then Newton interpolation.
  std::vector<NFElem> dd;
  for (int x = 0; x <= bound; ++x) {
    const NFElem xv(Rat(x), field);
    NFMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v(i, j) = p(i, j).eval(xv);
    dd.push_back(det_field(v).with_field(field));
  }
  for (int level = 1; level <= bound; ++level)
    for (int k = bound; k >= level; --k)
      dd[static_cast<std::size_t>(k)] =
          (dd[static_cast<std::size_t>(k)] - dd[static_cast<std::size_t>(k - 1)]) * NFElem(Rat(1, level));
  NFPoly r(dd[static_cast<std::size_t>(bound)]);
  for (int k = bound - 1; k >= 0; --k) {
    r = r * NFPoly(std::vector<NFElem>{NFElem(-k), NFElem(1)});
    r = r + NFPoly(dd[static_cast<std::size_t>(k)]);
  }
  return LPoly(r, shift);
}

LPoly det_laurent_bareiss(const LMatrix& m) { return det_bareiss(m); }

LPoly minor_gcd(const LMatrix& m, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > std::min(m.rows(), m.cols()))
    throw Error(Errc::DimensionError, "minor size out of range");
  const long count = binomial(static_cast<long>(m.rows()), k) * binomial(static_cast<long>(m.cols()), k);
  if (count > kMinorCap) throw Error(Errc::TooLarge, std::to_string(count) + " minors exceed the cap of 924");
  NFPoly g;
  auto rows = first_combination(static_cast<std::size_t>(k));
  do {
    auto cols = first_combination(static_cast<std::size_t>(k));
    do {
      LPoly d = det_laurent(m.submatrix(rows, cols));
      if (!d.is_zero()) g = g.is_zero() ? monic(d.poly()) : gcd_field(g, d.poly());
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  if (g.is_zero()) return LPoly();
  return canonical_form(LPoly(g, 0));
}

LPoly maximal_minor_gcd(const LMatrix& m0) {
  LMatrix m = m0.rows() >= m0.cols() ? m0 : m0.transpose();
  const std::size_t rows = m.rows(), cols = m.cols();
  // Row operations over Q(a)[t^+-1]; each row is first made polynomial.
  std::vector<std::vector<NFPoly>> a(rows, std::vector<NFPoly>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    int lo = 0;
    bool any = false;
    for (std::size_t j = 0; j < cols; ++j)
      if (!m(i, j).is_zero()) {
        lo = any ? std::min(lo, m(i, j).min_deg()) : m(i, j).min_deg();
        any = true;
      }
    for (std::size_t j = 0; j < cols; ++j)
      if (!m(i, j).is_zero()) a[i][j] = m(i, j).poly().shifted(static_cast<std::size_t>(m(i, j).min_deg() - lo));
  }
  NFPoly prod(NFElem(1));
  for (std::size_t c = 0; c < cols; ++c) {
    while (true) {
      std::size_t piv = rows;
      for (std::size_t r = c; r < rows; ++r)
        if (!a[r][c].is_zero() && (piv == rows || a[r][c].degree() < a[piv][c].degree())) piv = r;
      if (piv == rows) return LPoly();
      std::swap(a[c], a[piv]);
      bool done = true;
      for (std::size_t r = c + 1; r < rows; ++r) {
        if (a[r][c].is_zero()) continue;
        NFPoly q = divmod(a[r][c], a[c][c]).first;
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] - q * a[c][j];
        if (!a[r][c].is_zero()) done = false;
      }
      if (done) break;
    }
    prod = prod * a[c][c];
  }
  return canonical_form(LPoly(monic(prod), 0));
}

// ---- Wada and twisted Alexander -----------------------------------------

namespace {

void check_inputs(const Presentation& pres, const Rep& rho, const AbelianMap& alpha) {
  if (pres.deficiency() != 1)
    throw Error(Errc::DeficiencyError, "presentation has deficiency " + std::to_string(pres.deficiency()));
  if (rho.n_gens() != pres.n_gens()) throw Error(Errc::RepMismatch, "representation and presentation disagree on generators");
  alpha.validate(pres);
  RepCheck chk = check_rep(pres, rho);
  if (!chk.ok) throw Error(Errc::RepMismatch, "representation violates relator " + std::to_string(chk.relator));
}

LMatrix delete_block(const LMatrix& a, std::size_t j, std::size_t n) {
  std::vector<std::size_t> rows(a.rows()), cols;
  std::iota(rows.begin(), rows.end(), 0);
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (c / n != j) cols.push_back(c);
  return a.submatrix(rows, cols);
}

LMatrix stacked_blocks(const Rep& rho, const AbelianMap& alpha, int n_gens) {
  const std::size_t n = rho.dim();
  LMatrix b(static_cast<std::size_t>(n_gens) * n, n);
  for (int j = 0; j < n_gens; ++j) b.set_block(static_cast<std::size_t>(j) * n, 0, generator_block(rho, alpha, j));
  return b;
}

UnitCheck worst(UnitCheck a, UnitCheck b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

}  // namespace

WadaResult wada_invariant(const Presentation& pres, const Rep& rho, const AbelianMap& alpha) {
  check_inputs(pres, rho, alpha);
  const std::size_t n = rho.dim();
  LMatrix a = alexander_matrix(pres, rho, alpha);
  WadaResult out;
  for (int j = 0; j < pres.n_gens(); ++j) {
    LPoly den = det_laurent(generator_block(rho, alpha, j));
    if (den.is_zero()) continue;
    LPoly num = det_laurent(delete_block(a, static_cast<std::size_t>(j), n));
    NFPoly g = num.is_zero() ? monic(den.poly()) : gcd_field(num.poly(), den.poly());
    LPoly rnum = num.is_zero() ? num : LPoly(field_divide(num.poly(), g), num.min_deg() - den.min_deg());
    LPoly rden(field_divide(den.poly(), g), 0);
    // Make the reduced denominator monic.
    const NFElem lead = rden.lead();
    rnum = rnum.scaled(lead.inverse());
    rden = rden.scaled(lead.inverse());
    if (out.valid_columns.empty()) {
      out.column = j;
      out.numerator = num;
      out.denominator = den;
      out.reduced_num = rnum;
      out.reduced_den = rden;
      out.polynomial = rden.span() == 0;
      if (out.polynomial && !rnum.is_zero()) out.reduced = canonical_form(rnum);
    } else {
      out.columns_agree = worst(out.columns_agree, unit_compare(rnum * out.reduced_den, out.reduced_num * rden));
    }
    out.valid_columns.push_back(j);
  }
  if (out.valid_columns.empty())
    throw Error(Errc::AllColumnsDegenerate, "det(rho(x_j) t^e - I) vanishes for every generator");
  return out;
}

TwistedAlexander twisted_alexander(const Presentation& pres, const Rep& rho, const AbelianMap& alpha, int i) {
  if (i != 0 && i != 1) throw Error(Errc::BadParameters, "twisted Alexander index must be 0 or 1");
  check_inputs(pres, rho, alpha);
  const std::size_t n = rho.dim();
  const long n0 = binomial(static_cast<long>(n) * pres.n_gens(), static_cast<long>(n));
  LMatrix b = stacked_blocks(rho, alpha, pres.n_gens());
  LPoly delta0 = n0 <= kMinorCap ? minor_gcd(b, static_cast<int>(n)) : maximal_minor_gcd(b);
  TwistedAlexander out;
  out.index = i;
  if (i == 0) {
    if (delta0.is_zero()) throw Error(Errc::NonTorsion, "H_0 is not torsion");
    out.poly = integral_representative(delta0);
    return out;
  }
  LMatrix a = alexander_matrix(pres, rho, alpha);
  const std::size_t k = a.rows();
  const bool within_cap = binomial(static_cast<long>(a.cols()), static_cast<long>(k)) <= kMinorCap;
  std::optional<LPoly> via_wada;
  try {
    WadaResult w = wada_invariant(pres, rho, alpha);
    if (!delta0.is_zero())
      via_wada = laurent_divide(w.reduced_num * delta0, w.reduced_den);
  } catch (const Error& e) {
    if (e.code() != Errc::AllColumnsDegenerate) throw;
  }
  if (within_cap) {
    LPoly def = minor_gcd(a, static_cast<int>(k));
    if (def.is_zero()) throw Error(Errc::NonTorsion, "all maximal minors of the Alexander matrix vanish");
    if (via_wada) {
      if (!scalar_equal(def, *via_wada))
        throw Error(Errc::InternalMismatch, "minor gcd and W * Delta_0 disagree");
      out.definition_checked = true;
      out.poly = integral_representative(*via_wada);
    } else {
      out.poly = integral_representative(def);
    }
    return out;
  }
  if (!via_wada) throw Error(Errc::NonTorsion, "Wada invariant undefined and minors beyond the cap");
  out.poly = integral_representative(*via_wada);
  return out;
}

// ---- norms ----------------------------------------------------------------

QLaurent norm_polynomial(const LPoly& f) {
  if (f.is_zero()) return QLaurent();
  FieldPtr field = field_of(f);
  if (!field) return to_qlaurent(f);
  const int d = field->degree();
  // F(x, t) as a polynomial in x with coefficients in Q[t].
  std::vector<std::vector<Rat>> cols(static_cast<std::size_t>(d));
  const auto& cs = f.poly().coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    NFElem c = cs[k].with_field(field);
    for (int i = 0; i < d; ++i) {
      auto& v = cols[static_cast<std::size_t>(i)];
      v.resize(cs.size(), Rat(0));
      v[k] = c.coord(static_cast<std::size_t>(i));
    }
  }
  std::vector<QPoly> fx;
  for (auto& v : cols) fx.emplace_back(std::move(v));
  std::vector<QPoly> mx;
  for (const auto& c : field->min_poly().coeffs()) mx.emplace_back(Rat(c));
  QPoly r = resultant(Poly<QPoly>(std::move(mx)), Poly<QPoly>(std::move(fx)));
  return QLaurent(r, d * f.min_deg());
}

ZLaurent norm_primitive(const LPoly& f) {
  QLaurent n = norm_polynomial(f);
  if (n.is_zero()) throw Error(Errc::ZeroPolynomial, "norm of zero");
  return ZLaurent(primitive_integer(n.poly()), 0);
}

bool is_reciprocal(const ZLaurent& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "reciprocity of zero");
  return unit_equal(f.inverted(), f);
}

bool is_reciprocal(const LPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "reciprocity of zero");
  return unit_compare(f.inverted(), f) == UnitCheck::Equal;
}

// ---- Hillar classes -------------------------------------------------------

std::string_view hillar_kind_name(HillarResult::Kind k) {
  switch (k) {
    case HillarResult::Kind::SameClassCertified: return "SameClassCertified";
    case HillarResult::Kind::SequencesMatch: return "SequencesMatch";
    case HillarResult::Kind::Distinct: return "Distinct";
  }
  return "?";
}

HillarResult hillar_test(const ZLaurent& f, const ZLaurent& g, int depth) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroPolynomial, "Hillar test of zero");
  if (depth < 8) throw Error(Errc::BadParameters, "Hillar depth must be at least 8");
  HillarResult out;
  for (int n = 1; n <= depth; ++n) {
    Int a = abs(cyclic_resultant(f, n));
    Int b = abs(cyclic_resultant(g, n));
    if (sgn(a) != 0 && sgn(b) != 0 && a != b) {
      out.kind = HillarResult::Kind::Distinct;
      out.n = n;
      return out;
    }
  }
  out.n = depth;
  if (f.poly().degree() > kMaxFactorDegree) return out;
  IntegerFactorization fac = factor_over_z(f.poly());
  const std::size_t r = fac.factors.size();
  std::vector<int> take(r, 0);
  while (true) {
    ZPoly v(Int(1));
    ZPoly u(fac.content);
    for (std::size_t i = 0; i < r; ++i) {
      const auto& [h, e] = fac.factors[i];
      v = v * power(h, static_cast<unsigned long>(take[i]));
      u = u * power(h, static_cast<unsigned long>(e - take[i]));
    }
    if (unit_equal(ZLaurent(u * v.reversed()), g)) {
      out.kind = HillarResult::Kind::SameClassCertified;
      out.u = ZLaurent(u);
      out.v = ZLaurent(v);
      return out;
    }
    std::size_t i = 0;
    while (i < r && take[i] == fac.factors[i].second) take[i++] = 0;
    if (i == r) break;
    ++take[i];
  }
  return out;
}

}  // namespace tapkit
