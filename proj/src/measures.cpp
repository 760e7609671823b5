#include "tapkit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tapkit/parallel.hpp"
#include "tapkit/roots.hpp"
#include "tapkit/zfactor.hpp"

namespace tapkit {

// ---- Mahler measure ---------------------------------------------------------

double MahlerMeasure::log_value() const { return log(value).to_double(); }

double MahlerMeasure::log_error() const {
  // |log(v + e) - log v| <= e / (v - e) for e < v.
  Real denom = value - error;
  if (denom.sign() <= 0) return INFINITY;
  return (error / denom).to_double();
}

MahlerMeasure mahler(const QLaurent& f, int digits) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "Mahler measure of zero");
  if (digits < 10) throw Error(Errc::BadParameters, "digits must be at least 10");
  const QPoly& p = f.poly();
  const long bits = digits_to_bits(digits) + 16;
  const mpfr_prec_t prec = bits + 64;
  MahlerMeasure out{Real(Rat(abs(p.lead())), prec), Real(0L, prec)};
  Real log_err(0L, prec);
  const Real one(1L, prec);
  const std::vector<QPoly> parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const long mult = static_cast<long>(i) + 1;
    if (parts[i].degree() < 1) continue;
    for (const RootDisc& z : isolate_roots(parts[i], bits)) {
      const Real c = abs(z.center).with_prec(prec);
      const Real r = z.radius.with_prec(prec);
      const Real lo = c - r, hi = c + r;
      if (lo > one) {
        for (long k = 0; k < mult; ++k) out.value *= c;
        log_err += Real(mult, prec) * r / lo;
      } else if (hi >= one) {
        // Disc meets the unit circle: counted as modulus 1.
        out.roots_on_circle += static_cast<int>(mult);
        log_err += Real(mult, prec) * r;
      }
    }
  }
  out.error = out.value * (exp(log_err) - one);
  return out;
}

MahlerMeasure mahler(const ZLaurent& f, int digits) { return mahler(to_qlaurent(f), digits); }

// ---- p-adic -----------------------------------------------------------------

int NewtonPolygon::span() const { return vertices.empty() ? 0 : vertices.back().first - vertices.front().first; }

bool NewtonPolygon::roots_on_unit_circle() const {
  if (vertices.empty()) return false;
  if (vertices.front().second != 0 || vertices.back().second != 0) return false;
  return std::all_of(segments.begin(), segments.end(), [](const auto& s) { return sgn(s.first) == 0; });
}

namespace {

void require_prime(long p) {
  if (p < 2 || !is_prime(p)) throw Error(Errc::BadParameters, std::to_string(p) + " is not prime");
}

Rat p_power(long p, long e) {
  if (e >= 0) return Rat(ipow(Int(p), static_cast<unsigned long>(e)));
  return Rat(Int(1), ipow(Int(p), static_cast<unsigned long>(-e)));
}

}  // namespace

NewtonPolygon newton_polygon(const ZLaurent& f, long p) {
  require_prime(p);
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "Newton polygon of zero");
  NewtonPolygon np;
  np.p = p;
  const ZPoly& g = f.poly();
  std::vector<std::pair<int, long>> pts;
  for (int i = 0; i <= g.degree(); ++i)
    if (sgn(g[static_cast<std::size_t>(i)]) != 0) pts.emplace_back(i, valuation(g[static_cast<std::size_t>(i)], Int(p)));
  // Lower hull (monotone chain); cross product in exact integers.
  for (const auto& q : pts) {
    while (np.vertices.size() >= 2) {
      const auto& a = np.vertices[np.vertices.size() - 2];
      const auto& b = np.vertices.back();
      const long cross = static_cast<long>(b.first - a.first) * (q.second - a.second) -
                         (b.second - a.second) * static_cast<long>(q.first - a.first);
      if (cross > 0) break;
      np.vertices.pop_back();
    }
    np.vertices.push_back(q);
  }
  for (std::size_t i = 1; i < np.vertices.size(); ++i) {
    const auto& a = np.vertices[i - 1];
    const auto& b = np.vertices[i];
    Rat slope(b.second - a.second, b.first - a.first);
    slope.canonicalize();
    np.segments.emplace_back(slope, b.first - a.first);
  }
  return np;
}

Rat gauss_norm(const ZLaurent& f, long p) {
  require_prime(p);
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "Gauss norm of zero");
  long v = -1;
  for (const auto& c : f.poly().coeffs()) {
    if (sgn(c) == 0) continue;
    const long vc = valuation(c, Int(p));
    v = v < 0 ? vc : std::min(v, vc);
  }
  return p_power(p, -v);
}

Rat newton_mahler(const ZLaurent& f, long p) {
  NewtonPolygon np = newton_polygon(f, p);
  // A segment of slope s carries roots of valuation -s; |root|_p > 1 iff s > 0.
  Rat e(-valuation(f.poly().lead(), Int(p)));
  for (const auto& [s, len] : np.segments)
    if (sgn(s) > 0) e += s * len;
  if (e.get_den() != 1) throw Error(Errc::InternalMismatch, "non-integral Newton exponent");
  return p_power(p, e.get_num().get_si());
}

Rat padic_mahler(const ZLaurent& f, long p) {
  Rat a = gauss_norm(f, p);
  Rat b = newton_mahler(f, p);
  if (a != b) throw Error(Errc::InternalMismatch, "Gauss norm and Newton polygon disagree");
  return a;
}

// ---- Teichmuller data -------------------------------------------------------

std::vector<Int> TeichmullerData::orders() const {
  std::vector<Int> out;
  for (const auto& e : entries)
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.order);
  std::sort(out.begin(), out.end());
  return out;
}

TeichmullerData teichmuller_data(const ZLaurent& f, long p) {
  require_prime(p);
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "Teichmuller data of zero");
  const ZPoly& g = f.poly();
  if (reduce_mod_p(g, p).empty()) throw Error(Errc::ZeroPolynomialModP, "polynomial vanishes mod " + std::to_string(p));
  if (!newton_polygon(f, p).roots_on_unit_circle())
    throw Error(Errc::RootsNotUnits, "some root is not a " + std::to_string(p) + "-adic unit");
  ModPFactorization fac = factor_mod_p(g, p);
  TeichmullerData out;
  out.p = p;
  out.m = 1;
  for (const auto& [h, mult] : fac.factors) {
    if (mult > 1) throw Error(Errc::NotSquarefreeModP, "repeated factor mod " + std::to_string(p));
    TeichmullerEntry e;
    e.degree = static_cast<int>(h.size()) - 1;
    e.order = ff_element_order(h, p);
    e.multiplicity = e.degree;
    e.factor = h;
    out.m = lcm(out.m, e.order);
    out.entries.push_back(std::move(e));
  }
  return out;
}

int residue_extension_degree(const TeichmullerData& data) {
  long e = 1;
  for (const auto& x : data.entries) e = std::lcm(e, static_cast<long>(x.degree));
  if (e > kMaxResidueExtension)
    throw Error(Errc::ExtensionTooLarge, "residue field degree " + std::to_string(e) + " exceeds 24");
  return static_cast<int>(e);
}

std::vector<Int> residue_power_orbit(const TeichmullerData& data, const Int& u) {
  if (gcd(u, data.m) != 1) throw Error(Errc::BadParameters, "exponent must be prime to m");
  const int e = residue_extension_degree(data);
  const FqField fq = FqField::canonical(data.p, e);
  const PolyRing<FqField> ring(fq);
  Int uu = u % data.m;
  if (sgn(uu) < 0) uu += data.m;
  std::vector<Int> out;
  for (const auto& entry : data.entries) {
    PolyRing<FqField>::P h;
    for (auto c : entry.factor) h.push_back(fq.from_base(c));
    for (const auto& root : ring.roots_of_split(h)) {
      const ModPoly z = fq.pow(root, uu);
      Int code = 0;
      for (std::size_t i = z.size(); i-- > 0;) code = code * data.p + z[i];
      out.push_back(code);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- split-prime scan -------------------------------------------------------

std::vector<long> SplitScan::violations() const {
  std::vector<long> out;
  for (const auto& r : rows)
    if (!r.excluded && !r.splits) out.push_back(r.p);
  return out;
}

namespace {

Int poly_discriminant(const ZPoly& f) {
  const int n = f.degree();
  if (n < 1) return Int(1);
  Int r = exact_div(resultant(f, f.derivative()), f.lead());
  return (static_cast<long>(n) * (n - 1) / 2) % 2 ? Int(-r) : r;
}

}  // namespace

int galois_closure_degree(const ZPoly& f) {
  switch (f.degree()) {
    case 1: return 1;
    case 2: return 2;
    case 3: {
      Int disc = poly_discriminant(f);
      return (sgn(disc) > 0 && mpz_perfect_square_p(disc.get_mpz_t())) ? 3 : 6;
    }
    default:
      throw Error(Errc::GaloisDegreeUnknown, "Galois closure degree is only computed for degree <= 3");
  }
}

SplitScan split_scan(const ZPoly& f, std::optional<int> d, long p_max) {
  if (f.degree() < 1) throw Error(Errc::ReducibleInput, "constant polynomial");
  IntegerFactorization fac = factor_over_z(f);
  if (fac.factors.size() != 1 || fac.factors[0].second != 1 || abs(fac.content) != 1)
    throw Error(Errc::ReducibleInput, "input is not irreducible over Z");
  SplitScan out;
  out.d = d ? *d : galois_closure_degree(f);
  if (out.d < 1) throw Error(Errc::BadParameters, "d must be positive");
  const Int disc = poly_discriminant(f);
  for (long p = 2; p <= p_max; ++p) {
    if (!is_prime(p) || (p - 1) % out.d != 0) continue;
    SplitRow row;
    row.p = p;
    const Int pp(p);
    row.excluded = mpz_divisible_p(disc.get_mpz_t(), pp.get_mpz_t()) ||
                   mpz_divisible_p(f.lead().get_mpz_t(), pp.get_mpz_t()) ||
                   mpz_divisible_p(f[0].get_mpz_t(), pp.get_mpz_t());
    if (!row.excluded) {
      ModPFactorization mf = factor_mod_p(f, p);
      row.splits = std::all_of(mf.factors.begin(), mf.factors.end(),
                               [](const auto& x) { return x.first.size() == 2 && x.second == 1; });
    }
    out.rows.push_back(row);
  }
  return out;
}

// ---- volume trend -----------------------------------------------------------

namespace {

struct AtOne {
  int order = 0;
  NFElem value;  // leading Taylor coefficient ratio at t = 1
};

// f = (t - 1)^a g with g(1) != 0; returns (a, g(1)).
std::pair<int, NFElem> strip_at_one(NFPoly f) {
  int a = 0;
  const NFElem one(1);
  while (true) {
    NFElem v = f.eval(one);
    if (!v.is_zero()) return {a, v};
    f = divmod(f, NFPoly(std::vector<NFElem>{NFElem(-1), NFElem(1)})).first;
    ++a;
  }
}

AtOne wada_at_one(const Presentation& pres, const Rep& rho, const AbelianMap& alpha) {
  WadaResult w = wada_invariant(pres, rho, alpha);
  if (w.reduced_num.is_zero()) throw Error(Errc::DegenerateAtOne, "Wada invariant vanishes");
  auto [an, vn] = strip_at_one(w.reduced_num.poly());
  auto [ad, vd] = strip_at_one(w.reduced_den.poly());
  return {an - ad, vn / vd};
}

}  // namespace

VolumeTrend volume_trend(const Presentation& pres, const Rep& rho, const AbelianMap& alpha, int k_max,
                         int embedding_index, int digits, int jobs) {
  if (rho.dim() != 2) throw Error(Errc::DimensionError, "volume trend needs a 2-dimensional representation");
  if (k_max < 3) throw Error(Errc::BadParameters, "k_max must be at least 3");
  const FieldPtr& field = rho.field();
  const std::vector<Complex> roots = nf_embeddings(*field, digits);
  if (embedding_index < 0 || static_cast<std::size_t>(embedding_index) >= roots.size())
    throw Error(Errc::IndexOutOfRange, "embedding index out of range");
  const Complex& root = roots[static_cast<std::size_t>(embedding_index)];
  std::vector<AtOne> at = parallel_map<AtOne>(static_cast<std::size_t>(k_max - 1), jobs, [&](std::size_t i) {
    const int k = static_cast<int>(i) + 2;
    return wada_at_one(pres, sym_power(rho, k - 1), alpha);
  });
  VolumeTrend out;
  bool any = false;
  for (int k = 2; k <= k_max; ++k) {
    const AtOne& base = at[k % 2 ? 1 : 0];
    const AtOne& cur = at[static_cast<std::size_t>(k - 2)];
    VolumeRow row;
    row.k = k;
    row.order_at_one = cur.order;
    if (cur.order != base.order) {
      row.degenerate = true;
    } else {
      const Real a = abs(nf_embed(cur.value / base.value, root));
      row.abs_a = a.to_double();
      row.value = log(a).to_double() / (static_cast<double>(k) * k);
      any = true;
    }
    (k % 2 ? out.odd : out.even).push_back(row);
  }
  if (!any) throw Error(Errc::DegenerateAtOne, "every A_k(1) is degenerate");
  return out;
}

}  // namespace tapkit
