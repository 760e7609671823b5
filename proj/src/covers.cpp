#include "tapkit/covers.hpp"

#include <cmath>

#include "tapkit/measures.hpp"
#include "tapkit/parallel.hpp"

namespace tapkit {

IntMatrix cyclic_shift_matrix(int n) {
  if (n < 1) throw Error(Errc::BadParameters, "cover degree must be positive");
  const auto sn = static_cast<std::size_t>(n);
  IntMatrix t(sn, sn);
  for (std::size_t i = 0; i < sn; ++i) t(i, (i + 1) % sn) = 1;
  return t;
}

IntMatrix expand_to_integer(const LMatrix& m, int n, const FieldPtr& field) {
  if (n < 1) throw Error(Errc::BadParameters, "cover degree must be positive");
  const std::size_t d = field ? static_cast<std::size_t>(field->degree()) : 1;
  const auto sn = static_cast<std::size_t>(n);
  const std::size_t b = d * sn;
  IntMatrix out(m.rows() * b, m.cols() * b);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LPoly& e = m(i, j);
      if (e.is_zero()) continue;
      for (int k = e.min_deg(); k <= e.max_deg(); ++k) {
        const NFElem c = e.coeff(k);
        if (c.is_zero()) continue;
        if (!c.is_integral()) throw Error(Errc::NonIntegralEntry, "coefficient " + c.to_string("a") + " is not in Z[a]");
        RatMatrix r = field ? nf_regular_rep(c.with_field(field)) : RatMatrix(1, 1, c.coord(0));
        // T^k sends slot s to slot s + k mod n.
        const std::size_t shift = static_cast<std::size_t>(((k % n) + n) % n);
        for (std::size_t s = 0; s < sn; ++s) {
          const std::size_t s2 = (s + shift) % sn;
          for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
              out(i * b + s * d + x, j * b + s2 * d + y) += r(x, y).get_num();
        }
      }
    }
  }
  return out;
}

Int SmithForm::torsion() const {
  Int t = 1;
  for (const auto& d : divisors) t *= d;
  return t;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i -= q row_j
void row_sub(IntMatrix& a, std::size_t i, std::size_t j, const Int& q) {
  if (sgn(q) == 0) return;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (sgn(a(j, c)) != 0) a(i, c) -= q * a(j, c);
}

// col_i -= q col_j
void col_sub(IntMatrix& a, std::size_t i, std::size_t j, const Int& q) {
  if (sgn(q) == 0) return;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (sgn(a(r, j)) != 0) a(r, i) -= q * a(r, j);
}

int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

Int floor_quotient(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_form(IntMatrix a) {
  SmithForm out;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  while (r < rows && r < cols) {
    // Smallest nonzero entry of the trailing block as pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (sgn(a(i, j)) != 0 && (pi == rows || cmpabs(a(i, j), a(pi, pj)) < 0)) pi = i, pj = j;
    if (pi == rows) break;
    swap_rows(a, r, pi);
    swap_cols(a, r, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(a(i, r)) == 0) continue;
        row_sub(a, i, r, floor_quotient(a(i, r), a(r, r)));
        if (sgn(a(i, r)) != 0) clean = false;
      }
      for (std::size_t j = r + 1; j < cols; ++j) {
        if (sgn(a(r, j)) == 0) continue;
        col_sub(a, j, r, floor_quotient(a(r, j), a(r, r)));
        if (sgn(a(r, j)) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = r, bj = r;
        for (std::size_t i = r + 1; i < rows; ++i)
          if (sgn(a(i, r)) != 0 && cmpabs(a(i, r), a(bi, bj)) < 0) bi = i, bj = r;
        for (std::size_t j = r + 1; j < cols; ++j)
          if (sgn(a(r, j)) != 0 && cmpabs(a(r, j), a(bi, bj)) < 0) bi = r, bj = j;
        swap_rows(a, r, bi);
        swap_cols(a, r, bj);
        continue;
      }
      // Divisibility: fold in a row holding an entry the pivot does not divide.
      std::size_t bad = rows;
      for (std::size_t i = r + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = r + 1; j < cols; ++j)
          if (sgn(a(i, j)) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(r, r).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_sub(a, r, bad, Int(-1));
    }
    out.divisors.push_back(abs(a(r, r)));
    ++r;
  }
  out.rank = r;
  return out;
}

LeftKernel left_kernel(const IntMatrix& a) {
  const std::size_t m = a.rows(), c = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(m);  // u^-1
  std::size_t r = 0;
  for (std::size_t col = 0; col < c && r < m; ++col) {
    while (true) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (sgn(h(i, col)) != 0 && (piv == m || cmpabs(h(i, col), h(piv, col)) < 0)) piv = i;
      if (piv == m) break;
      swap_rows(h, r, piv);
      swap_rows(u, r, piv);
      swap_cols(v, r, piv);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h(i, col)) == 0) continue;
        Int q = floor_quotient(h(i, col), h(r, col));
        row_sub(h, i, r, q);
        row_sub(u, i, r, q);
        col_sub(v, r, i, -q);
        if (sgn(h(i, col)) != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  LeftKernel out;
  std::vector<std::size_t> krows, all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  for (std::size_t i = r; i < m; ++i) krows.push_back(i);
  out.basis = u.submatrix(krows, all);
  out.u = std::move(u);
  out.u_inv = std::move(v);
  return out;
}

CoverHomology torsion_of_cover(const Presentation& pres, const Rep& rho, const AbelianMap& alpha, int n) {
  if (!rho.integral()) throw Error(Errc::RepNotIntegral, "representation has entries outside Z[a]");
  if (rho.n_gens() != pres.n_gens()) throw Error(Errc::RepMismatch, "representation and presentation disagree on generators");
  RepCheck chk = check_rep(pres, rho);
  if (!chk.ok) throw Error(Errc::RepMismatch, "representation violates relator " + std::to_string(chk.relator));
  const FieldPtr& field = rho.field();
  const std::size_t nn = rho.dim();
  LMatrix b(static_cast<std::size_t>(pres.n_gens()) * nn, nn);
  for (int j = 0; j < pres.n_gens(); ++j) b.set_block(static_cast<std::size_t>(j) * nn, 0, generator_block(rho, alpha, j));
  IntMatrix d1 = expand_to_integer(b, n, field);
  IntMatrix d2 = expand_to_integer(alexander_matrix(pres, rho, alpha), n, field);
  if (d2.rows() > 0 && !(d2 * d1 == IntMatrix(d2.rows(), d1.cols())))
    throw Error(Errc::InternalMismatch, "boundary maps do not compose to zero");
  LeftKernel ker = left_kernel(d1);
  const std::size_t k = ker.basis.rows();
  const std::size_t m = d1.rows();
  CoverHomology out;
  out.n = n;
  if (d2.rows() == 0) {
    out.betti = static_cast<long>(k);
    return out;
  }
  // Coordinates of the relator rows in the basis u: d2 = y u.
  IntMatrix y = d2 * ker.u_inv;
  std::vector<std::size_t> rows(y.rows()), kcols;
  for (std::size_t i = 0; i < y.rows(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < m; ++j) {
    if (j < m - k) {
      for (std::size_t i = 0; i < y.rows(); ++i)
        if (sgn(y(i, j)) != 0) throw Error(Errc::InternalMismatch, "relator row outside the cycle lattice");
    } else {
      kcols.push_back(j);
    }
  }
  SmithForm s = smith_form(y.submatrix(rows, kcols));
  out.betti = static_cast<long>(k) - static_cast<long>(s.rank);
  out.torsion = s.torsion();
  return out;
}

ZLaurent norm_of_twisted_alexander(const Presentation& pres, const Rep& rho, const AbelianMap& alpha) {
  return norm_primitive(twisted_alexander(pres, rho, alpha, 1).poly);
}

ZPoly psi_n(const CyclotomicSplit& split, int n) {
  ZPoly psi(Int(1));
  for (const auto& [m, mult] : split.factors)
    if (n % m == 0) psi = psi * cyclotomic(m);
  return psi;
}

Int r_n(const ZLaurent& norm_poly, const ZPoly& psi, int n) {
  std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
  c[0] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  ZPoly q = divexact(ZPoly(std::move(c)), psi);
  return resultant(norm_poly.poly(), q);
}

namespace {

Rat p_norm(const Int& x, long p) {
  if (sgn(x) == 0) return Rat(0);
  return Rat(Int(1), ipow(Int(p), static_cast<unsigned long>(valuation(x, Int(p)))));
}

double log_abs(const Int& x) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

GrowthReport growth_report(const Presentation& pres, const Rep& rho, const AbelianMap& alpha,
                           const GrowthOptions& opts) {
  if (opts.n_max < 1) throw Error(Errc::BadParameters, "n_max must be at least 1");
  GrowthReport rep;
  rep.norm_poly = norm_of_twisted_alexander(pres, rho, alpha);
  rep.primes = opts.primes;
  rep.s_primes = opts.s_primes;
  const CyclotomicSplit split = strip_cyclotomic(rep.norm_poly);
  rep.mahler = mahler(to_qlaurent(rep.norm_poly), opts.digits).value.to_double();
  for (long p : opts.primes) rep.padic_mahler[p] = padic_mahler(rep.norm_poly, p);
  std::vector<CoverHomology> homs = parallel_map<CoverHomology>(
      static_cast<std::size_t>(opts.n_max), opts.jobs,
      [&](std::size_t i) { return torsion_of_cover(pres, rho, alpha, static_cast<int>(i) + 1); });
  for (int n = 1; n <= opts.n_max; ++n) {
    const CoverHomology& h = homs[static_cast<std::size_t>(n - 1)];
    GrowthRow row;
    row.n = n;
    row.betti = h.betti;
    row.torsion = h.torsion;
    row.psi = psi_n(split, n);
    row.r_n = r_n(rep.norm_poly, row.psi, n);
    Rat denom(abs(row.r_n));
    for (long p : opts.s_primes) denom *= p_norm(row.r_n, p);
    row.ratio = Rat(h.torsion) / denom;
    row.ratio.canonicalize();
    // pow avoids the log/exp round trip when the torsion fits a double.
    row.torsion_root = mpz_sizeinbase(h.torsion.get_mpz_t(), 2) < 1000 ? std::pow(h.torsion.get_d(), 1.0 / n)
                                                                         : std::exp(log_abs(h.torsion) / n);
    for (long p : opts.primes) {
      Rat pn = p_norm(h.torsion, p);
      row.torsion_p_norms[p] = pn;
      row.torsion_p_roots[p] = std::pow(pn.get_d(), 1.0 / n);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace tapkit
