#include "tapkit/roots.hpp"

#include <algorithm>
#include <cmath>

namespace tapkit {

namespace {

constexpr long kMaxBits = 4096;

struct Coeffs {
  std::vector<Real> c;      // coefficients of f
  std::vector<Real> d;      // coefficients of f'
  std::vector<Real> abs_c;  // |coefficients|, for rounding bounds
};

Coeffs make_coeffs(const QPoly& f, mpfr_prec_t prec) {
  Coeffs k;
  for (const auto& a : f.coeffs()) {
    k.c.emplace_back(a, prec);
    k.abs_c.push_back(abs(k.c.back()));
  }
  for (std::size_t i = 1; i < f.size(); ++i) k.d.emplace_back(Rat(f[i] * static_cast<long>(i)), prec);
  return k;
}

Complex horner(const std::vector<Real>& c, const Complex& z) {
  mpfr_prec_t prec = z.prec();
  Complex r(prec);
  for (std::size_t i = c.size(); i-- > 0;) {
    r = r * z;
    r.re += c[i];
  }
  return r;
}

Real horner_abs(const std::vector<Real>& c, const Real& x) {
  Real r(x.prec());
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

// One Aberth sweep; returns the largest correction relative to max(1, |z|).
Real aberth_sweep(const Coeffs& k, std::vector<Complex>& z) {
  const mpfr_prec_t prec = z.front().prec();
  Real worst(prec);
  Real one(1L, prec);
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex fz = horner(k.c, z[i]);
    if (fz.re.is_zero() && fz.im.is_zero()) continue;
    Complex dz = horner(k.d, z[i]);
    Complex ratio = fz / dz;
    Complex sum(prec);
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      Complex diff = z[i] - z[j];
      if (diff.re.is_zero() && diff.im.is_zero()) continue;
      sum = sum + Complex(one, Real(prec)) / diff;
    }
    Complex denom = Complex(one, Real(prec)) - ratio * sum;
    Complex step = (denom.re.is_zero() && denom.im.is_zero()) ? ratio : ratio / denom;
    z[i] = z[i] - step;
    Real rel = abs(step) / max(one, abs(z[i]));
    if (rel > worst) worst = rel;
  }
  return worst;
}

std::vector<Complex> initial_points(const QPoly& f, mpfr_prec_t prec) {
  const int n = f.degree();
  const double lead = std::fabs(f.lead().get_d());
  double radius = 0.0;
  for (int i = 0; i < n; ++i) {
    double a = std::fabs(f[static_cast<std::size_t>(i)].get_d());
    if (a > 0) radius = std::max(radius, std::pow(a / lead, 1.0 / (n - i)));
  }
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1.0;
  std::vector<Complex> z;
  const double two_pi = 6.283185307179586;
  for (int i = 0; i < n; ++i) {
    double th = two_pi * i / n + 0.4;
    z.emplace_back(Real(radius * std::cos(th), prec), Real(radius * std::sin(th), prec));
  }
  return z;
}

struct Certificate {
  bool ok = false;
  std::vector<Real> radius;
};

Certificate certify(const Coeffs& k, const std::vector<Complex>& z, long accuracy_bits) {
  const std::size_t n = z.size();
  const mpfr_prec_t prec = z.front().prec();
  Certificate cert;
  Real unit = Real::pow2(-static_cast<long>(prec), prec);
  Real rounding = unit * Real(static_cast<long>(8 * n + 8), prec);
  Real lead = abs(k.c.back());
  Real target = Real::pow2(-accuracy_bits - 1, prec);
  for (std::size_t i = 0; i < n; ++i) {
    Real fz = abs(horner(k.c, z[i]));
    Real bound = rounding * horner_abs(k.abs_c, abs(z[i]));
    Real denom = lead;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = denom * abs(z[i] - z[j]);
    if (denom.is_zero()) return cert;
    Real r = Real(static_cast<long>(2 * n), prec) * (fz + bound) / denom;
    if (r >= target) return cert;
    cert.radius.push_back(r);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (abs(z[i] - z[j]) <= cert.radius[i] + cert.radius[j]) return cert;
  cert.ok = true;
  return cert;
}

}  // namespace

long digits_to_bits(int digits) { return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 1; }

Complex eval_complex(const QPoly& f, const Complex& z) {
  std::vector<Real> c;
  for (const auto& a : f.coeffs()) c.emplace_back(a, z.prec());
  return horner(c, z);
}

std::vector<RootDisc> isolate_roots(const QPoly& f, long accuracy_bits) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  const int n = f.degree();
  std::vector<RootDisc> out;
  if (n <= 0) return out;
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(accuracy_bits + 64 + 4 * n);
  if (n == 1) {
    Rat root = -f[0] / f[1];
    Real x(root, prec);
    Real r = abs(x) * Real::pow2(1 - static_cast<long>(prec), prec) + Real::pow2(-static_cast<long>(prec), prec);
    out.push_back({Complex(x, Real(prec)), r});
    return out;
  }
  std::vector<Complex> z = initial_points(f, prec);
  bool first = true;
  while (true) {
    if (prec > kMaxBits) throw Error(Errc::PrecisionNotReached, "root isolation exceeded 4096 bits");
    for (auto& w : z) w = w.with_prec(prec);
    Coeffs k = make_coeffs(f, prec);
    const int max_iter = first ? 60 * n + 200 : 40;
    Real tol = Real::pow2(-static_cast<long>(prec) + 8, prec);
    for (int it = 0; it < max_iter; ++it)
      if (aberth_sweep(k, z) <= tol) break;
    Certificate cert = certify(k, z, accuracy_bits);
    if (cert.ok) {
      // Real roots: a disc close to the axis with no neighbour within three
      // radii holds a self-conjugate root.
      std::vector<bool> real(static_cast<std::size_t>(n), false);
      bool consistent = true;
      for (int i = 0; i < n; ++i) {
        const Real& ri = cert.radius[i];
        if (abs(z[i].im) > ri) continue;
        for (int j = 0; j < n; ++j)
          if (j != i && abs(z[i] - z[j]) <= Real(3L, prec) * ri + cert.radius[j]) consistent = false;
        real[i] = true;
      }
      std::vector<RootDisc> discs;
      std::vector<int> upper, lower;
      for (int i = 0; i < n; ++i) {
        if (real[i]) {
          discs.push_back({Complex(z[i].re, Real(prec)), Real(2L, prec) * cert.radius[i]});
        } else if (z[i].im.sign() > 0) {
          upper.push_back(i);
        } else {
          lower.push_back(i);
        }
      }
      if (consistent && upper.size() == lower.size()) {
        for (int i : upper) {
          discs.push_back({z[i], cert.radius[i]});
          discs.push_back({z[i].conj(), cert.radius[i]});
        }
        std::sort(discs.begin(), discs.end(), [](const RootDisc& a, const RootDisc& b) {
          if (a.center.re < b.center.re) return true;
          if (b.center.re < a.center.re) return false;
          return a.center.im < b.center.im;
        });
        return discs;
      }
    }
    first = false;
    prec *= 2;
  }
}

}  // namespace tapkit
