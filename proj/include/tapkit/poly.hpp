#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Coefficients are stored lowest degree first and the vector never ends in a
// zero, so the zero polynomial is the empty vector and has degree -1.  The
// coefficient type T must provide +, -, *, unary -, ==, construction from
// int, and a free function is_zero(const T&).  Operations that divide
// (divmod, gcd_field, monic) additionally need operator/ and are only
// meaningful over a field; divexact and prem work over any integral domain
// that provides exact_div(const T&, const T&).

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "tapkit/bigint.hpp"
#include "tapkit/error.hpp"

namespace tapkit {

namespace detail {
// Member functions named is_zero hide the free overloads inside class scope.
template <class T>
bool coeff_is_zero(const T& v) {
  return is_zero(v);
}
}  // namespace detail

template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  explicit Poly(const T& c) {
    if (!detail::coeff_is_zero(c)) c_.push_back(c);
  }
  explicit Poly(int c) : Poly(T(c)) {}

  static Poly monomial(const T& c, std::size_t k) {
    if (detail::coeff_is_zero(c)) return Poly();
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const {
    if (c_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }

  void set(std::size_t i, const T& v) {
    if (i >= c_.size()) {
      if (is_zero_coeff(v)) return;
      c_.resize(i + 1, T(0));
    }
    c_[i] = v;
    trim();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_coeff(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const T& s) const {
    std::vector<T> r(c_.size(), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Poly(std::move(r));
  }

  // Multiplication by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<int>(i));
    return Poly(std::move(r));
  }

  // t^deg * f(1/t).
  Poly reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
  }

  template <class U>
  U eval(const U& x) const {
    if (c_.empty()) return U(0);
    U r = U(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * x + U(c_[i]);
    return r;
  }

 private:
  static bool is_zero_coeff(const T& v) { return detail::coeff_is_zero(v); }
  void trim() {
    while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.is_zero();
}

template <class T>
T power(const T& base, unsigned long e) {
  T result(1);
  T b = base;
  while (e > 0) {
    if (e & 1UL) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, without division.
template <class T>
Poly<T> prem(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  const T lb = b.lead();
  int steps = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    T lead = r[k];
    for (auto& x : r) x = x * lb;
    for (int i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - lead * b[i];
    --steps;
  }
  // Remaining multiplications keep the lc(b)^(delta+1) normalisation.
  Poly<T> rem(std::move(r));
  return steps > 0 ? rem.scaled(power(lb, static_cast<unsigned long>(steps))) : rem;
}

// Division in an integral domain where the quotient is known to be exact.
template <class T>
Poly<T> divexact(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(Errc::DivideByZero, "polynomial division by zero");
  if (a.is_zero()) return Poly<T>();
  if (a.degree() < b.degree()) throw Error(Errc::InternalMismatch, "inexact polynomial division");
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  std::vector<T> q(a.degree() - db + 1, T(0));
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(r[k])) continue;
    T c = exact_div(r[k], b.lead());
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - c * b[i];
  }
  for (const auto& x : r)
    if (!is_zero(x)) throw Error(Errc::InternalMismatch, "inexact polynomial division");
  return Poly<T>(std::move(q));
}

template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  return divexact(a, b);
}

// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw Error(Errc::DivideByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  const T inv = T(1) / b.lead();
  std::vector<T> q(a.degree() - db + 1, T(0));
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(r[k])) continue;
    T c = r[k] * inv;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] = r[k - db + i] - c * b[i];
  }
  r.resize(db);
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> monic(const Poly<T>& a) {
  if (a.is_zero()) return a;
  return a.scaled(T(1) / a.lead());
}

// Monic gcd over a field; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd_field(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Returns (g, s, t) with s*a + t*b = g monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> ext_gcd_field(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0(T(1)), s1, t0, t1(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1;
    Poly<T> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = T(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

using ZPoly = Poly<Int>;
using QPoly = Poly<Rat>;

Int content(const ZPoly& f);
// f / content(f) with positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);
// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
ZPoly gcd_z(const ZPoly& a, const ZPoly& b);
QPoly to_q(const ZPoly& f);
// Clears denominators and returns the primitive integer polynomial with
// positive leading coefficient proportional to f.
ZPoly primitive_integer(const QPoly& f);
// Exact conversion; throws NonIntegralEntry if a coefficient is fractional.
ZPoly to_z(const QPoly& f);
// Yun decomposition over Q: f = lc * prod factors[i]^(i+1), factors monic.
std::vector<QPoly> squarefree_decomposition(const QPoly& f);

}  // namespace tapkit
