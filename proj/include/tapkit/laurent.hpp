#pragma once

// Laurent polynomials t^shift * p(t) with p(0) != 0 (or p = 0).

#include <algorithm>
#include <utility>

#include "tapkit/poly.hpp"

namespace tapkit {

template <class T>
class Laurent {
 public:
  using value_type = T;

  Laurent() = default;
  explicit Laurent(const T& c) : p_(c) {}
  explicit Laurent(int c) : p_(T(c)) {}
  explicit Laurent(Poly<T> p, int shift = 0) : shift_(shift), p_(std::move(p)) { normalize(); }

  static Laurent monomial(const T& c, int k) { return Laurent(Poly<T>(c), k); }

  bool is_zero() const { return p_.is_zero(); }
  // Lowest and highest exponents present; 0 and -1 for the zero polynomial.
  int min_deg() const { return p_.is_zero() ? 0 : shift_; }
  int max_deg() const { return p_.is_zero() ? -1 : shift_ + p_.degree(); }
  int span() const { return p_.is_zero() ? -1 : p_.degree(); }
  // The ordinary polynomial t^(-min_deg) * f.
  const Poly<T>& poly() const { return p_; }
  T coeff(int k) const { return k < shift_ ? T(0) : p_.coeff(static_cast<std::size_t>(k - shift_)); }
  const T& lead() const { return p_.lead(); }
  const T& trail() const {
    if (p_.is_zero()) throw Error(Errc::ZeroPolynomial, "trailing coefficient of zero polynomial");
    return p_[0];
  }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int s = std::min(a.shift_, b.shift_);
    return Laurent(a.p_.shifted(a.shift_ - s) + b.p_.shifted(b.shift_ - s), s);
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    return Laurent(a.p_ * b.p_, a.shift_ + b.shift_);
  }
  Laurent operator-() const {
    Laurent r = *this;
    r.p_ = -r.p_;
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.p_ == b.p_ && (a.p_.is_zero() || a.shift_ == b.shift_);
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent scaled(const T& s) const { return Laurent(p_.scaled(s), shift_); }
  Laurent times_t(int k) const { return is_zero() ? *this : Laurent(p_, shift_ + k); }
  // f(1/t).
  Laurent inverted() const {
    if (is_zero()) return *this;
    return Laurent(p_.reversed(), -max_deg());
  }

  template <class U>
  U eval(const U& x) const {
    U v = p_.eval(x);
    if (shift_ >= 0) return v * power(x, static_cast<unsigned long>(shift_));
    return v / power(x, static_cast<unsigned long>(-shift_));
  }

 private:
  void normalize() {
    if (p_.is_zero()) {
      shift_ = 0;
      return;
    }
    std::size_t k = 0;
    while (detail::coeff_is_zero(p_[k])) ++k;
    if (k > 0) {
      std::vector<T> v(p_.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p_.coeffs().end());
      p_ = Poly<T>(std::move(v));
      shift_ += static_cast<int>(k);
    }
  }
  int shift_ = 0;
  Poly<T> p_;
};

template <class T>
bool is_zero(const Laurent<T>& f) {
  return f.is_zero();
}

// Exact quotient in the Laurent ring over an integral domain.
template <class T>
Laurent<T> exact_div(const Laurent<T>& a, const Laurent<T>& b) {
  if (b.is_zero()) throw Error(Errc::DivideByZero, "Laurent division by zero");
  if (a.is_zero()) return a;
  return Laurent<T>(divexact(a.poly(), b.poly()), a.min_deg() - b.min_deg());
}

using ZLaurent = Laurent<Int>;
using QLaurent = Laurent<Rat>;

}  // namespace tapkit
