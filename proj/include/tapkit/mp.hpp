#pragma once

// Owning MPFR values with per-value precision.  Results of binary operations
// take the larger operand precision, so a computation is carried out at the
// precision its inputs were created with and no global state is involved.

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "tapkit/bigint.hpp"

namespace tapkit {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long x, mpfr_prec_t prec) : Real(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(const Int& x, mpfr_prec_t prec) : Real(prec) { mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
  Real(const Rat& x, mpfr_prec_t prec) : Real(prec) { mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
  Real(double x, mpfr_prec_t prec) : Real(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(const Real& o) : Real(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  // Copy rounded to a different precision.
  Real with_prec(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  // Fixed-point decimal with the given number of fractional digits.
  std::string to_fixed(int digits) const;
  // Scientific notation with the given number of significant digits.
  std::string to_sci(int digits) const;

  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend Real abs(const Real& a) { return unary(a, mpfr_abs); }
  friend Real sqrt(const Real& a) { return unary(a, mpfr_sqrt); }
  friend Real log(const Real& a) { return unary(a, mpfr_log); }
  friend Real exp(const Real& a) { return unary(a, mpfr_exp); }
  friend Real sin(const Real& a) { return unary(a, mpfr_sin); }
  friend Real cos(const Real& a) { return unary(a, mpfr_cos); }
  friend Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }
  friend Real hypot(const Real& a, const Real& b) { return binary(a, b, mpfr_hypot); }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  // 2^e at the given precision.
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(1L, prec);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

 private:
  template <class F>
  static Real binary(const Real& a, const Real& b, F f) {
    Real r(std::max(a.prec(), b.prec()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <class F>
  static Real unary(const Real& a, F f) {
    Real r(a.prec());
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  Complex with_prec(mpfr_prec_t p) const { return {re.with_prec(p), im.with_prec(p)}; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }
  friend Real abs(const Complex& z) { return hypot(z.re, z.im); }
};

}  // namespace tapkit
