#pragma once

// Resultants over an integral domain by the subresultant remainder sequence.

#include <utility>

#include "tapkit/matrix.hpp"
#include "tapkit/poly.hpp"

namespace tapkit {

namespace detail {
template <class T>
Poly<T> divide_coeffs(const Poly<T>& p, const T& c) {
  std::vector<T> v;
  v.reserve(p.size());
  for (const auto& x : p.coeffs()) v.push_back(exact_div(x, c));
  return Poly<T>(std::move(v));
}
}  // namespace detail

// Res(A, B) = lc(A)^deg B * prod over roots a of A of B(a).
template <class T>
T resultant(Poly<T> a, Poly<T> b) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant of the zero polynomial");
  T s(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) return s * power(b.lead(), static_cast<unsigned long>(a.degree()));
  T g(1), h(1);
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    Poly<T> r = prem(a, b);
    a = std::move(b);
    if (r.is_zero()) return T(0);
    b = detail::divide_coeffs(r, T(g * power(h, static_cast<unsigned long>(delta))));
    g = a.lead();
    if (delta > 0)
      h = exact_div(T(power(g, static_cast<unsigned long>(delta))), T(power(h, static_cast<unsigned long>(delta - 1))));
  }
  const int da = a.degree();
  T last = exact_div(T(power(b.lead(), static_cast<unsigned long>(da))), T(power(h, static_cast<unsigned long>(da - 1))));
  return s * last;
}

// Sylvester-matrix resultant; slow, used as an independent check.
template <class T>
T resultant_sylvester(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant of the zero polynomial");
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return T(1);
  Matrix<T> s(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(i, i + k) = a.coeff(static_cast<std::size_t>(m - k));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = b.coeff(static_cast<std::size_t>(n - k));
  return det_bareiss(s);
}

}  // namespace tapkit
