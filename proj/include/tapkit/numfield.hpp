#pragma once

// Exact arithmetic in Q(a) = Q[x] / (m) for a monic irreducible integer m.

#include <memory>
#include <string>
#include <vector>

#include "tapkit/matrix.hpp"
#include "tapkit/mp.hpp"
#include "tapkit/poly.hpp"

namespace tapkit {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
 public:
  // Validates m (monic, squarefree, irreducible over Q).
  static FieldPtr make(const ZPoly& min_poly);

  const ZPoly& min_poly() const { return min_poly_; }
  int degree() const { return min_poly_.degree(); }
  const Int& discriminant() const { return disc_; }
  bool same_as(const NumberField& o) const { return this == &o || min_poly_ == o.min_poly_; }

 private:
  NumberField(ZPoly m, Int disc) : min_poly_(std::move(m)), disc_(std::move(disc)) {}
  ZPoly min_poly_;
  Int disc_;
};

// Element c_0 + c_1 a + ... + c_{d-1} a^{d-1}.  An element without a field is
// a rational scalar that adopts the field of whatever it is combined with;
// generic code relies on this for T(0) and T(1).
class NFElem {
 public:
  NFElem() : c_{Rat(0)} {}
  explicit NFElem(int v) : c_{Rat(v)} {}
  explicit NFElem(const Int& v) : c_{Rat(v)} {}
  explicit NFElem(const Rat& v) : c_{v} {}
  NFElem(const Rat& v, FieldPtr field);
  // Reduces coordinate vectors of any length modulo the minimal polynomial.
  NFElem(FieldPtr field, std::vector<Rat> coords);
  static NFElem generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  int degree() const;
  const std::vector<Rat>& coords() const { return c_; }
  Rat coord(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;
  QPoly as_poly() const;
  NFElem inverse() const;
  NFElem with_field(const FieldPtr& f) const;

  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  NFElem operator-() const;
  NFElem& operator+=(const NFElem& b) { return *this = *this + b; }
  NFElem& operator-=(const NFElem& b) { return *this = *this - b; }
  NFElem& operator*=(const NFElem& b) { return *this = *this * b; }
  friend bool operator==(const NFElem& a, const NFElem& b);
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  // Polynomial notation in the given variable, e.g. "a^2 + 4".
  std::string to_string(const std::string& var = "a") const;

 private:
  FieldPtr field_;
  std::vector<Rat> c_;
};

inline bool is_zero(const NFElem& x) { return x.is_zero(); }
inline NFElem exact_div(const NFElem& a, const NFElem& b) { return a / b; }

// Common field of two operands; throws FieldMismatch.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

// Field norm: product of all conjugates, as Res(m, X).  A rational x in a
// degree-d field has norm x^d.
Rat nf_norm(const NFElem& x);
Rat nf_trace(const NFElem& x);
// Characteristic polynomial of multiplication by x.
QPoly nf_charpoly(const NFElem& x);
// Matrix of multiplication by x on the basis 1, a, ..., a^{d-1} (columns are
// images of basis vectors).
RatMatrix nf_regular_rep(const NFElem& x);
// The d complex roots of m, sorted by real then imaginary part, each within
// 10^-digits.
std::vector<Complex> nf_embeddings(const NumberField& field, int digits);
// sigma(x) for the embedding sending a to root.
Complex nf_embed(const NFElem& x, const Complex& root);

using NFPoly = Poly<NFElem>;

}  // namespace tapkit
