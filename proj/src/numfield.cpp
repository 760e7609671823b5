#include "tapkit/numfield.hpp"

#include <sstream>

#include "tapkit/resultant.hpp"
#include "tapkit/roots.hpp"
#include "tapkit/zfactor.hpp"

namespace tapkit {

namespace {

std::string poly_text(const ZPoly& f) {
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Int& c = f[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Int a = abs(c);
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    if (a != 1 || i == 0) os << a;
    if (i > 0) os << (a != 1 ? "*" : "") << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

// Reduce a coordinate vector modulo the monic m of degree d.
void reduce_coords(std::vector<Rat>& r, const ZPoly& m) {
  const std::size_t d = static_cast<std::size_t>(m.degree());
  for (std::size_t k = r.size(); k-- > d;) {
    if (sgn(r[k]) == 0) continue;
    const Rat c = r[k];
    for (std::size_t i = 0; i < d; ++i) r[k - d + i] -= c * m[i];
    r[k] = 0;
  }
  r.resize(d, Rat(0));
}

}  // namespace

FieldPtr NumberField::make(const ZPoly& m) {
  if (m.degree() < 1) throw Error(Errc::NotMonic, "minimal polynomial must have positive degree");
  if (m.lead() != 1) throw Error(Errc::NotMonic, poly_text(m) + " is not monic");
  ZPoly g = gcd_z(m, m.derivative());
  if (g.degree() > 0) throw Error(Errc::NotSquarefree, poly_text(m) + " has repeated factor " + poly_text(g));
  IntegerFactorization fac = factor_over_z(m);
  if (fac.factors.size() != 1)
    throw Error(Errc::Reducible, poly_text(m) + " has factor " + poly_text(fac.factors.front().first));
  const int d = m.degree();
  Int res = resultant(m, m.derivative());
  Int disc = ((d * (d - 1) / 2) % 2 == 0) ? res : Int(-res);
  return FieldPtr(new NumberField(m, disc));
}

NFElem::NFElem(const Rat& v, FieldPtr field) : field_(std::move(field)) {
  c_.assign(static_cast<std::size_t>(field_ ? field_->degree() : 1), Rat(0));
  c_[0] = v;
}

NFElem::NFElem(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)), c_(std::move(coords)) {
  if (!field_) {
    if (c_.size() > 1) {
      for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) throw Error(Errc::FieldMismatch, "coordinates without a field");
    }
    c_.resize(1, Rat(0));
    return;
  }
  reduce_coords(c_, field_->min_poly());
}

NFElem NFElem::generator(FieldPtr field) {
  std::vector<Rat> c{Rat(0), Rat(1)};
  return NFElem(std::move(field), std::move(c));
}

int NFElem::degree() const { return field_ ? field_->degree() : 1; }

bool NFElem::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool NFElem::is_integral() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

QPoly NFElem::as_poly() const { return QPoly(c_); }

NFElem NFElem::with_field(const FieldPtr& f) const {
  if (field_ && f && !field_->same_as(*f)) throw Error(Errc::FieldMismatch, "element belongs to another field");
  if (field_ || !f) return *this;
  return NFElem(c_[0], f);
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (!a->same_as(*b)) throw Error(Errc::FieldMismatch, "operands belong to different number fields");
  return a;
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  FieldPtr f = common_field(a.field_, b.field_);
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return NFElem(f, std::move(c));
}

NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  FieldPtr f = common_field(a.field_, b.field_);
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const NFElem& s = a.c_.size() == 1 ? a : b;
    const NFElem& v = a.c_.size() == 1 ? b : a;
    std::vector<Rat> c = v.c_;
    for (auto& x : c) x *= s.c_[0];
    return NFElem(f, std::move(c));
  }
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return NFElem(f, std::move(c));
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw Error(Errc::DivideByZero, "inverse of zero in a number field");
  if (!field_ || is_rational()) return NFElem(field_, {Rat(1) / c_[0]});
  auto [g, s, t] = ext_gcd_field(as_poly(), to_q(field_->min_poly()));
  return NFElem(field_, s.coeffs());
}

NFElem operator/(const NFElem& a, const NFElem& b) {
  common_field(a.field_, b.field_);
  return a * b.inverse();
}

bool operator==(const NFElem& a, const NFElem& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  if (a.field_ && b.field_ && !a.field_->same_as(*b.field_)) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (a.coord(i) != b.coord(i)) return false;
  return true;
}

std::string NFElem::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rat& c = c_[k];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) os << (a != 1 ? "*" : "") << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return first ? "0" : os.str();
}

Rat nf_norm(const NFElem& x) {
  if (!x.field()) return x.coord(0);
  if (x.is_zero()) return Rat(0);
  return resultant(to_q(x.field()->min_poly()), x.as_poly());
}

Rat nf_trace(const NFElem& x) {
  RatMatrix m = nf_regular_rep(x);
  Rat t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

QPoly nf_charpoly(const NFElem& x) {
  // det(X*I - M_x) = Res_y(m(y), X - x(y)) since m is monic.
  const int d = x.degree();
  if (!x.field()) return QPoly(std::vector<Rat>{-x.coord(0), Rat(1)});
  using QQ = Poly<QPoly>;
  std::vector<QPoly> m;
  for (const auto& c : x.field()->min_poly().coeffs()) m.emplace_back(Rat(c));
  std::vector<QPoly> g;
  for (int i = 0; i < d; ++i) g.emplace_back(-x.coord(static_cast<std::size_t>(i)));
  g[0] = g[0] + QPoly::x();
  return resultant(QQ(std::move(m)), QQ(std::move(g)));
}

RatMatrix nf_regular_rep(const NFElem& x) {
  const int d = x.degree();
  RatMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    std::vector<Rat> e(static_cast<std::size_t>(d), Rat(0));
    e[static_cast<std::size_t>(j)] = 1;
    NFElem col = x * NFElem(x.field(), std::move(e));
    for (int i = 0; i < d; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col.coord(static_cast<std::size_t>(i));
  }
  return m;
}

std::vector<Complex> nf_embeddings(const NumberField& field, int digits) {
  if (digits < 10) throw Error(Errc::BadParameters, "embeddings need at least 10 digits");
  std::vector<Complex> out;
  for (auto& disc : isolate_roots(to_q(field.min_poly()), digits_to_bits(digits))) out.push_back(disc.center);
  return out;
}

Complex nf_embed(const NFElem& x, const Complex& root) { return eval_complex(x.as_poly(), root); }

}  // namespace tapkit
