#include "tapkit/poly.hpp"

namespace tapkit {

Int content(const ZPoly& f) {
  Int g = 0;
  for (const auto& c : f.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) return f;
  Int c = content(f);
  if (sgn(f.lead()) < 0) c = -c;
  std::vector<Int> v;
  v.reserve(f.size());
  for (const auto& x : f.coeffs()) v.push_back(exact_div(x, c));
  return ZPoly(std::move(v));
}

ZPoly gcd_z(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  QPoly g = gcd_field(to_q(a), to_q(b));
  return primitive_integer(g);
}

QPoly to_q(const ZPoly& f) {
  std::vector<Rat> v(f.coeffs().begin(), f.coeffs().end());
  return QPoly(std::move(v));
}

ZPoly primitive_integer(const QPoly& f) {
  if (f.is_zero()) return ZPoly();
  Int den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, Int(c.get_den()));
  std::vector<Int> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.push_back(Int(c.get_num()) * exact_div(den, Int(c.get_den())));
  return primitive_part(ZPoly(std::move(v)));
}

ZPoly to_z(const QPoly& f) {
  std::vector<Int> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    if (c.get_den() != 1) throw Error(Errc::NonIntegralEntry, "coefficient " + c.get_str() + " is not an integer");
    v.push_back(Int(c.get_num()));
  }
  return ZPoly(std::move(v));
}

std::vector<QPoly> squarefree_decomposition(const QPoly& f) {
  std::vector<QPoly> out;
  if (f.degree() <= 0) return out;
  QPoly fm = monic(f);
  QPoly d = fm.derivative();
  QPoly a = gcd_field(fm, d);
  QPoly b = divmod(fm, a).first;
  QPoly c = divmod(d, a).first;
  QPoly e = c - b.derivative();
  while (b.degree() > 0) {
    QPoly g = gcd_field(b, e);
    out.push_back(g);
    QPoly nb = divmod(b, g).first;
    c = divmod(e, g).first;
    b = std::move(nb);
    e = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace tapkit
