#pragma once

// Laurent-polynomial invariants: resultants, cyclotomic factors, minor gcds,
// twisted Alexander polynomials, Wada invariants, norms and Hillar classes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tapkit/knotgroup.hpp"
#include "tapkit/laurent.hpp"
#include "tapkit/numfield.hpp"
#include "tapkit/resultant.hpp"
#include "tapkit/zfactor.hpp"

namespace tapkit {

// ---- conversions ---------------------------------------------------------

LPoly to_lpoly(const ZLaurent& f, const FieldPtr& field = nullptr);
LPoly to_lpoly(const QLaurent& f, const FieldPtr& field = nullptr);
// Exact conversion of a polynomial with rational coefficients.
QLaurent to_qlaurent(const LPoly& f);
ZLaurent to_zlaurent(const QLaurent& f);
QLaurent to_qlaurent(const ZLaurent& f);
// The field of the first coefficient that has one, or null.
FieldPtr field_of(const LPoly& f);

// ---- resultants ----------------------------------------------------------

// Resultant of the ordinary polynomials t^-min_deg f and t^-min_deg g.
template <class T>
T resultant(const Laurent<T>& f, const Laurent<T>& g) {
  return resultant(f.poly(), g.poly());
}

// prod over n-th roots of unity of f(zeta) = Res(t^n - 1, f) with the
// monomial part of a Laurent f contributing its exact unit.
Int cyclic_resultant(const ZLaurent& f, int n);

// ---- cyclotomic polynomials ---------------------------------------------

ZPoly cyclotomic(int m);
int euler_phi(int m);

struct CyclotomicSplit {
  ZLaurent core;
  std::vector<std::pair<int, int>> factors;  // (m, multiplicity), m ascending
};

CyclotomicSplit strip_cyclotomic(const ZLaurent& f);

// ---- units and canonical forms ------------------------------------------

enum class UnitCheck { Equal, Inconclusive, Distinct };
std::string_view unit_check_name(UnitCheck c);

// Roots of unity lying in Z[a] (always contains +1 and -1).
std::vector<NFElem> torsion_units(const FieldPtr& field);
bool is_torsion_unit(const NFElem& x);
// Integral (charpoly in Z[x]) with norm +-1.
bool is_algebraic_unit(const NFElem& x);

ZLaurent canonical_form(const ZLaurent& f);
QLaurent canonical_form(const QLaurent& f);
// Shift to min degree 0 and multiply by the torsion unit making the leading
// coefficient's coordinate vector lexicographically largest.
LPoly canonical_form(const LPoly& f);

// f = u t^k g with u a root of unity (Equal), a non-torsion unit of Z[a]
// (Inconclusive), or no unit at all (Distinct).
UnitCheck unit_compare(const LPoly& f, const LPoly& g);
bool unit_equal(const ZLaurent& f, const ZLaurent& g);
// f = c t^k g for some nonzero c in Q(a).
bool scalar_equal(const LPoly& f, const LPoly& g);

// Integral representative: denominators cleared, integer content removed,
// canonical form applied.
LPoly integral_representative(const LPoly& f);

struct UnitClass {
  LPoly poly;  // canonical form
  std::string ring;  // "Z", "Q" or "Q(a)"
};
UnitClass make_unit_class(const LPoly& f);

// ---- determinants and minors --------------------------------------------

// Determinant of a square matrix over Q(a)[t^+-1] by evaluation at integer
// points and exact interpolation.
LPoly det_laurent(const LMatrix& m);
// Fraction-free Bareiss over the Laurent ring; an independent check.
LPoly det_laurent_bareiss(const LMatrix& m);

inline constexpr long kMinorCap = 924;  // binomial(12, 6)

// Gcd of all k x k minors, canonical (monic); zero if all vanish.  Throws
// TooLarge when the number of minors exceeds kMinorCap.
LPoly minor_gcd(const LMatrix& m, int k);
// Gcd of maximal minors by unimodular Euclidean reduction.
LPoly maximal_minor_gcd(const LMatrix& m);

// ---- twisted Alexander and Wada -----------------------------------------

struct WadaResult {
  int column = -1;      // generator whose block was deleted
  LPoly numerator;      // det of the Alexander matrix without that block
  LPoly denominator;    // det(rho(x_j) t^alpha_j - I)
  LPoly reduced_num;    // numerator / denominator in lowest terms
  LPoly reduced_den;
  bool polynomial = false;
  LPoly reduced;        // canonical; meaningful when polynomial
  std::vector<int> valid_columns;
  UnitCheck columns_agree = UnitCheck::Equal;
};

WadaResult wada_invariant(const Presentation& pres, const Rep& rho, const AbelianMap& alpha);

struct TwistedAlexander {
  int index = 0;
  LPoly poly;  // integral representative
  // For index 1: whether the minor-gcd definition was evaluated and agreed
  // with W * Delta_0 up to scalars.
  bool definition_checked = false;
};

TwistedAlexander twisted_alexander(const Presentation& pres, const Rep& rho, const AbelianMap& alpha, int i);

// ---- norms ----------------------------------------------------------------

// prod over embeddings of f^sigma as Res_x(m(x), F(x, t)).
QLaurent norm_polynomial(const LPoly& f);
// Primitive part of Nr(f) with min degree 0 and positive leading coefficient.
ZLaurent norm_primitive(const LPoly& f);

bool is_reciprocal(const ZLaurent& f);
bool is_reciprocal(const LPoly& f);

// ---- Hillar classes -------------------------------------------------------

struct HillarResult {
  enum class Kind { SameClassCertified, SequencesMatch, Distinct };
  Kind kind = Kind::SequencesMatch;
  int n = 0;  // depth for SequencesMatch, witness for Distinct
  ZLaurent u, v;  // certificate: f = u v, g = u v* up to +-t^k
};
std::string_view hillar_kind_name(HillarResult::Kind k);

HillarResult hillar_test(const ZLaurent& f, const ZLaurent& g, int depth = 64);

}  // namespace tapkit
