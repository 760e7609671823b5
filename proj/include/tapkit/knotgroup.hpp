#pragma once

// Free-group words, finite presentations, Fox calculus, and matrix
// representations of finitely presented groups.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tapkit/laurent.hpp"
#include "tapkit/matrix.hpp"
#include "tapkit/numfield.hpp"

namespace tapkit {

struct Letter {
  int gen = 0;
  int exp = 1;  // +1 or -1
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word generator(int gen, int exp = 1) { return Word({Letter{gen, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Word inverse() const;
  // Concatenation followed by free reduction.
  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;

  // Letters are generator names; upper case denotes the inverse.
  static Word parse(const std::string& text, const std::string& names);
  std::string to_string(const std::string& names) const;

 private:
  std::vector<Letter> letters_;
};

Word word_reduce(const Word& w);

struct Presentation {
  std::string names;  // one letter per generator
  std::vector<Word> relators;

  int n_gens() const { return static_cast<int>(names.size()); }
  int deficiency() const { return n_gens() - static_cast<int>(relators.size()); }
  // Throws ValidationError on out-of-range generators or bad names.
  void validate() const;
};

struct AbelianMap {
  std::vector<int> exponents;

  int apply(const Word& w) const;
  // Relators map to 0 and the exponents generate Z.
  void validate(const Presentation& pres) const;
};

// Integral group ring of the free group.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  explicit GroupRingElem(const Word& w, const Int& c = 1);
  static GroupRingElem one() { return GroupRingElem(Word()); }

  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Word& w, const Int& c);
  std::map<Word, Int> terms_;
};

GroupRingElem fox_derivative(const Word& w, int j);

using NFMatrix = Matrix<NFElem>;
using LPoly = Laurent<NFElem>;
using LMatrix = Matrix<LPoly>;

// rho: generators -> GL_N(Q(a)).
class Rep {
 public:
  Rep(FieldPtr field, std::vector<NFMatrix> mats);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  int n_gens() const { return static_cast<int>(mats_.size()); }
  const NFMatrix& matrix(int gen) const { return mats_.at(static_cast<std::size_t>(gen)); }
  const NFMatrix& inverse(int gen) const { return inv_.at(static_cast<std::size_t>(gen)); }
  bool special() const { return special_; }
  bool integral() const;
  NFMatrix operator()(const Word& w) const;

 private:
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<NFMatrix> mats_, inv_;
  bool special_ = false;
};

// The representation sending every generator to the 1x1 identity over Q.
Rep trivial_rep(int n_gens);

struct RepCheck {
  bool ok = true;
  int relator = -1;  // first failing relator
  NFMatrix value;    // its image
};

RepCheck check_rep(const Presentation& pres, const Rep& rho);

// Linear extension of w -> rho(w) t^alpha(w).
LMatrix evaluate(const GroupRingElem& e, const Rep& rho, const AbelianMap& alpha);

// Block (i, j) = evaluate(d r_i / d x_j); size (#relators N) x (n_gens N).
LMatrix alexander_matrix(const Presentation& pres, const Rep& rho, const AbelianMap& alpha);

// rho(x_j) t^alpha(x_j) - I.
LMatrix generator_block(const Rep& rho, const AbelianMap& alpha, int j);

struct TwoBridge {
  Presentation pres;
  AbelianMap alpha;
  Word w;
};

// <a, b | w a w^-1 b^-1>, w = a^e1 b^e2 a^e3 ... of length p - 1 with
// e_i = (-1)^floor(i q / p).
TwoBridge two_bridge_presentation(int p, int q);

// Gcd of the entries of W rho(a) - rho(b) W, rho(a) = [[1,1],[0,1]],
// rho(b) = [[1,0],[u,1]]; positive leading coefficient.
ZPoly riley_polynomial(int p, int q);
// Gcd of the entries of rho(r) - I for a two-generator one-relator
// presentation with the same parabolic matrices.
ZPoly riley_polynomial(const Presentation& pres);

// Rep over the field of the factor_index-th irreducible factor (sorted by
// degree, then coefficients) of the Riley polynomial.
std::pair<Rep, FieldPtr> riley_rep(const Presentation& pres, const ZPoly& riley, int factor_index);
std::pair<Rep, FieldPtr> riley_rep(int p, int q, int factor_index);

// Action on homogeneous polynomials of degree k in two variables; basis
// x^k, x^{k-1} y, ..., y^k.
Rep sym_power(const Rep& rho, int k);

}  // namespace tapkit
