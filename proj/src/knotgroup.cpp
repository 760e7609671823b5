#include "tapkit/knotgroup.hpp"

#include <cctype>
#include <numeric>

#include "tapkit/zfactor.hpp"

namespace tapkit {

Word word_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> r(letters_.rbegin(), letters_.rend());
  for (auto& l : r) l.exp = -l.exp;
  return Word(std::move(r));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> r = a.letters_;
  r.insert(r.end(), b.letters_.begin(), b.letters_.end());
  return word_reduce(Word(std::move(r)));
}

Word Word::parse(const std::string& text, const std::string& names) {
  std::vector<Letter> r;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    auto pos = names.find(lower);
    if (pos == std::string::npos)
      throw Error(Errc::ParseError, std::string("unknown generator '") + ch + "' in word \"" + text + "\"");
    r.push_back(Letter{static_cast<int>(pos), std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1});
  }
  return Word(std::move(r));
}

std::string Word::to_string(const std::string& names) const {
  std::string s;
  for (const auto& l : letters_) {
    char c = names.at(static_cast<std::size_t>(l.gen));
    s += l.exp > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return s;
}

void Presentation::validate() const {
  if (names.empty()) throw Error(Errc::ValidationError, "presentation has no generators");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!std::islower(static_cast<unsigned char>(names[i])))
      throw Error(Errc::ValidationError, "generator names must be lower-case letters");
    if (names.find(names[i]) != i) throw Error(Errc::ValidationError, "duplicate generator name");
  }
  for (const auto& r : relators)
    for (const auto& l : r.letters())
      if (l.gen < 0 || l.gen >= n_gens() || (l.exp != 1 && l.exp != -1))
        throw Error(Errc::ValidationError, "relator letter out of range");
}

int AbelianMap::apply(const Word& w) const {
  int s = 0;
  for (const auto& l : w.letters()) s += l.exp * exponents.at(static_cast<std::size_t>(l.gen));
  return s;
}

void AbelianMap::validate(const Presentation& pres) const {
  if (static_cast<int>(exponents.size()) != pres.n_gens())
    throw Error(Errc::ValidationError, "abelian map has the wrong number of exponents");
  for (std::size_t i = 0; i < pres.relators.size(); ++i)
    if (apply(pres.relators[i]) != 0)
      throw Error(Errc::ValidationError, "relator " + std::to_string(i) + " does not map to t^0");
  int g = 0;
  for (int e : exponents) g = std::gcd(g, e);
  if (g != 1) throw Error(Errc::ValidationError, "abelian map is not surjective");
}

GroupRingElem::GroupRingElem(const Word& w, const Int& c) { add_term(w, c); }

void GroupRingElem::add_term(const Word& w, const Int& c) {
  if (sgn(c) == 0) return;
  Word r = word_reduce(w);
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(std::move(r), c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
  return r;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem r;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
  return r;
}

GroupRingElem fox_derivative(const Word& w, int j) {
  GroupRingElem r;
  std::vector<Letter> prefix;
  for (const auto& l : w.letters()) {
    if (l.gen == j && l.exp == 1) r = r + GroupRingElem(Word(prefix));
    prefix.push_back(l);
    if (l.gen == j && l.exp == -1) r = r - GroupRingElem(Word(prefix));
  }
  return r;
}

Rep::Rep(FieldPtr field, std::vector<NFMatrix> mats) : field_(std::move(field)), mats_(std::move(mats)) {
  if (mats_.empty()) throw Error(Errc::DimensionError, "representation without generators");
  dim_ = mats_.front().rows();
  special_ = true;
  for (auto& m : mats_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw Error(Errc::DimensionError, "generator matrices differ in size");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = m(i, j).with_field(field_);
    NFElem d = det_field(m);
    if (d.is_zero()) throw Error(Errc::ValidationError, "generator matrix is singular");
    if (d != NFElem(1)) special_ = false;
    inv_.push_back(inverse_field(m));
  }
}

bool Rep::integral() const {
  for (const auto& m : mats_)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (!m(i, j).is_integral()) return false;
  return true;
}

NFMatrix Rep::operator()(const Word& w) const {
  NFMatrix r = NFMatrix::identity(dim_);
  for (const auto& l : w.letters()) r = r * (l.exp > 0 ? matrix(l.gen) : inverse(l.gen));
  return r;
}

Rep trivial_rep(int n_gens) {
  FieldPtr q = NumberField::make(ZPoly(std::vector<Int>{Int(-1), Int(1)}));
  std::vector<NFMatrix> mats(static_cast<std::size_t>(n_gens), NFMatrix::identity(1));
  return Rep(q, std::move(mats));
}

RepCheck check_rep(const Presentation& pres, const Rep& rho) {
  RepCheck out;
  if (rho.n_gens() != pres.n_gens()) {
    out.ok = false;
    return out;
  }
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    NFMatrix v = rho(pres.relators[i]);
    if (!v.is_identity()) {
      out.ok = false;
      out.relator = static_cast<int>(i);
      out.value = std::move(v);
      return out;
    }
  }
  return out;
}

LMatrix evaluate(const GroupRingElem& e, const Rep& rho, const AbelianMap& alpha) {
  const std::size_t n = rho.dim();
  LMatrix r(n, n);
  for (const auto& [w, c] : e.terms()) {
    NFMatrix m = rho(w);
    const int k = alpha.apply(w);
    const NFElem cc(c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!m(i, j).is_zero()) r(i, j) = r(i, j) + LPoly::monomial(m(i, j) * cc, k);
  }
  return r;
}

LMatrix alexander_matrix(const Presentation& pres, const Rep& rho, const AbelianMap& alpha) {
  if (rho.n_gens() != pres.n_gens()) throw Error(Errc::RepMismatch, "representation and presentation disagree on generators");
  const std::size_t n = rho.dim();
  LMatrix a(pres.relators.size() * n, static_cast<std::size_t>(pres.n_gens()) * n);
  for (std::size_t i = 0; i < pres.relators.size(); ++i)
    for (int j = 0; j < pres.n_gens(); ++j)
      a.set_block(i * n, static_cast<std::size_t>(j) * n, evaluate(fox_derivative(pres.relators[i], j), rho, alpha));
  return a;
}

LMatrix generator_block(const Rep& rho, const AbelianMap& alpha, int j) {
  LMatrix m = evaluate(GroupRingElem(Word::generator(j)), rho, alpha);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = m(i, i) - LPoly(NFElem(1));
  return m;
}

TwoBridge two_bridge_presentation(int p, int q) {
  if (p < 3 || p % 2 == 0 || q <= 0 || q >= p || q % 2 == 0 || std::gcd(p, q) != 1)
    throw Error(Errc::BadParameters, "two-bridge parameters need odd p >= 3, odd 0 < q < p, gcd(p, q) = 1");
  std::vector<Letter> w;
  for (int i = 1; i < p; ++i) {
    const int e = ((i * q) / p) % 2 == 0 ? 1 : -1;
    w.push_back(Letter{(i - 1) % 2, e});
  }
  TwoBridge out;
  out.w = Word(w);
  out.pres.names = "ab";
  // w a w^-1 b^-1
  std::vector<Letter> r = w;
  r.push_back(Letter{0, 1});
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(Letter{it->gen, -it->exp});
  r.push_back(Letter{1, -1});
  out.pres.relators.push_back(Word(std::move(r)));
  out.alpha.exponents = {1, 1};
  return out;
}

namespace {

using UMatrix = Matrix<ZPoly>;

UMatrix parabolic(int gen, int exp) {
  UMatrix m = UMatrix::identity(2);
  if (gen == 0) {
    m(0, 1) = ZPoly(Int(exp));
  } else {
    m(1, 0) = ZPoly(std::vector<Int>{Int(0), Int(exp)});
  }
  return m;
}

UMatrix symbolic(const Word& w) {
  UMatrix r = UMatrix::identity(2);
  for (const auto& l : w.letters()) r = r * parabolic(l.gen, l.exp);
  return r;
}

ZPoly entry_gcd(const UMatrix& m) {
  ZPoly g;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) g = gcd_z(g, m(i, j));
  if (g.is_zero()) throw Error(Errc::BadParameters, "parabolic matrices satisfy the relator identically");
  return g;
}

NFMatrix parabolic_value(int gen, const NFElem& u) {
  NFMatrix m = NFMatrix::identity(2);
  if (gen == 0) {
    m(0, 1) = NFElem(1);
  } else {
    m(1, 0) = u;
  }
  return m;
}

}  // namespace

ZPoly riley_polynomial(int p, int q) {
  TwoBridge tb = two_bridge_presentation(p, q);
  UMatrix w = symbolic(tb.w);
  return entry_gcd(w * parabolic(0, 1) - parabolic(1, 1) * w);
}

ZPoly riley_polynomial(const Presentation& pres) {
  if (pres.n_gens() != 2 || pres.relators.size() != 1)
    throw Error(Errc::BadParameters, "Riley polynomial needs a two-generator one-relator presentation");
  return entry_gcd(symbolic(pres.relators.front()) - UMatrix::identity(2));
}

std::pair<Rep, FieldPtr> riley_rep(const Presentation& pres, const ZPoly& riley, int factor_index) {
  IntegerFactorization fac = factor_over_z(riley);
  if (factor_index < 0 || factor_index >= static_cast<int>(fac.factors.size()))
    throw Error(Errc::IndexOutOfRange, "Riley polynomial has " + std::to_string(fac.factors.size()) + " irreducible factors");
  ZPoly m = fac.factors[static_cast<std::size_t>(factor_index)].first;
  if (m.lead() != 1) throw Error(Errc::NotMonic, "Riley factor is not monic");
  FieldPtr field = NumberField::make(m);
  NFElem u = NFElem::generator(field);
  Rep rho(field, {parabolic_value(0, u), parabolic_value(1, u)});
  RepCheck chk = check_rep(pres, rho);
  if (!chk.ok) throw Error(Errc::RepCheckFailed, "Riley representation violates relator " + std::to_string(chk.relator));
  return {std::move(rho), field};
}

std::pair<Rep, FieldPtr> riley_rep(int p, int q, int factor_index) {
  TwoBridge tb = two_bridge_presentation(p, q);
  return riley_rep(tb.pres, riley_polynomial(p, q), factor_index);
}

Rep sym_power(const Rep& rho, int k) {
  if (rho.dim() != 2) throw Error(Errc::DimensionError, "symmetric powers need a 2-dimensional representation");
  if (k < 1) throw Error(Errc::BadParameters, "symmetric power degree must be positive");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  std::vector<NFMatrix> mats;
  for (int g = 0; g < rho.n_gens(); ++g) {
    const NFMatrix& m = rho.matrix(g);
    // x -> a x + c y, y -> b x + d y; coefficients indexed by the power of y.
    NFPoly xs(std::vector<NFElem>{m(0, 0), m(1, 0)});
    NFPoly ys(std::vector<NFElem>{m(0, 1), m(1, 1)});
    NFMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      NFPoly img = power(xs, static_cast<unsigned long>(k) - i) * power(ys, static_cast<unsigned long>(i));
      for (std::size_t j = 0; j < n; ++j) s(j, i) = img.coeff(j);
    }
    mats.push_back(std::move(s));
  }
  return Rep(rho.field(), std::move(mats));
}

}  // namespace tapkit
