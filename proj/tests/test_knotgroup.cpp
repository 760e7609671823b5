#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "tapkit/knotgroup.hpp"
#include "tapkit/parse.hpp"
#include "tapkit/twistpoly.hpp"

using namespace tapkit;

namespace {

const std::string kNames = "ab";

Word w(const std::string& s, const std::string& names = kNames) { return Word::parse(s, names); }

// ---- string-based group ring oracle -----------------------------------------

using Ring = std::map<std::string, long>;

char inv_letter(char c) { return std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c)) : static_cast<char>(std::tolower(c)); }

std::string reduce(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!out.empty() && out.back() == inv_letter(c)) out.pop_back();
    else out.push_back(c);
  }
  return out;
}

void add(Ring& r, const std::string& word, long c) {
  const std::string k = reduce(word);
  r[k] += c;
  if (r[k] == 0) r.erase(k);
}

// d(s)/d(x) by the letter-by-letter product rule:
// d(c u)/dx = dc/dx + c du/dx, dx/dx = 1, d(x^-1)/dx = -x^-1.
Ring fox_oracle(const std::string& s, char x) {
  Ring r;
  std::string prefix;
  for (char c : s) {
    if (c == x) add(r, prefix, 1);
    else if (c == inv_letter(x)) add(r, prefix + c, -1);
    prefix += c;
  }
  return r;
}

Ring to_ring(const GroupRingElem& e) {
  Ring r;
  for (const auto& [word, c] : e.terms()) add(r, word.to_string(kNames), c.get_si());
  return r;
}

Word random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, 1), sign(0, 1);
  std::vector<Letter> letters;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) letters.push_back(Letter{gen(rng), sign(rng) ? 1 : -1});
  return word_reduce(Word(letters));
}

// ---- Riley oracle over Z[u] ------------------------------------------------

using M2 = std::array<ZPoly, 4>;  // row-major 2x2

M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

// (1,1) entry of W for the parabolic matrices A = [[1,1],[0,1]],
// B = [[1,0],[u,1]].
ZPoly riley_entry(const Word& word) {
  const ZPoly one(Int(1)), zero, u = ZPoly::x();
  const M2 A{one, one, zero, one}, Ai{one, -one, zero, one};
  const M2 B{one, zero, u, one}, Bi{one, zero, -u, one};
  M2 acc{one, zero, zero, one};
  for (const auto& l : word.letters()) acc = mul(acc, l.gen == 0 ? (l.exp > 0 ? A : Ai) : (l.exp > 0 ? B : Bi));
  return acc[0];
}

NFMatrix nf_mat(const FieldPtr& f, std::initializer_list<std::initializer_list<int>> rows) {
  NFMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) m(i, j++) = NFElem(Rat(v), f);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(word_reduce(w("aA")).empty());
  CHECK(word_reduce(w("abBa")) == w("aa"));
  CHECK(word_reduce(w("abABab")).to_string(kNames) == "abABab");
  CHECK(Word::parse("xyXYxy", "xy").to_string("xy") == "xyXYxy");
  CHECK_THROWS(Word::parse("abc", kNames));
}

TEST_CASE("two-bridge presentations") {
  CHECK(two_bridge_presentation(7, 3).w.to_string(kNames) == "abABab");
  CHECK(two_bridge_presentation(3, 1).w.to_string(kNames) == "ab");
  CHECK(two_bridge_presentation(5, 3).w.to_string(kNames) == "aBAb");
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {5, 3}, {7, 3}, {7, 1}, {9, 5}, {11, 7}, {13, 5}}) {
    TwoBridge tb = two_bridge_presentation(p, q);
    REQUIRE(tb.pres.relators.size() == 1);
    CHECK(tb.alpha.exponents == std::vector<int>{1, 1});
    CHECK(tb.alpha.apply(tb.pres.relators[0]) == 0);
    const Word expect = word_reduce(tb.w * Word::generator(0) * tb.w.inverse() * Word::generator(1, -1));
    CHECK(tb.pres.relators[0] == expect);
  }
  CHECK_THROWS(two_bridge_presentation(6, 1));
  CHECK_THROWS(two_bridge_presentation(9, 3));
}

TEST_CASE("Fox derivatives") {
  CHECK(fox_derivative(w("a"), 0) == GroupRingElem::one());
  CHECK(fox_derivative(w("b"), 0).is_zero());
  const GroupRingElem d = fox_derivative(w("abAB"), 0);
  CHECK(d == GroupRingElem::one() - GroupRingElem(w("abA")));
  CHECK(to_ring(d) == fox_oracle("abAB", 'a'));
}

TEST_CASE("Fox calculus: product rule and fundamental identity on random words") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 500; ++it) {
    const Word u = random_word(rng, 12), v = random_word(rng, 12);
    const Word uv = u * v;
    GroupRingElem sum;
    for (int j = 0; j < 2; ++j) {
      const GroupRingElem lhs = fox_derivative(uv, j);
      CHECK(lhs == fox_derivative(u, j) + GroupRingElem(u) * fox_derivative(v, j));
      CHECK(to_ring(lhs) == fox_oracle(uv.to_string(kNames), kNames[static_cast<std::size_t>(j)]));
      sum = sum + fox_derivative(uv, j) * (GroupRingElem(Word::generator(j)) - GroupRingElem::one());
    }
    CHECK(sum == GroupRingElem(uv) - GroupRingElem::one());
  }
}

TEST_CASE("evaluation of group ring elements") {
  auto [rho, field] = riley_rep(3, 1, 0);
  const AbelianMap alpha{{1, 1}};
  LMatrix id = evaluate(GroupRingElem::one(), rho, alpha);
  REQUIRE(id.rows() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(id(i, j).min_deg() == 0);
      CHECK(id(i, j).span() == (i == j ? 0 : -1));
    }
  LMatrix ea = evaluate(GroupRingElem(w("a")), rho, alpha);
  CHECK(ea(0, 0) == LPoly::monomial(NFElem(1), 1));
  CHECK(ea(0, 1) == LPoly::monomial(NFElem(1), 1));
  CHECK(ea(1, 0).is_zero());
  CHECK(ea(1, 1) == LPoly::monomial(NFElem(1), 1));

  // 1 - a b a^-1 against direct matrix products; alpha(a b a^-1) = 1.
  const GroupRingElem e = GroupRingElem::one() - GroupRingElem(w("abA"));
  LMatrix got = evaluate(e, rho, alpha);
  NFMatrix prod = rho.matrix(0) * rho.matrix(1) * rho.inverse(0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      LPoly expect = LPoly::monomial(-prod(i, j), 1);
      if (i == j) expect = expect + LPoly::monomial(NFElem(1), 0);
      CHECK(got(i, j) == expect);
    }
}

TEST_CASE("Alexander matrices") {
  TwoBridge tb = two_bridge_presentation(3, 1);
  LMatrix a = alexander_matrix(tb.pres, trivial_rep(2), tb.alpha);
  CHECK(a.rows() == 1);
  CHECK(a.cols() == 2);
  CHECK(unit_compare(minor_gcd(a, 1), to_lpoly(parse_integer_laurent("t^2-t+1"))) == UnitCheck::Equal);

  Presentation unknot{"a", {}};
  LMatrix u = alexander_matrix(unknot, trivial_rep(1), AbelianMap{{1}});
  CHECK(u.rows() == 0);
  CHECK(u.cols() == 1);

  TwoBridge k52 = two_bridge_presentation(7, 3);
  auto [rho, field] = riley_rep(7, 3, 0);
  LMatrix m = alexander_matrix(k52.pres, rho, k52.alpha);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 4);
}

TEST_CASE("fundamental identity after evaluation") {
  // sum_j A_ij (rho(x_j) t^alpha_j - I) = rho(r_i) t^alpha(r_i) - I = 0.
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 1}, {5, 3}, {5, 1}, {7, 3}, {9, 5}}) {
    TwoBridge tb = two_bridge_presentation(p, q);
    auto [rho, field] = riley_rep(p, q, 0);
    LMatrix a = alexander_matrix(tb.pres, rho, tb.alpha);
    LMatrix stacked(4, 2);
    for (int j = 0; j < 2; ++j) {
      LMatrix g = generator_block(rho, tb.alpha, j);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) stacked(2 * static_cast<std::size_t>(j) + r, c) = g(r, c);
    }
    LMatrix z = a * stacked;
    for (std::size_t r = 0; r < z.rows(); ++r)
      for (std::size_t c = 0; c < z.cols(); ++c) CHECK(z(r, c).is_zero());
  }
}

TEST_CASE("Riley polynomials") {
  CHECK(riley_polynomial(7, 3) == parse_integer_poly("u^3+u^2+2*u+1"));
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 1}, {5, 3}, {5, 1}, {7, 3}, {7, 1}, {9, 5}}) {
    ZPoly entry = primitive_part(riley_entry(two_bridge_presentation(p, q).w));
    if (entry.lead() < 0) entry = -entry;
    CHECK(riley_polynomial(p, q) == entry);
    // The general-presentation route agrees.
    CHECK(riley_polynomial(two_bridge_presentation(p, q).pres) == riley_polynomial(p, q));
  }
  CHECK(riley_polynomial(3, 1).degree() == 1);
  const ZPoly r41 = riley_polynomial(5, 3);
  REQUIRE(r41.degree() == 2);
  CHECK(NumberField::make(r41)->discriminant() == -3);
}

TEST_CASE("Riley representations") {
  auto [rho41, f41] = riley_rep(5, 3, 0);
  CHECK(f41->discriminant() == -3);
  auto [rho52, f52] = riley_rep(7, 3, 0);
  CHECK(f52->discriminant() == -23);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 1}, {5, 3}, {5, 1}, {7, 3}, {9, 5}, {11, 3}}) {
    TwoBridge tb = two_bridge_presentation(p, q);
    const ZPoly riley = riley_polynomial(p, q);
    const int nfac = static_cast<int>(factor_over_z(riley).factors.size());
    for (int i = 0; i < nfac; ++i) {
      auto [rho, field] = riley_rep(tb.pres, riley, i);
      CHECK(check_rep(tb.pres, rho).ok);
      CHECK(rho.special());
      for (int g = 0; g < 2; ++g) {
        const NFMatrix& m = rho.matrix(g);
        CHECK(m(0, 0) + m(1, 1) == NFElem(Rat(2), field));
        CHECK(det_field(m) == NFElem(Rat(1), field));
      }
    }
    CHECK_THROWS(riley_rep(tb.pres, riley, nfac));
  }
}

TEST_CASE("symmetric powers") {
  auto [rho, field] = riley_rep(5, 3, 0);
  Rep s1 = sym_power(rho, 1);
  for (int g = 0; g < 2; ++g) CHECK(s1.matrix(g) == rho.matrix(g));

  NFMatrix d(2, 2);
  d(0, 0) = NFElem(Rat(2));
  d(1, 1) = NFElem(Rat(1, 2));
  Rep diag(nullptr, {d});
  Rep s2 = sym_power(diag, 2);
  REQUIRE(s2.dim() == 3);
  CHECK(s2.matrix(0)(0, 0) == NFElem(Rat(4)));
  CHECK(s2.matrix(0)(1, 1) == NFElem(Rat(1)));
  CHECK(s2.matrix(0)(2, 2) == NFElem(Rat(1, 4)));
  CHECK(s2.matrix(0)(0, 1).is_zero());

  TwoBridge tb = two_bridge_presentation(5, 3);
  for (int k = 1; k <= 6; ++k) {
    Rep s = sym_power(rho, k);
    CHECK(s.dim() == static_cast<std::size_t>(k + 1));
    CHECK(check_rep(tb.pres, s).ok);
  }
}

TEST_CASE("representation checks") {
  TwoBridge tb = two_bridge_presentation(3, 1);
  CHECK(check_rep(tb.pres, trivial_rep(2)).ok);
  auto [rho, field] = riley_rep(3, 1, 0);
  CHECK(check_rep(tb.pres, rho).ok);
  NFMatrix b = rho.matrix(1);
  b(0, 1) = b(0, 1) + NFElem(Rat(1), field);
  Rep bad(field, {rho.matrix(0), b});
  RepCheck chk = check_rep(tb.pres, bad);
  CHECK_FALSE(chk.ok);
  CHECK(chk.relator == 0);
  CHECK(chk.value != NFMatrix::identity(2));
  CHECK_THROWS(Rep(field, {nf_mat(field, {{1, 1}, {0, 1}}), nf_mat(field, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}));
}
