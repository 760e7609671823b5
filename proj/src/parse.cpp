#include "tapkit/parse.hpp"

#include <cctype>
#include <tuple>

#include "tapkit/twistpoly.hpp"

namespace tapkit {

namespace {

using Terms = std::map<std::vector<int>, Rat>;

void trim_key(std::vector<int>& k) {
  while (!k.empty() && k.back() == 0) k.pop_back();
}

Terms add(const Terms& a, const Terms& b, int sign) {
  Terms r = a;
  for (const auto& [k, c] : b) {
    Rat& slot = r[k];
    slot += sign > 0 ? c : Rat(-c);
    if (sgn(slot) == 0) r.erase(k);
  }
  return r;
}

Terms mul(const Terms& a, const Terms& b) {
  Terms r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> k(std::max(ka.size(), kb.size()), 0);
      for (std::size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
      for (std::size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
      trim_key(k);
      Rat& slot = r[k];
      slot += ca * cb;
      if (sgn(slot) == 0) r.erase(k);
    }
  return r;
}

Terms constant(const Rat& c) {
  Terms r;
  if (sgn(c) != 0) r[{}] = c;
  return r;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ParsedPoly run() {
    Terms t = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    ParsedPoly out;
    out.vars = vars_;
    for (const auto& [k, c] : t) {
      std::vector<int> key = k;
      key.resize(vars_.size(), 0);
      out.terms[key] = c;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " at column " + std::to_string(pos_ + 1) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Terms expr() {
    int sign = 1;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    Terms acc = add(Terms{}, term(), sign);
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = add(acc, term(), 1);
      } else if (peek('-')) {
        ++pos_;
        acc = add(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  Terms term() {
    Terms acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, power());
      } else if (peek('/')) {
        ++pos_;
        skip();
        Int d = integer();
        if (sgn(d) == 0) fail("division by zero");
        acc = mul(acc, constant(Rat(Int(1), d)));
      } else if (starts_factor()) {
        acc = mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Terms power() {
    Terms base = factor();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    skip();
    Int e = integer();
    if (e > 100000) fail("exponent too large");
    const long k = e.get_si();
    if (neg) {
      if (base.size() != 1) fail("negative exponent on a non-monomial");
      std::vector<int> key = base.begin()->first;
      const Rat c = base.begin()->second;
      for (auto& x : key) x *= -1;
      Terms inv;
      inv[key] = Rat(1) / c;
      base = inv;
    }
    Terms r = constant(Rat(1));
    for (long i = 0; i < k; ++i) r = mul(r, base);
    return r;
  }

  Terms factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Terms inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Rat(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      std::size_t idx = 0;
      while (idx < vars_.size() && vars_[idx] != name) ++idx;
      if (idx == vars_.size()) vars_.push_back(name);
      std::vector<int> key(idx + 1, 0);
      key[idx] = 1;
      Terms r;
      r[key] = Rat(1);
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Int integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

int var_index(const ParsedPoly& p, const std::string& name) {
  for (std::size_t i = 0; i < p.vars.size(); ++i)
    if (p.vars[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace

ParsedPoly parse_polynomial(const std::string& text) { return Parser(text).run(); }

QLaurent parse_laurent(const std::string& text) {
  ParsedPoly p = parse_polynomial(text);
  if (p.vars.size() > 1) throw Error(Errc::ParseError, "expected one variable in \"" + text + "\"");
  if (p.terms.empty()) return QLaurent();
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [k, c] : p.terms) {
    const int e = k.empty() ? 0 : k[0];
    lo = first ? e : std::min(lo, e);
    hi = first ? e : std::max(hi, e);
    first = false;
  }
  std::vector<Rat> coeffs(static_cast<std::size_t>(hi - lo) + 1, Rat(0));
  for (const auto& [k, c] : p.terms) coeffs[static_cast<std::size_t>((k.empty() ? 0 : k[0]) - lo)] = c;
  return QLaurent(QPoly(std::move(coeffs)), lo);
}

ZLaurent parse_integer_laurent(const std::string& text) {
  QLaurent q = parse_laurent(text);
  for (const auto& c : q.poly().coeffs())
    if (c.get_den() != 1) throw Error(Errc::ParseError, "non-integer coefficient in \"" + text + "\"");
  return to_zlaurent(q);
}

ZPoly parse_integer_poly(const std::string& text) {
  ZLaurent f = parse_integer_laurent(text);
  if (f.is_zero()) return ZPoly();
  if (f.min_deg() < 0) throw Error(Errc::ParseError, "negative exponent in \"" + text + "\"");
  return f.poly().shifted(static_cast<std::size_t>(f.min_deg()));
}

LPoly parse_nf_laurent(const std::string& text, const FieldPtr& field, const std::string& gen) {
  ParsedPoly p = parse_polynomial(text);
  const int ti = var_index(p, "t");
  const int gi = var_index(p, gen);
  for (const auto& v : p.vars)
    if (v != "t" && v != gen) throw Error(Errc::ParseError, "unknown variable '" + v + "' in \"" + text + "\"");
  LPoly out;
  for (const auto& [k, c] : p.terms) {
    const int te = ti >= 0 ? k[static_cast<std::size_t>(ti)] : 0;
    const int ge = gi >= 0 ? k[static_cast<std::size_t>(gi)] : 0;
    if (ge < 0) throw Error(Errc::ParseError, "negative power of the generator in \"" + text + "\"");
    std::vector<Rat> coords(static_cast<std::size_t>(ge) + 1, Rat(0));
    coords[static_cast<std::size_t>(ge)] = c;
    NFElem x = field ? NFElem(field, coords) : NFElem(c);
    if (!field && ge > 0) throw Error(Errc::ParseError, "generator used without a field");
    out = out + LPoly::monomial(x, te);
  }
  return out;
}

NFElem parse_nf_element(const std::string& text, const FieldPtr& field, const std::string& gen) {
  LPoly f = parse_nf_laurent(text, field, gen);
  if (f.is_zero()) return field ? NFElem(Rat(0), field) : NFElem(0);
  if (f.span() != 0 || f.min_deg() != 0) throw Error(Errc::ParseError, "expected a constant in \"" + text + "\"");
  return f.coeff(0);
}

namespace {

std::string power_text(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

// Joins signed terms "c", "c*v^k" with " + " / " - ".
template <class Coef, class Fmt>
std::string join_terms(int lo, int hi, const std::string& var, Coef coef, Fmt fmt) {
  std::string out;
  for (int k = hi; k >= lo; --k) {
    auto [zero, negative, body] = fmt(coef(k));
    if (zero) continue;
    const std::string pw = power_text(var, k);
    std::string t;
    if (pw.empty()) t = body;
    else if (body == "1") t = pw;
    else t = body + "*" + pw;
    if (out.empty()) out = negative ? "-" + t : t;
    else out += negative ? " - " + t : " + " + t;
  }
  return out.empty() ? "0" : out;
}

std::tuple<bool, bool, std::string> fmt_rat(const Rat& c) {
  if (sgn(c) == 0) return {true, false, ""};
  return {false, sgn(c) < 0, Rat(abs(c)).get_str()};
}

}  // namespace

std::string format_laurent(const QLaurent& f, const std::string& var) {
  if (f.is_zero()) return "0";
  return join_terms(f.min_deg(), f.max_deg(), var, [&](int k) { return f.coeff(k); }, fmt_rat);
}

std::string format_laurent(const ZLaurent& f, const std::string& var) { return format_laurent(to_qlaurent(f), var); }

std::string format_poly(const ZPoly& f, const std::string& var) {
  return format_laurent(ZLaurent(f, 0), var);
}

std::string format_laurent(const LPoly& f, const std::string& var, const std::string& gen) {
  if (f.is_zero()) return "0";
  auto fmt = [&](const NFElem& c) -> std::tuple<bool, bool, std::string> {
    if (c.is_zero()) return {true, false, ""};
    if (c.is_rational()) return fmt_rat(c.coord(0));
    return {false, false, "(" + c.to_string(gen) + ")"};
  };
  return join_terms(f.min_deg(), f.max_deg(), var, [&](int k) { return f.coeff(k); }, fmt);
}

}  // namespace tapkit
