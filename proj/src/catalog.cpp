#include "tapkit/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tapkit/parse.hpp"

namespace tapkit {

using nlohmann::json;

KnotEntry two_bridge_entry(const std::string& name, int p, int q) {
  TwoBridge tb = two_bridge_presentation(p, q);
  return KnotEntry{name, tb.pres, tb.alpha, std::make_pair(p, q)};
}

Catalog Catalog::builtin() {
  Catalog c;
  c.add_knot(two_bridge_entry("3_1", 3, 1));
  c.add_knot(two_bridge_entry("4_1", 5, 3));
  c.add_knot(two_bridge_entry("5_1", 5, 1));
  c.add_knot(two_bridge_entry("5_2", 7, 3));
  for (int i = 0; i < 3; ++i) {
    RepEntry r;
    r.name = "riley" + std::to_string(i);
    r.kind = "riley";
    r.factor = i;
    c.add_rep(r);
  }
  RepEntry t;
  t.name = "trivial";
  t.kind = "trivial";
  c.add_rep(t);
  return c;
}

namespace {

[[noreturn]] void invalid(const std::string& entry, const std::string& msg) {
  throw Error(Errc::ValidationError, "entry '" + entry + "': " + msg);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

template <class T>
T get_as(const json& j, const std::string& entry, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    invalid(entry, std::string("bad value for ") + what);
  }
}

KnotEntry parse_knot(const std::string& name, const json& j) {
  if (!j.is_object()) invalid(name, "knot must be an object");
  if (j.contains("two_bridge")) {
    auto pq = get_as<std::vector<int>>(j.at("two_bridge"), name, "two_bridge");
    if (pq.size() != 2) invalid(name, "two_bridge needs [p, q]");
    try {
      return two_bridge_entry(name, pq[0], pq[1]);
    } catch (const Error& e) {
      invalid(name, e.what());
    }
  }
  if (!j.contains("presentation")) invalid(name, "needs two_bridge or presentation");
  const json& p = j.at("presentation");
  if (!p.is_object() || !p.contains("generators") || !p.contains("relators"))
    invalid(name, "presentation needs generators and relators");
  KnotEntry k;
  k.name = name;
  k.pres.names = get_as<std::string>(p.at("generators"), name, "generators");
  try {
    for (const auto& r : get_as<std::vector<std::string>>(p.at("relators"), name, "relators"))
      k.pres.relators.push_back(Word::parse(r, k.pres.names));
    k.pres.validate();
    k.alpha.exponents = j.contains("abelian") ? get_as<std::vector<int>>(j.at("abelian"), name, "abelian")
                                              : std::vector<int>(k.pres.names.size(), 1);
    k.alpha.validate(k.pres);
  } catch (const Error& e) {
    invalid(name, e.what());
  }
  return k;
}

RepEntry parse_rep(const std::string& name, const json& j) {
  if (!j.is_object() || !j.contains("kind")) invalid(name, "rep needs a kind");
  RepEntry r;
  r.name = name;
  r.kind = get_as<std::string>(j.at("kind"), name, "kind");
  if (j.contains("sym_power")) r.sym_power = get_as<int>(j.at("sym_power"), name, "sym_power");
  if (r.sym_power < 1) invalid(name, "sym_power must be positive");
  if (r.kind == "riley") {
    r.factor = j.contains("factor") ? get_as<int>(j.at("factor"), name, "factor") : 0;
  } else if (r.kind == "explicit") {
    if (!j.contains("knot") || !j.contains("field") || !j.contains("matrices"))
      invalid(name, "explicit rep needs knot, field and matrices");
    r.knot = get_as<std::string>(j.at("knot"), name, "knot");
    r.field = get_as<std::string>(j.at("field"), name, "field");
    r.matrices = get_as<std::vector<std::vector<std::vector<std::string>>>>(j.at("matrices"), name, "matrices");
  } else if (r.kind != "trivial") {
    invalid(name, "unknown kind '" + r.kind + "'");
  }
  return r;
}

Rep build_explicit(const RepEntry& r, const KnotEntry& k) {
  FieldPtr field = NumberField::make(parse_integer_poly(r.field));
  if (static_cast<int>(r.matrices.size()) != k.pres.n_gens()) invalid(r.name, "one matrix per generator required");
  std::vector<NFMatrix> mats;
  for (const auto& rows : r.matrices) {
    const std::size_t n = rows.size();
    NFMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) invalid(r.name, "matrices must be square");
      for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_nf_element(rows[i][j], field);
    }
    if (!mats.empty() && mats.front().rows() != n) invalid(r.name, "matrices must share one size");
    mats.push_back(std::move(m));
  }
  return Rep(field, std::move(mats));
}

}  // namespace

Catalog Catalog::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(Errc::ParseError, "catalog JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!j.is_object()) throw Error(Errc::ValidationError, "catalog must be a JSON object");
  if (j.contains("schema") && j.at("schema") != 1) throw Error(Errc::ValidationError, "unsupported catalog schema");
  Catalog c = builtin();
  if (j.contains("knots")) {
    if (!j.at("knots").is_object()) throw Error(Errc::ValidationError, "knots must be an object");
    for (const auto& [name, v] : j.at("knots").items()) c.add_knot(parse_knot(name, v));
  }
  if (j.contains("reps")) {
    if (!j.at("reps").is_object()) throw Error(Errc::ValidationError, "reps must be an object");
    for (const auto& [name, v] : j.at("reps").items()) c.add_rep(parse_rep(name, v));
  }
  if (j.contains("defaults")) {
    const json& d = j.at("defaults");
    if (d.contains("digits")) c.defaults_.digits = get_as<int>(d.at("digits"), "defaults", "digits");
    if (d.contains("n_max")) c.defaults_.n_max = get_as<int>(d.at("n_max"), "defaults", "n_max");
    if (d.contains("primes")) c.defaults_.primes = get_as<std::vector<long>>(d.at("primes"), "defaults", "primes");
  }
  // Explicit reps are checked against their knot now.
  for (const auto& [name, r] : c.reps_) {
    if (r.kind != "explicit") continue;
    auto it = c.knots_.find(r.knot);
    if (it == c.knots_.end()) invalid(name, "unknown knot '" + r.knot + "'");
    try {
      Rep rho = build_explicit(r, it->second);
      RepCheck chk = check_rep(it->second.pres, rho);
      if (!chk.ok)
        invalid(name, "relator " + std::to_string(chk.relator) + " (" +
                          it->second.pres.relators[static_cast<std::size_t>(chk.relator)].to_string(it->second.pres.names) +
                          ") does not map to the identity");
    } catch (const Error& e) {
      if (e.code() == Errc::ValidationError) throw;
      invalid(name, e.what());
    }
  }
  return c;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ValidationError, "cannot open catalog '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const KnotEntry& Catalog::knot(const std::string& name) const {
  auto it = knots_.find(name);
  if (it == knots_.end()) throw Error(Errc::ValidationError, "unknown knot '" + name + "'");
  return it->second;
}

const RepEntry& Catalog::rep(const std::string& name) const {
  auto it = reps_.find(name);
  if (it == reps_.end()) throw Error(Errc::ValidationError, "unknown rep '" + name + "'");
  return it->second;
}

std::vector<std::string> Catalog::knot_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : knots_) out.push_back(k);
  return out;
}

std::vector<std::string> Catalog::rep_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : reps_) out.push_back(k);
  return out;
}

ResolvedRep Catalog::resolve(const std::string& knot_name, const std::string& rep_name) const {
  const KnotEntry& k = knot(knot_name);
  const RepEntry& r = rep(rep_name);
  std::optional<ResolvedRep> out;
  if (r.kind == "trivial") {
    out.emplace(ResolvedRep{trivial_rep(k.pres.n_gens()), nullptr, std::nullopt});
    out->field = out->rho.field();
  } else if (r.kind == "riley") {
    ZPoly riley = k.two_bridge ? riley_polynomial(k.two_bridge->first, k.two_bridge->second) : riley_polynomial(k.pres);
    auto [rho, field] = riley_rep(k.pres, riley, r.factor);
    out.emplace(ResolvedRep{std::move(rho), field, riley});
  } else {
    if (r.knot != knot_name) throw Error(Errc::RepMismatch, "rep '" + rep_name + "' belongs to knot '" + r.knot + "'");
    Rep rho = build_explicit(r, k);
    FieldPtr f = rho.field();
    out.emplace(ResolvedRep{std::move(rho), f, std::nullopt});
  }
  if (r.sym_power > 1) out->rho = sym_power(out->rho, r.sym_power);
  return std::move(*out);
}

}  // namespace tapkit
