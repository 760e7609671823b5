#include "tapkit/report.hpp"

#include <algorithm>
#include <sstream>

#include "tapkit/parse.hpp"

namespace tapkit {

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["warnings"] = warnings;
  return j;
}

std::string Report::to_text() const {
  std::string out = "command: " + command + "\n";
  if (!inputs.empty()) out += render_text(inputs);
  out += "\n" + render_text(results);
  for (const auto& w : warnings) out += "warning: " + w + "\n";
  return out;
}

Json to_json(const QLaurent& f, const std::string& var) {
  Json j;
  j["min_deg"] = f.is_zero() ? 0 : f.min_deg();
  Json c = Json::array();
  for (const auto& x : f.poly().coeffs()) c.push_back(x.get_str());
  j["coeffs"] = c;
  j["text"] = format_laurent(f, var);
  return j;
}

Json to_json(const ZLaurent& f, const std::string& var) { return to_json(to_qlaurent(f), var); }

Json to_json(const ZPoly& f, const std::string& var) { return to_json(ZLaurent(f, 0), var); }

Json to_json(const NFElem& x) {
  Json c = Json::array();
  const std::size_t d = x.field() ? static_cast<std::size_t>(x.degree()) : 1;
  for (std::size_t i = 0; i < d; ++i) c.push_back(x.coord(i).get_str());
  return c;
}

Json to_json(const LPoly& f) {
  Json j;
  FieldPtr field = field_of(f);
  j["min_deg"] = f.is_zero() ? 0 : f.min_deg();
  Json c = Json::array();
  for (const auto& x : f.poly().coeffs()) c.push_back(to_json(field ? x.with_field(field) : x));
  j["coeffs"] = c;
  j["text"] = format_laurent(f);
  return j;
}

Json to_json(const MahlerMeasure& m, int digits) {
  Json j;
  j["value"] = m.value.to_fixed(digits);
  j["value_log"] = log(m.value).to_fixed(digits);
  std::ostringstream e;
  e.precision(3);
  e << std::scientific << m.log_error();
  j["error_log"] = e.str();
  j["roots_on_circle"] = m.roots_on_circle;
  return j;
}

Json padic_json(long p, const Rat& value) {
  // value = p^-v
  long v = 0;
  Rat x = value;
  while (x.get_num() % p == 0 && x != 0) {
    x /= p;
    --v;
  }
  while (x.get_den() % p == 0) {
    x *= p;
    ++v;
  }
  return Json{{"p", p}, {"valuation", std::to_string(v)}, {"value", value.get_str()}};
}

Json to_json(const NewtonPolygon& np) {
  Json j;
  j["p"] = np.p;
  Json v = Json::array();
  for (const auto& [i, val] : np.vertices) v.push_back(Json::array({i, val}));
  j["vertices"] = v;
  Json s = Json::array();
  for (const auto& [slope, len] : np.segments) s.push_back(Json{{"slope", slope.get_str()}, {"length", len}});
  j["segments"] = s;
  j["roots_on_unit_circle"] = np.roots_on_unit_circle();
  return j;
}

Json to_json(const TeichmullerData& d) {
  Json j;
  j["p"] = d.p;
  Json e = Json::array();
  for (const auto& x : d.entries) {
    Json f = Json::array();
    for (auto c : x.factor) f.push_back(c);
    e.push_back(Json{{"degree", x.degree}, {"order", x.order.get_str()}, {"multiplicity", x.multiplicity}, {"factor", f}});
  }
  j["entries"] = e;
  Json o = Json::array();
  for (const auto& x : d.orders()) o.push_back(x.get_str());
  j["orders"] = o;
  j["m"] = d.m.get_str();
  return j;
}

Json to_json(const SmithForm& s) {
  Json d = Json::array();
  for (const auto& x : s.divisors) d.push_back(x.get_str());
  return Json{{"rank", s.rank}, {"divisors", d}};
}

Json to_json(const GrowthReport& g) {
  Json j;
  j["norm_polynomial"] = to_json(g.norm_poly);
  j["mahler"] = g.mahler;
  Json mp = Json::array();
  for (const auto& [p, v] : g.padic_mahler) mp.push_back(padic_json(p, v));
  j["padic_mahler"] = mp;
  j["s_primes"] = g.s_primes;
  Json rows = Json::array();
  for (const auto& r : g.rows) {
    Json row;
    row["n"] = r.n;
    row["betti"] = r.betti;
    row["torsion"] = r.torsion.get_str();
    row["psi"] = to_json(r.psi, "t");
    row["r_n"] = r.r_n.get_str();
    row["ratio"] = r.ratio.get_str();
    row["torsion_root"] = r.torsion_root;
    Json pn = Json::object();
    for (const auto& [p, v] : r.torsion_p_norms) pn[std::to_string(p)] = v.get_str();
    row["torsion_p_norms"] = pn;
    Json pr = Json::object();
    for (const auto& [p, v] : r.torsion_p_roots) pr[std::to_string(p)] = v;
    row["torsion_p_roots"] = pr;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json to_json(const CyclotomicSplit& s) {
  Json f = Json::array();
  for (const auto& [m, e] : s.factors) f.push_back(Json{{"m", m}, {"multiplicity", e}});
  return Json{{"core", to_json(s.core)}, {"factors", f}};
}

Json to_json(const HillarResult& h) {
  Json j;
  j["kind"] = std::string(hillar_kind_name(h.kind));
  j["n"] = h.n;
  if (h.kind == HillarResult::Kind::SameClassCertified) {
    j["u"] = to_json(h.u);
    j["v"] = to_json(h.v);
  }
  j["conclusive"] = h.kind != HillarResult::Kind::SequencesMatch;
  return j;
}

Json to_json(const SplitScan& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) rows.push_back(Json{{"p", r.p}, {"splits", r.splits}, {"excluded", r.excluded}});
  return Json{{"d", s.d}, {"rows", rows}, {"violations", s.violations()}};
}

Json to_json(const VolumeTrend& v) {
  auto rows = [](const std::vector<VolumeRow>& rs) {
    Json a = Json::array();
    for (const auto& r : rs)
      a.push_back(Json{{"k", r.k},
                       {"degenerate", r.degenerate},
                       {"order_at_one", r.order_at_one},
                       {"abs_A", r.abs_a},
                       {"log_abs_A_over_k2", r.value}});
    return a;
  };
  return Json{{"odd", rows(v.odd)}, {"even", rows(v.even)}};
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("text")) return v.at("text").get<std::string>();
  return v.dump();
}

bool is_scalar_like(const Json& v) { return !v.is_structured() || (v.is_object() && v.contains("text")); }

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!j.is_object()) {
    out += pad + cell(j) + "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items())
    if (is_scalar_like(v)) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (is_scalar_like(v)) {
      out += pad + k + std::string(width - k.size(), ' ') + "  " + cell(v) + "\n";
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out += pad + k + ":\n";
      std::vector<std::string> cols;
      for (const auto& row : v)
        for (const auto& [c, x] : row.items())
          if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
      std::vector<std::size_t> w(cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        w[c] = cols[c].size();
        for (const auto& row : v)
          if (row.contains(cols[c])) w[c] = std::max(w[c], cell(row.at(cols[c])).size());
      }
      auto line = [&](auto get) {
        std::string s = pad + "  ";
        for (std::size_t c = 0; c < cols.size(); ++c) {
          std::string x = get(c);
          s += x + std::string(w[c] - x.size(), ' ') + (c + 1 < cols.size() ? "  " : "");
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out += s + "\n";
      };
      line([&](std::size_t c) { return cols[c]; });
      for (const auto& row : v) line([&](std::size_t c) { return row.contains(cols[c]) ? cell(row.at(cols[c])) : std::string(); });
    } else if (v.is_array()) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ", ") + cell(x);
      out += pad + k + ": [" + s + "]\n";
    } else {
      out += pad + k + ":\n";
      render(v, indent + 2, out);
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, 0, out);
  return out;
}

}  // namespace tapkit
