#pragma once

// Named knots and representations, from built-ins and JSON catalog files.
//
// Schema (version 1):
//   {"schema": 1,
//    "knots": {"name": {"two_bridge": [p, q]} |
//                      {"presentation": {"generators": "ab", "relators": ["..."]},
//                       "abelian": [1, 1]}},
//    "reps": {"name": {"kind": "riley", "factor": 0, "sym_power": 1} |
//                     {"kind": "trivial"} |
//                     {"kind": "explicit", "knot": "name", "field": "x^2+1",
//                      "matrices": [[["1", "a"], ["0", "1"]], ...]}},
//    "defaults": {"digits": 20, "n_max": 8, "primes": [2, 3, 5, 7, 11, 23]}}

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tapkit/knotgroup.hpp"

namespace tapkit {

struct KnotEntry {
  std::string name;
  Presentation pres;
  AbelianMap alpha;
  std::optional<std::pair<int, int>> two_bridge;
};

struct RepEntry {
  std::string name;
  std::string kind;  // "riley", "trivial" or "explicit"
  int factor = 0;
  int sym_power = 1;
  std::string knot;   // explicit reps only
  std::string field;  // explicit reps only
  std::vector<std::vector<std::vector<std::string>>> matrices;
};

struct CatalogDefaults {
  int digits = 20;
  int n_max = 8;
  std::vector<long> primes{2, 3, 5, 7, 11, 23};
};

struct ResolvedRep {
  Rep rho;
  FieldPtr field;
  std::optional<ZPoly> riley;  // Riley polynomial for riley reps
};

class Catalog {
 public:
  // Built-ins only: 3_1 = (3,1), 4_1 = (5,3), 5_1 = (5,1), 5_2 = (7,3);
  // reps riley0, riley1, riley2 and trivial.
  static Catalog builtin();
  // Built-ins overridden by the file's entries. ParseError carries
  // line/column; ValidationError names the entry.
  static Catalog load(const std::string& path);
  static Catalog parse(const std::string& text);

  const KnotEntry& knot(const std::string& name) const;
  const RepEntry& rep(const std::string& name) const;
  const CatalogDefaults& defaults() const { return defaults_; }
  std::vector<std::string> knot_names() const;
  std::vector<std::string> rep_names() const;

  ResolvedRep resolve(const std::string& knot_name, const std::string& rep_name) const;

 private:
  void add_knot(KnotEntry k) { knots_[k.name] = std::move(k); }
  void add_rep(RepEntry r) { reps_[r.name] = std::move(r); }
  std::map<std::string, KnotEntry> knots_;
  std::map<std::string, RepEntry> reps_;
  CatalogDefaults defaults_;
};

KnotEntry two_bridge_entry(const std::string& name, int p, int q);

}  // namespace tapkit
