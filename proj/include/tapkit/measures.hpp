#pragma once

// Euclidean and p-adic Mahler measures, Newton polygons, Teichmuller order
// data, split-prime scans and the symmetric-power volume estimator.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tapkit/finite_field.hpp"
#include "tapkit/knotgroup.hpp"
#include "tapkit/mp.hpp"
#include "tapkit/twistpoly.hpp"

namespace tapkit {

// ---- Mahler measure ---------------------------------------------------------

struct MahlerMeasure {
  Real value;
  Real error;             // absolute bound on |value - true value|
  int roots_on_circle = 0;  // roots whose certified disc meets |z| = 1
  double log_value() const;
  double log_error() const;  // bound on |log value - log true value|
};

MahlerMeasure mahler(const QLaurent& f, int digits);
MahlerMeasure mahler(const ZLaurent& f, int digits);

// ---- p-adic -----------------------------------------------------------------

struct NewtonPolygon {
  long p = 0;
  std::vector<std::pair<int, long>> vertices;  // (index, valuation), Laurent shift removed
  std::vector<std::pair<Rat, int>> segments;   // (slope, horizontal length)
  int span() const;
  // Every root is a p-adic unit: one slope-0 segment with endpoint valuations 0.
  bool roots_on_unit_circle() const;
};

NewtonPolygon newton_polygon(const ZLaurent& f, long p);

// max_i |a_i|_p.
Rat gauss_norm(const ZLaurent& f, long p);
// |lc|_p p^(sum of positive slope * length).
Rat newton_mahler(const ZLaurent& f, long p);
// Both routes, cross-checked; InternalMismatch when they differ.
Rat padic_mahler(const ZLaurent& f, long p);

// ---- Teichmuller data -------------------------------------------------------

struct TeichmullerEntry {
  int degree = 0;  // e
  Int order;       // l
  int multiplicity = 0;  // roots contributed (= e)
  ModPoly factor;
};

struct TeichmullerData {
  long p = 0;
  std::vector<TeichmullerEntry> entries;
  Int m;  // lcm of the orders
  std::vector<Int> orders() const;  // multiset, sorted
};

TeichmullerData teichmuller_data(const ZLaurent& f, long p);

inline constexpr int kMaxResidueExtension = 24;

// Residues of all roots inside the canonical field of p^E elements
// (E = lcm of factor degrees), each raised to the u-th power, encoded as
// sum c_i p^i of their coordinates and sorted.
std::vector<Int> residue_power_orbit(const TeichmullerData& data, const Int& u);
int residue_extension_degree(const TeichmullerData& data);

// ---- split-prime scan -------------------------------------------------------

struct SplitRow {
  long p = 0;
  bool splits = false;
  bool excluded = false;
};

struct SplitScan {
  int d = 0;
  std::vector<SplitRow> rows;
  std::vector<long> violations() const;  // non-excluded primes that do not split
};

// Galois closure degree for degree <= 3; GaloisDegreeUnknown otherwise.
int galois_closure_degree(const ZPoly& f);
SplitScan split_scan(const ZPoly& f, std::optional<int> d, long p_max);

// ---- volume trend -----------------------------------------------------------

struct VolumeRow {
  int k = 0;  // representation dimension
  bool degenerate = false;
  int order_at_one = 0;  // order of vanishing of the Wada invariant at t = 1
  double abs_a = 0;      // |A_k(1)|
  double value = 0;      // log|A_k(1)| / k^2
};

struct VolumeTrend {
  std::vector<VolumeRow> odd;
  std::vector<VolumeRow> even;
};

VolumeTrend volume_trend(const Presentation& pres, const Rep& rho, const AbelianMap& alpha, int k_max,
                         int embedding_index, int digits, int jobs = 1);

}  // namespace tapkit
