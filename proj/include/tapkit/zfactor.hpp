#pragma once

#include <utility>
#include <vector>

#include "tapkit/poly.hpp"

namespace tapkit {

struct IntegerFactorization {
  // Signed so that every factor has a positive leading coefficient.
  Int content;
  // Primitive irreducible factors with multiplicities, sorted by degree and
  // then coefficients.
  std::vector<std::pair<ZPoly, int>> factors;

  ZPoly product() const;
};

inline constexpr int kMaxFactorDegree = 32;

// Exact factorization over the integers (Zassenhaus: a good prime, quadratic
// Hensel lifting on a factor tree, subset recombination).  Throws
// DegreeCapExceeded above degree 32.
IntegerFactorization factor_over_z(const ZPoly& f);

// Ordering used for factor lists: degree, then coefficients low to high.
bool zpoly_less(const ZPoly& a, const ZPoly& b);

}  // namespace tapkit
