#pragma once

#include <vector>

#include "tapkit/mp.hpp"
#include "tapkit/poly.hpp"

namespace tapkit {

// A disc that provably contains exactly one root.
struct RootDisc {
  Complex center;
  Real radius;
};

// Isolating discs for all roots of a squarefree rational polynomial, each of
// radius below 2^-accuracy_bits.  Working precision starts at
// accuracy_bits + 64 and doubles up to 4096 bits; throws PrecisionNotReached
// beyond that.  Roots whose disc meets the real axis are returned real, and
// non-real roots come in exact conjugate pairs.  Sorted by real part, then
// imaginary part.
std::vector<RootDisc> isolate_roots(const QPoly& f, long accuracy_bits);

// Complex evaluation of a rational polynomial.
Complex eval_complex(const QPoly& f, const Complex& z);

// Bits needed for an absolute error of 10^-digits.
long digits_to_bits(int digits);

}  // namespace tapkit
