#pragma once

// Twisted homology of finite cyclic covers by exact integer linear algebra.

#include <map>
#include <optional>
#include <vector>

#include "tapkit/knotgroup.hpp"
#include "tapkit/matrix.hpp"
#include "tapkit/twistpoly.hpp"

namespace tapkit {

// Permutation matrix of t acting on Z[t]/(t^n - 1): row i has its 1 in
// column i + 1 mod n.
IntMatrix cyclic_shift_matrix(int n);

// Substitutes t -> T_n and each coefficient c in Z[a] -> its regular
// representation. Entry (i, j) becomes a (d n) x (d n) block indexed by
// (t-slot, basis index) with the t-slot major.
IntMatrix expand_to_integer(const LMatrix& m, int n, const FieldPtr& field);

struct SmithForm {
  std::size_t rank = 0;
  std::vector<Int> divisors;  // d_1 | d_2 | ... , all positive, length rank
  Int torsion() const;        // product of the divisors
};

SmithForm smith_form(IntMatrix a);

// Rows of a basis of the integer left kernel {v : v a = 0}, together with
// the coordinates of any row-space element: u a = h in Hermite-like form.
struct LeftKernel {
  IntMatrix basis;  // k x rows(a)
  IntMatrix u;      // unimodular, u a has zero rows exactly in its last k rows
  IntMatrix u_inv;
};
LeftKernel left_kernel(const IntMatrix& a);

struct CoverHomology {
  int n = 0;
  long betti = 0;
  Int torsion = 1;
};

// H_1 of the n-fold cyclic cover of the presentation complex with local
// coefficients (Z[a])^N twisted by rho; row-vector chain convention.
CoverHomology torsion_of_cover(const Presentation& pres, const Rep& rho, const AbelianMap& alpha, int n);

struct GrowthRow {
  int n = 0;
  long betti = 0;
  Int torsion;
  ZPoly psi;  // gcd(norm polynomial, t^n - 1)
  Int r_n;    // Res(norm polynomial, (t^n - 1) / psi)
  Rat ratio;  // torsion / (|r_n| prod_{p in S} |r_n|_p)
  std::map<long, Rat> torsion_p_norms;  // |torsion|_p for the report primes
  double torsion_root = 0;  // torsion^(1/n)
  std::map<long, double> torsion_p_roots;  // |torsion|_p^(1/n)
};

struct GrowthReport {
  ZLaurent norm_poly;
  std::vector<GrowthRow> rows;
  std::vector<long> primes;
  std::vector<long> s_primes;
  double mahler = 0;
  std::map<long, Rat> padic_mahler;
};

struct GrowthOptions {
  int n_max = 8;
  std::vector<long> primes;    // |torsion|_p and m_p are reported for these
  std::vector<long> s_primes;  // primes inverted in the coefficient ring
  int jobs = 1;
  int digits = 20;
};

// Norm polynomial used for growth: primitive norm of Delta_{rho,1}.
ZLaurent norm_of_twisted_alexander(const Presentation& pres, const Rep& rho, const AbelianMap& alpha);

GrowthReport growth_report(const Presentation& pres, const Rep& rho, const AbelianMap& alpha,
                           const GrowthOptions& opts);

// Psi_n and r_n from the cyclotomic factor list of an integer polynomial.
ZPoly psi_n(const CyclotomicSplit& split, int n);
Int r_n(const ZLaurent& norm_poly, const ZPoly& psi, int n);

}  // namespace tapkit
