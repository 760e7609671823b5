#include "tapkit/mp.hpp"

#include <cstdio>
#include <vector>

namespace tapkit {

namespace {
std::string format(const char* fmt, int digits, mpfr_srcptr v) {
  int n = mpfr_snprintf(nullptr, 0, fmt, digits, v);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), fmt, digits, v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}
}  // namespace

std::string Real::to_fixed(int digits) const { return format("%.*RNf", digits, v_); }

std::string Real::to_sci(int digits) const { return format("%.*RNe", digits > 0 ? digits - 1 : 0, v_); }

}  // namespace tapkit
