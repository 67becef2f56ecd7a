#include <gw/bigint.hpp>

#include <stdexcept>

namespace gw {

CountValue binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  CountValue r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

CountValue catalan(long m) {
  if (m < 1) throw std::invalid_argument("catalan: m must be >= 1");
  return binomial(2 * m, m) / (m + 1);
}

CountValue pow2(int e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  CountValue r = 1;
  r <<= e;
  return r;
}

}  // namespace gw
