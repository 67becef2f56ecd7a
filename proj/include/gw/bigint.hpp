#pragma once

#include <gmpxx.h>

#include <string>

namespace gw {

/// Exact non-negative count. All arithmetic in the library is integral;
/// there is no floating point anywhere.
using CountValue = mpz_class;

/// C(a,b) with the out-of-range convention: 0 whenever b < 0, a < 0, or b > a.
CountValue binomial(long a, long b);

/// m-th Catalan number, binom(2m,m)/(m+1). Requires m >= 1.
CountValue catalan(long m);

/// 2^e for e >= 0.
CountValue pow2(int e);

inline std::string to_decimal(const CountValue& v) { return v.get_str(); }

}  // namespace gw
