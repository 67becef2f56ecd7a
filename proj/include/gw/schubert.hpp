#pragma once

#include <gw/bigint.hpp>

#include <map>
#include <utility>
#include <vector>

namespace gw {

/// A class in the cohomology of the Grassmannian of lines in P^n: a formal
/// non-negative combination of two-row partitions (p, q), n-1 >= p >= q >= 0.
///
/// Deliberately shares no code with the floor recursion beyond big integers
/// and validation, so agreement between the two is evidentially meaningful.
struct SchubertClass {
  int n = 2;
  std::map<std::pair<int, int>, CountValue> terms;
};

/// Pieri rule: multiply by the special class sigma_a, 0 <= a <= n-1. Each
/// term (p,q) spreads to all (p',q') with p'+q' = p+q+a, p' >= p >= q' >= q,
/// p' <= n-1. Throws std::invalid_argument if a is out of range.
SchubertClass pieri_multiply(const SchubertClass& cls, int a);

/// Brute-force intersection number: multiply sigma_{l_j - 1} for every
/// constraint and read off the coefficient of the point class
/// sigma_{(n-1,n-1)}. Used only to cross-validate count_lines.
CountValue oracle_line_count(int n, const std::vector<int>& codims);

}  // namespace gw
