#pragma once

#include <gw/query.hpp>

#include <vector>

namespace gw {

/// All multisets of codimensions in [2, n] satisfying the dimension condition
/// for degree d in P^n, as non-increasing lists in lexicographic order.
/// Exactly the Countable queries up to permutation.
std::vector<std::vector<int>> countable_multisets(int d, int n);

}  // namespace gw
