#pragma once

#include <gw/bigint.hpp>
#include <gw/memo.hpp>
#include <gw/query.hpp>

#include <vector>

namespace gw {

/// The two special codimensions of a closed-form line query: all remaining
/// constraints have codimension 2.
struct ClosedFormQuery {
  int n = 2;
  int k = 2;
  int l = 2;
};

/// Number of lines in P^n meeting generic linear spaces of the given
/// codimensions, by the floor recursion
///   N(l_1..l_g) = sum_{k=2..g} N_{n-1}(sum_{i<k}(l_i-1), l_k-1, l_{k+1}..l_g)
/// with base N_{1,2}(2,2) = 1. ZeroByConvention inputs count 0.
CountValue count_lines(int n, const std::vector<int>& codims,
                       MemoTable* memo = &global_memo());

/// C(n,l) = binom(2n-l-1, n-1) - binom(2n-l-1, n): lines through one codim-l
/// space and 2n-1-l codim-2 spaces. Requires n >= 2 and 2 <= l <= n.
CountValue closed_form_cnl(int n, int l);

/// N_{1,n}(k,l,2,...,2) = binom(2n-l-k, n-k) - binom(2n-l-k, n), with
/// 2n-k-l codim-2 fillers. Requires n >= 2 and 2 <= k,l <= n.
CountValue closed_form_kl(int n, int k, int l);

}  // namespace gw
