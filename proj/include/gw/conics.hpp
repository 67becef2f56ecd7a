#pragma once

#include <gw/bigint.hpp>
#include <gw/lines.hpp>
#include <gw/memo.hpp>
#include <gw/query.hpp>

#include <vector>

namespace gw {

/// One degree-2 floor: the floor meets the horizontal constraint with index k
/// (1-based); the two unbounded elevators meet the constraints indexed by the
/// unordered pair {A, B}, a partition of {1,...,k-1} into non-empty sets.
/// m counts codim-1 spaces among the three projected constraints; each one
/// doubles the number of lifts (a conic meets a hyperplane in two points).
struct OneFloorChoice {
  int k = 0;
  std::vector<int> set_a;  // stored with the lexicographically smaller set first
  std::vector<int> set_b;
  int m = 0;
};

/// Two degree-1 floors: the lower floor meets constraint k1 and the walls of
/// the constraints in C1, the upper floor meets k2 and the walls of C2; the
/// bounded elevator meets D, the two unbounded elevators meet {A, B}.
/// The seven index sets partition {1,...,gamma} \ {k1,k2}.
struct TwoFloorChoice {
  int k1 = 0;
  int k2 = 0;
  std::vector<int> set_a;
  std::vector<int> set_b;
  std::vector<int> set_c1;
  std::vector<int> set_c2;
  std::vector<int> set_d;
};

/// A reducible conic query: two lines glued at a node constrained to a
/// codim-l0 space. k0 is the placement index of the node constraint in the
/// height order of list1: the smallest j with the j-th element of list1
/// higher than L_0, or 0 if none (node constraint above all of list1).
struct ReducibleQuery {
  int n = 2;
  int l0 = 0;
  std::vector<int> list1;
  std::vector<int> list2;
  int k0 = 1;
};

/// Number of conics in P^n meeting generic linear spaces of the given
/// codimensions, by floor decomposition: a conic has either one floor of
/// degree 2 or two floors of degree 1. Base: N_{2,2}(2,2,2,2,2) = 1.
CountValue count_conics(int n, const std::vector<int>& codims,
                        MemoTable* memo = &global_memo());

/// All (k, {A,B}) with A, B a non-empty unordered partition of {1,...,k-1}.
/// Choices whose projected query fails validation are included; they
/// contribute 0. Empty for n = 2.
std::vector<OneFloorChoice> enumerate_one_floor_choices(
    int n, const std::vector<int>& codims);

/// 2^m x N_{2,n-1} of the projected configuration
/// [sum_A(l-1), sum_B(l-1), l_k - 1, l_{k+1}, ..., l_gamma].
CountValue one_floor_contribution(int n, const std::vector<int>& codims,
                                  const OneFloorChoice& choice,
                                  MemoTable* memo = &global_memo());

/// All two-floor tuples with both elevator sets non-empty and C2 restricted
/// to indices above k2 (walls extend downward, so the upper floor only meets
/// walls of higher constraints).
std::vector<TwoFloorChoice> enumerate_two_floor_choices(
    int n, const std::vector<int>& codims);

/// The constraint lists of the two projected degree-1 problems, each closed
/// off with the complementary codimension 2(n-1)-1 - sum(entry - 1) of the
/// node-side linear space.
struct TwoFloorLists {
  std::vector<int> line1;
  std::vector<int> line2;
};
TwoFloorLists two_floor_lists(int n, const std::vector<int>& codims,
                              const TwoFloorChoice& choice);

/// Product of the two projected line counts.
CountValue two_floor_contribution(int n, const std::vector<int>& codims,
                                  const TwoFloorChoice& choice,
                                  MemoTable* memo = &global_memo());

/// Reducible conics as a product of two line counts:
///   N^red = prod_i N_{1,n}(2n-1 - sum_j(l^i_j - 1), l^i_1, ..., l^i_gi),
/// 0 unless l0 + sum sum (l^i_j - 1) = 3n-2.
CountValue count_reducible_product(int n, int l0, const std::vector<int>& list1,
                                   const std::vector<int>& list2,
                                   MemoTable* memo = &global_memo());

/// Reducible conics by the tropical three-family recursion on the dimension;
/// equals count_reducible_product for every valid query and every placement.
CountValue count_reducible_tropical(const ReducibleQuery& q,
                                    MemoTable* memo = &global_memo());

}  // namespace gw
