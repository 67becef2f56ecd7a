#include <gw/conics.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gw {

namespace {

// Visits every unordered partition {A, B} of {1,...,k-1} into two non-empty
// sets. A always contains index 1, which makes the pair canonical (A is the
// lexicographically smaller set).
template <typename Visit>
void for_each_elevator_partition(int k, Visit visit) {
  const int rest = k - 2;  // elements 2..k-1 distribute freely
  if (rest < 1) return;    // B would be empty
  for (unsigned mask = 0; mask + 1 < (1u << rest); ++mask) {
    // bit j set => element j+2 joins A; B picks up the complement.
    std::vector<int> a{1}, b;
    for (int j = 0; j < rest; ++j) {
      if (mask & (1u << j))
        a.push_back(j + 2);
      else
        b.push_back(j + 2);
    }
    visit(std::move(a), std::move(b));
  }
}

long codim_sum(const std::vector<int>& cs, const std::vector<int>& idx) {
  long s = 0;
  for (int j : idx) s += cs[j - 1] - 1;
  return s;
}

int lift_exponent(long a, long b, long c) {
  return (a == 1) + (b == 1) + (c == 1);
}

}  // namespace

std::vector<OneFloorChoice> enumerate_one_floor_choices(
    int n, const std::vector<int>& codims) {
  NormalizedQuery q = validate_query(2, n, codims);
  std::vector<OneFloorChoice> out;
  if (!q.countable() || n == 2) return out;
  const std::vector<int>& cs = q.constraints.codims;
  const int gamma = static_cast<int>(cs.size());
  for (int k = 3; k <= gamma; ++k) {
    for_each_elevator_partition(k, [&](std::vector<int> a, std::vector<int> b) {
      OneFloorChoice c;
      c.k = k;
      c.m = lift_exponent(codim_sum(cs, a), codim_sum(cs, b), cs[k - 1] - 1);
      c.set_a = std::move(a);
      c.set_b = std::move(b);
      out.push_back(std::move(c));
    });
  }
  return out;
}

CountValue one_floor_contribution(int n, const std::vector<int>& codims,
                                  const OneFloorChoice& choice, MemoTable* memo) {
  NormalizedQuery q = validate_query(2, n, codims);
  if (!q.countable()) return 0;
  const std::vector<int>& cs = q.constraints.codims;
  std::vector<int> arg;
  arg.reserve(cs.size() - choice.k + 4);
  arg.push_back(static_cast<int>(codim_sum(cs, choice.set_a)));
  arg.push_back(static_cast<int>(codim_sum(cs, choice.set_b)));
  arg.push_back(cs[choice.k - 1] - 1);
  arg.insert(arg.end(), cs.begin() + choice.k, cs.end());
  return pow2(choice.m) * count_conics(n - 1, arg, memo);
}

std::vector<TwoFloorChoice> enumerate_two_floor_choices(
    int n, const std::vector<int>& codims) {
  NormalizedQuery q = validate_query(2, n, codims);
  std::vector<TwoFloorChoice> out;
  if (!q.countable() || n == 2) return out;
  const int gamma = static_cast<int>(q.constraints.codims.size());
  for (int k1 = 3; k1 <= gamma; ++k1) {
    for (int k2 = k1 + 1; k2 <= gamma; ++k2) {
      for_each_elevator_partition(k1, [&](std::vector<int> a, std::vector<int> b) {
        // Constraints strictly between k1 and k2 go to the bounded elevator
        // or the lower floor; constraints above k2 go to one of the floors.
        // The upper floor only reaches walls of constraints above it.
        const int mid = k2 - k1 - 1;
        const int top = gamma - k2;
        for (unsigned mmask = 0; mmask < (1u << mid); ++mmask) {
          for (unsigned tmask = 0; tmask < (1u << top); ++tmask) {
            TwoFloorChoice c;
            c.k1 = k1;
            c.k2 = k2;
            c.set_a = a;
            c.set_b = b;
            for (int j = 0; j < mid; ++j) {
              (mmask & (1u << j) ? c.set_d : c.set_c1).push_back(k1 + 1 + j);
            }
            for (int j = 0; j < top; ++j) {
              (tmask & (1u << j) ? c.set_c2 : c.set_c1).push_back(k2 + 1 + j);
            }
            out.push_back(std::move(c));
          }
        }
      });
    }
  }
  return out;
}

TwoFloorLists two_floor_lists(int n, const std::vector<int>& codims,
                              const TwoFloorChoice& choice) {
  NormalizedQuery q = validate_query(2, n, codims);
  if (!q.countable())
    throw std::invalid_argument("two_floor_lists: query is not countable");
  const std::vector<int>& cs = q.constraints.codims;

  TwoFloorLists lists;
  lists.line1.push_back(static_cast<int>(codim_sum(cs, choice.set_a)));
  lists.line1.push_back(static_cast<int>(codim_sum(cs, choice.set_b)));
  lists.line1.push_back(cs[choice.k1 - 1] - 1);
  for (int j : choice.set_c1) lists.line1.push_back(cs[j - 1]);
  lists.line2.push_back(cs[choice.k2 - 1] - 1);
  for (int j : choice.set_c2) lists.line2.push_back(cs[j - 1]);

  // Close each list with the codimension complementary to the dimension of
  // the ruled variety swept by the line family: 2(n-1)-1 - sum(entry - 1).
  for (auto* list : {&lists.line1, &lists.line2}) {
    long s = 0;
    for (int c : *list) s += c - 1;
    list->push_back(static_cast<int>(2L * (n - 1) - 1 - s));
  }
  return lists;
}

CountValue two_floor_contribution(int n, const std::vector<int>& codims,
                                  const TwoFloorChoice& choice, MemoTable* memo) {
  NormalizedQuery q = validate_query(2, n, codims);
  if (!q.countable()) return 0;
  TwoFloorLists lists = two_floor_lists(n, codims, choice);
  CountValue first = count_lines(n - 1, lists.line1, memo);
  if (first == 0) return 0;
  return first * count_lines(n - 1, lists.line2, memo);
}

CountValue count_conics(int n, const std::vector<int>& codims, MemoTable* memo) {
  NormalizedQuery q = validate_query(2, n, codims);
  if (!q.countable()) return 0;
  const std::vector<int>& cs = q.constraints.codims;

  std::string key;
  if (memo) {
    key = memo_key(2, n, cs);
    if (auto hit = memo->lookup(key)) return *hit;
  }

  CountValue total = 0;
  if (n == 2) {
    // Five codim-2 entries survive normalization: one conic through five
    // generic points of the plane.
    total = 1;
  } else {
    for (const OneFloorChoice& c : enumerate_one_floor_choices(n, cs))
      total += one_floor_contribution(n, cs, c, memo);
    for (const TwoFloorChoice& c : enumerate_two_floor_choices(n, cs))
      total += two_floor_contribution(n, cs, c, memo);
  }
  if (memo) memo->insert(key, total);
  return total;
}

namespace {

// Strips codim-1 entries and rejects out-of-range ones; returns false when
// the configuration is empty by convention.
bool normalize_reducible_list(int n, const std::vector<int>& in,
                              std::vector<int>* out) {
  for (int c : in) {
    if (c <= 0 || c > n) return false;
    if (c == 1) continue;
    out->push_back(c);
  }
  return true;
}

long reducible_balance(int l0, const std::vector<int>& l1,
                       const std::vector<int>& l2) {
  long s = l0;
  for (int c : l1) s += c - 1;
  for (int c : l2) s += c - 1;
  return s;
}

}  // namespace

CountValue count_reducible_product(int n, int l0, const std::vector<int>& list1,
                                   const std::vector<int>& list2, MemoTable* memo) {
  if (n < 2) throw std::invalid_argument("count_reducible_product: n must be >= 2");
  if (l0 < 0 || l0 > n) return 0;
  std::vector<int> l1, l2;
  if (!normalize_reducible_list(n, list1, &l1) ||
      !normalize_reducible_list(n, list2, &l2))
    return 0;
  if (reducible_balance(l0, l1, l2) != 3L * n - 2) return 0;

  CountValue product = 1;
  for (const std::vector<int>* list : {&l1, &l2}) {
    long s = 0;
    for (int c : *list) s += c - 1;
    std::vector<int> arg{static_cast<int>(2L * n - 1 - s)};
    arg.insert(arg.end(), list->begin(), list->end());
    product *= count_lines(n, arg, memo);
    if (product == 0) break;
  }
  return product;
}

CountValue count_reducible_tropical(const ReducibleQuery& q, MemoTable* memo) {
  if (q.n < 2) throw std::invalid_argument("count_reducible_tropical: n must be >= 2");
  if (q.l0 < 0 || q.l0 > q.n) return 0;
  std::vector<int> l1, l2;
  if (!normalize_reducible_list(q.n, q.list1, &l1) ||
      !normalize_reducible_list(q.n, q.list2, &l2))
    return 0;
  if (reducible_balance(q.l0, l1, l2) != 3L * q.n - 2) return 0;
  // Per-line feasibility: a line absorbs at most 2n-2 conditions. Outside
  // this range the complementary codimension 2n-1 - sum(l-1) leaves the
  // product route at 0; vanish here to match.
  for (const std::vector<int>* ls : {&l1, &l2}) {
    long s = 0;
    for (int c : *ls) s += c - 1;
    if (s > 2L * q.n - 2) return 0;
  }

  const int g1 = static_cast<int>(l1.size());
  const int g2 = static_cast<int>(l2.size());
  if (q.k0 < 0 || q.k0 > g1 + 1)
    throw std::invalid_argument("count_reducible_tropical: k0 out of range");
  if (q.n == 2) return count_reducible_product(2, q.l0, l1, l2, memo);

  // k0 = 0 means the node constraint sits above all of list1, which places
  // it at slot g1+1 of the height order. A codim-0 node constraint is the
  // whole space, which is higher than everything, so it forces that slot.
  const int keff = (q.k0 == 0 || q.l0 == 0) ? g1 + 1 : q.k0;

  auto presum = [](const std::vector<int>& ls, int k) {
    long s = 0;
    for (int j = 0; j < k - 1; ++j) s += ls[j] - 1;
    return s;
  };
  auto tail_with_head = [](const std::vector<int>& ls, int k,
                           std::initializer_list<long> head) {
    std::vector<int> out;
    for (long h : head) out.push_back(static_cast<int>(h));
    out.push_back(ls[k - 1] - 1);
    out.insert(out.end(), ls.begin() + k, ls.end());
    return out;
  };

  CountValue total = 0;
  auto recurse = [&](long l0p, std::vector<int> a, std::vector<int> b) {
    if (l0p < 0 || l0p > q.n - 1) return;  // empty node constraint
    total += count_reducible_tropical(
        {q.n - 1, static_cast<int>(l0p), std::move(a), std::move(b), 1}, memo);
  };

  // Node on both unbounded elevators: each floor keeps its horizontal
  // constraint, everything below both floors merges into the node constraint.
  for (int k1 = keff; k1 <= g1; ++k1)
    for (int k2 = 1; k2 <= g2; ++k2)
      recurse(q.l0 - 1 + presum(l1, k1) + presum(l2, k2),
              tail_with_head(l1, k1, {}), tail_with_head(l2, k2, {}));

  // Node constraint is itself the horizontal constraint of the lower line;
  // that line's elevator merges everything of list1 below the node.
  if (keff >= 2) {
    std::vector<int> a{static_cast<int>(presum(l1, keff))};
    a.insert(a.end(), l1.begin() + (keff - 1), l1.end());
    for (int k2 = 1; k2 <= g2; ++k2)
      recurse(q.l0 - 1 + presum(l2, k2), a, tail_with_head(l2, k2, {}));
  }

  // Node on the lower floor, whose horizontal constraint lies below the node
  // constraint; the node constraint projects with full codimension.
  for (int k1 = 1; k1 <= keff - 1 && k1 <= g1; ++k1)
    for (int k2 = 1; k2 <= g2; ++k2)
      recurse(q.l0 + presum(l2, k2), tail_with_head(l1, k1, {presum(l1, k1)}),
              tail_with_head(l2, k2, {}));

  return total;
}

}  // namespace gw
