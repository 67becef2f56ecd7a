#include <gw/multisets.hpp>

#include <algorithm>

namespace gw {

namespace {

void extend(int remaining, int max_part, std::vector<int>* current,
            std::vector<std::vector<int>>* out) {
  if (remaining == 0) {
    out->push_back(*current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current->push_back(part + 1);  // part = codim - 1
    extend(remaining - part, part, current, out);
    current->pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> countable_multisets(int d, int n) {
  std::vector<std::vector<int>> out;
  long target = dimension_condition(d, n);
  if (target <= 0) return out;
  std::vector<int> current;
  extend(static_cast<int>(target), n - 1, &current, &out);
  return out;
}

}  // namespace gw
