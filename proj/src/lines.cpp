#include <gw/lines.hpp>

#include <stdexcept>

namespace gw {

CountValue count_lines(int n, const std::vector<int>& codims, MemoTable* memo) {
  NormalizedQuery q = validate_query(1, n, codims);
  if (!q.countable()) return 0;
  const std::vector<int>& cs = q.constraints.codims;

  std::string key;
  if (memo) {
    key = memo_key(1, n, cs);
    if (auto hit = memo->lookup(key)) return *hit;
  }

  CountValue total = 0;
  if (n == 2) {
    // Normalization leaves exactly two codim-2 entries: one line through two
    // generic points of the plane.
    total = 1;
  } else {
    const int gamma = static_cast<int>(cs.size());
    long merged = cs[0] - 1;  // sum_{i<k}(l_i - 1)
    for (int k = 2; k <= gamma; ++k) {
      std::vector<int> arg;
      arg.reserve(gamma - k + 2);
      arg.push_back(static_cast<int>(merged));
      arg.push_back(cs[k - 1] - 1);
      arg.insert(arg.end(), cs.begin() + k, cs.end());
      total += count_lines(n - 1, arg, memo);
      merged += cs[k - 1] - 1;
    }
  }
  if (memo) memo->insert(key, total);
  return total;
}

CountValue closed_form_cnl(int n, int l) {
  if (n < 2 || l < 2 || l > n)
    throw std::invalid_argument("closed_form_cnl: need n >= 2 and 2 <= l <= n");
  return binomial(2L * n - l - 1, n - 1) - binomial(2L * n - l - 1, n);
}

CountValue closed_form_kl(int n, int k, int l) {
  if (n < 2 || k < 2 || k > n || l < 2 || l > n)
    throw std::invalid_argument("closed_form_kl: need n >= 2 and 2 <= k,l <= n");
  return binomial(2L * n - l - k, n - k) - binomial(2L * n - l - k, n);
}

}  // namespace gw
