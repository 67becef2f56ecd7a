#include <gw/schubert.hpp>

#include <gw/query.hpp>

#include <stdexcept>

namespace gw {

SchubertClass pieri_multiply(const SchubertClass& cls, int a) {
  if (a < 0 || a > cls.n - 1)
    throw std::invalid_argument("pieri_multiply: special class out of range");
  SchubertClass out;
  out.n = cls.n;
  for (const auto& [pq, coeff] : cls.terms) {
    const auto [p, q] = pq;
    // Admissible strips: p'+q' = p+q+a with p' >= p >= q' >= q, p' <= n-1.
    for (int qp = q; qp <= p; ++qp) {
      int pp = p + q + a - qp;
      if (pp < p || pp > cls.n - 1) continue;
      out.terms[{pp, qp}] += coeff;
    }
  }
  return out;
}

CountValue oracle_line_count(int n, const std::vector<int>& codims) {
  NormalizedQuery q = validate_query(1, n, codims);
  if (!q.countable()) return 0;

  SchubertClass cls;
  cls.n = n;
  cls.terms[{0, 0}] = 1;
  for (int l : q.constraints.codims) cls = pieri_multiply(cls, l - 1);

  auto it = cls.terms.find({n - 1, n - 1});
  return it == cls.terms.end() ? CountValue(0) : it->second;
}

}  // namespace gw
