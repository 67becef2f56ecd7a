#include <gw/query.hpp>

#include <numeric>

namespace gw {

NormalizedQuery validate_query(int d, int n, const std::vector<int>& codims) {
  if (d != 1 && d != 2) throw std::invalid_argument("degree must be 1 or 2");
  if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  if (codims.empty()) throw std::invalid_argument("constraint list is empty");

  NormalizedQuery q;
  q.degree = d;
  q.constraints.ambient_dim = n;
  q.status = QueryStatus::Countable;

  long sum = 0;
  for (int c : codims) {
    if (c <= 0 || c >= n + 1) {
      q.status = QueryStatus::ZeroByConvention;
      continue;
    }
    if (c == 1) {
      ++q.dropped_hyperplanes;  // imposes l-1 = 0 conditions
      continue;
    }
    q.constraints.codims.push_back(c);
    sum += c - 1;
  }
  if (q.status == QueryStatus::Countable && sum != dimension_condition(d, n))
    q.status = QueryStatus::ZeroByConvention;
  return q;
}

NormalizedQuery validate_query(const NormalizedQuery& q) {
  if (q.constraints.codims.empty()) return q;  // nothing survived; stable
  NormalizedQuery r = validate_query(q.degree, q.constraints.ambient_dim,
                                     q.constraints.codims);
  r.dropped_hyperplanes += q.dropped_hyperplanes;
  return r;
}

bool operator==(const NormalizedQuery& a, const NormalizedQuery& b) {
  return a.degree == b.degree &&
         a.constraints.ambient_dim == b.constraints.ambient_dim &&
         a.constraints.codims == b.constraints.codims &&
         a.dropped_hyperplanes == b.dropped_hyperplanes && a.status == b.status;
}

}  // namespace gw
