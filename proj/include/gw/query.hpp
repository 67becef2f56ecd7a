#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gw {

/// A configuration of linear-space constraints: the ambient dimension and the
/// ordered list of constraint codimensions. Order encodes the height order of
/// the stretched configuration; counts never depend on it.
struct ConstraintList {
  int ambient_dim = 2;
  std::vector<int> codims;
};

enum class QueryStatus { Countable, ZeroByConvention };

/// Result of validating a raw (degree, dimension, codims) query.
///
/// Codim-1 entries are dropped (a generic hyperplane meets every rational
/// curve, imposing no condition). Entries <= 0 or >= n+1, or a failed
/// dimension condition sum(l_j - 1) = (n+1)d + (n-3), give ZeroByConvention:
/// a legitimate zero-valued query, not an error.
struct NormalizedQuery {
  int degree = 1;
  ConstraintList constraints;
  int dropped_hyperplanes = 0;
  QueryStatus status = QueryStatus::ZeroByConvention;

  bool countable() const { return status == QueryStatus::Countable; }
};

/// Number of conditions a degree-d rational curve in P^n must absorb.
inline long dimension_condition(int d, int n) {
  return static_cast<long>(n + 1) * d + (n - 3);
}

/// Validates and normalizes a counting query. Throws std::invalid_argument on
/// structurally malformed input (d not in {1,2}, n < 2, empty list); every
/// other input resolves to Countable or ZeroByConvention.
NormalizedQuery validate_query(int d, int n, const std::vector<int>& codims);

/// Re-validates an already-normalized query; idempotent (identical output,
/// already-dropped hyperplanes stay accounted for).
NormalizedQuery validate_query(const NormalizedQuery& q);

bool operator==(const NormalizedQuery& a, const NormalizedQuery& b);

}  // namespace gw
