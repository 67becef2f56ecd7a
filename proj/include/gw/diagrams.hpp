#pragma once

#include <gw/bigint.hpp>
#include <gw/conics.hpp>

#include <string>
#include <vector>

namespace gw {

/// The full tree of recursion choices behind one projected solution.
///
/// Leaves occur only at ambient dimension 2 (two points for a line, five for
/// a conic). A two-floor node expands its two line factors into explicit
/// degree-1 subdiagrams, so diagrams index actual curves, not formula terms.
struct FloorDiagram {
  enum class Kind { Base, Line, OneFloor, TwoFloor };

  int degree = 1;
  int level = 2;                 // ambient dimension at this node
  std::vector<int> codims;       // normalized constraint list at this level
  Kind kind = Kind::Base;
  int k = 0;                     // Line
  OneFloorChoice one;            // OneFloor
  TwoFloorChoice two;            // TwoFloor
  CountValue lift_factor = 1;    // 2^m at a OneFloor node, 1 otherwise
  // Line/OneFloor: {child}; TwoFloor: {line1, line2}.
  std::vector<FloorDiagram> children;
};

/// Number of distinct tropical curves over this diagram: the product of lift
/// factors over all nodes. Every lift has multiplicity 1 in the well-ordered
/// totally decomposing regime.
CountValue solution_count(const FloorDiagram& diag);

/// Canonical one-line serialization; identical input produces byte-identical
/// output. Diagrams order lexicographically on this form.
std::string serialize_diagram(const FloorDiagram& diag);

/// Shape signature: constraint indices replaced by codim and positional
/// class, index sets by codim multisets, the elevator pair kept unordered.
std::string family_signature(const FloorDiagram& diag);

/// Complete, duplicate-free, canonically ordered list of floor diagrams for
/// the query. Solution counts sum to the arithmetic invariant.
std::vector<FloorDiagram> enumerate_floor_diagrams(int d, int n,
                                                   const std::vector<int>& codims);

struct FamilyGroup {
  std::string signature;
  long diagram_count = 0;
  CountValue per_diagram_solutions = 1;
};

/// Diagrams grouped by shape signature, in canonical signature order. All
/// diagrams in a group carry the same solution count.
std::vector<FamilyGroup> family_breakdown(const std::vector<FloorDiagram>& diagrams);

/// Diagram and solution totals computed through the diagram recursion without
/// materializing trees; agrees with enumerate_floor_diagrams at any scale.
struct DiagramTally {
  CountValue diagrams = 0;
  CountValue solutions = 0;
};
DiagramTally tally_floor_diagrams(int d, int n, const std::vector<int>& codims);

/// Maximality check: the arithmetic invariant against the number of distinct
/// tropical solutions from diagram enumeration. Equality means every complex
/// solution is realized by a distinct real/tropical one, and the real count
/// is bounded below by the same number.
struct MaximalityReport {
  CountValue invariant = 0;
  CountValue distinct_solutions = 0;
  CountValue real_lower_bound = 0;
  bool maximal = false;
};
MaximalityReport verify_maximality(int d, int n, const std::vector<int>& codims);

}  // namespace gw
