#include <gw/diagrams.hpp>

#include <gw/multisets.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace gw {

namespace {

void append_set(std::ostream& os, const std::vector<int>& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
}

std::vector<int> codims_of(const std::vector<int>& cs, const std::vector<int>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (int j : idx) out.push_back(cs[j - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FloorDiagram> enumerate_line_diagrams(int n, const std::vector<int>& codims);

std::vector<FloorDiagram> enumerate_conic_diagrams(int n, const std::vector<int>& codims) {
  std::vector<FloorDiagram> out;
  NormalizedQuery q = validate_query(2, n, codims);
  if (!q.countable()) return out;
  const std::vector<int>& cs = q.constraints.codims;

  if (n == 2) {
    FloorDiagram leaf;
    leaf.degree = 2;
    leaf.level = 2;
    leaf.codims = cs;
    out.push_back(std::move(leaf));
    return out;
  }

  for (const OneFloorChoice& c : enumerate_one_floor_choices(n, cs)) {
    std::vector<int> arg;
    long sa = 0, sb = 0;
    for (int j : c.set_a) sa += cs[j - 1] - 1;
    for (int j : c.set_b) sb += cs[j - 1] - 1;
    arg.push_back(static_cast<int>(sa));
    arg.push_back(static_cast<int>(sb));
    arg.push_back(cs[c.k - 1] - 1);
    arg.insert(arg.end(), cs.begin() + c.k, cs.end());
    for (FloorDiagram& sub : enumerate_conic_diagrams(n - 1, arg)) {
      FloorDiagram d;
      d.degree = 2;
      d.level = n;
      d.codims = cs;
      d.kind = FloorDiagram::Kind::OneFloor;
      d.one = c;
      d.lift_factor = pow2(c.m);
      d.children.push_back(std::move(sub));
      out.push_back(std::move(d));
    }
  }

  for (const TwoFloorChoice& c : enumerate_two_floor_choices(n, cs)) {
    TwoFloorLists lists = two_floor_lists(n, cs, c);
    std::vector<FloorDiagram> line1 = enumerate_line_diagrams(n - 1, lists.line1);
    if (line1.empty()) continue;
    std::vector<FloorDiagram> line2 = enumerate_line_diagrams(n - 1, lists.line2);
    for (const FloorDiagram& d1 : line1) {
      for (const FloorDiagram& d2 : line2) {
        FloorDiagram d;
        d.degree = 2;
        d.level = n;
        d.codims = cs;
        d.kind = FloorDiagram::Kind::TwoFloor;
        d.two = c;
        d.children = {d1, d2};
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

std::vector<FloorDiagram> enumerate_line_diagrams(int n, const std::vector<int>& codims) {
  std::vector<FloorDiagram> out;
  NormalizedQuery q = validate_query(1, n, codims);
  if (!q.countable()) return out;
  const std::vector<int>& cs = q.constraints.codims;

  if (n == 2) {
    FloorDiagram leaf;
    leaf.degree = 1;
    leaf.level = 2;
    leaf.codims = cs;
    out.push_back(std::move(leaf));
    return out;
  }

  const int gamma = static_cast<int>(cs.size());
  long merged = cs[0] - 1;
  for (int k = 2; k <= gamma; ++k) {
    std::vector<int> arg;
    arg.push_back(static_cast<int>(merged));
    arg.push_back(cs[k - 1] - 1);
    arg.insert(arg.end(), cs.begin() + k, cs.end());
    for (FloorDiagram& sub : enumerate_line_diagrams(n - 1, arg)) {
      FloorDiagram d;
      d.degree = 1;
      d.level = n;
      d.codims = cs;
      d.kind = FloorDiagram::Kind::Line;
      d.k = k;
      d.children.push_back(std::move(sub));
      out.push_back(std::move(d));
    }
    merged += cs[k - 1] - 1;
  }
  return out;
}

}  // namespace

CountValue solution_count(const FloorDiagram& diag) {
  CountValue total = diag.lift_factor;
  for (const FloorDiagram& child : diag.children) total *= solution_count(child);
  return total;
}

std::string serialize_diagram(const FloorDiagram& diag) {
  std::ostringstream os;
  switch (diag.kind) {
    case FloorDiagram::Kind::Base:
      os << "base(d=" << diag.degree << ",n=2,points=" << diag.codims.size() << ')';
      break;
    case FloorDiagram::Kind::Line:
      os << "line(n=" << diag.level << ",k=" << diag.k
         << ",sub=" << serialize_diagram(diag.children[0]) << ')';
      break;
    case FloorDiagram::Kind::OneFloor:
      os << "one_floor(n=" << diag.level << ",k=" << diag.one.k << ",A=";
      append_set(os, diag.one.set_a);
      os << ",B=";
      append_set(os, diag.one.set_b);
      os << ",m=" << diag.one.m << ",lift=" << diag.lift_factor.get_str()
         << ",sub=" << serialize_diagram(diag.children[0]) << ')';
      break;
    case FloorDiagram::Kind::TwoFloor:
      os << "two_floor(n=" << diag.level << ",k1=" << diag.two.k1
         << ",k2=" << diag.two.k2 << ",A=";
      append_set(os, diag.two.set_a);
      os << ",B=";
      append_set(os, diag.two.set_b);
      os << ",C1=";
      append_set(os, diag.two.set_c1);
      os << ",C2=";
      append_set(os, diag.two.set_c2);
      os << ",D=";
      append_set(os, diag.two.set_d);
      os << ",line1=" << serialize_diagram(diag.children[0])
         << ",line2=" << serialize_diagram(diag.children[1]) << ')';
      break;
  }
  return os.str();
}

std::string family_signature(const FloorDiagram& diag) {
  std::ostringstream os;
  const std::vector<int>& cs = diag.codims;
  switch (diag.kind) {
    case FloorDiagram::Kind::Base:
      os << "base(d=" << diag.degree << ",points=" << cs.size() << ')';
      break;
    case FloorDiagram::Kind::Line: {
      // Horizontal codim, codims merged below, walls above.
      std::vector<int> below(cs.begin(), cs.begin() + (diag.k - 1));
      std::vector<int> above(cs.begin() + diag.k, cs.end());
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      os << "line(k:" << cs[diag.k - 1] << ",below=";
      append_set(os, below);
      os << ",above=";
      append_set(os, above);
      os << ",sub=" << family_signature(diag.children[0]) << ')';
      break;
    }
    case FloorDiagram::Kind::OneFloor: {
      std::vector<int> ma = codims_of(cs, diag.one.set_a);
      std::vector<int> mb = codims_of(cs, diag.one.set_b);
      if (mb < ma) std::swap(ma, mb);  // elevators are interchangeable
      std::vector<int> above(cs.begin() + diag.one.k, cs.end());
      std::sort(above.begin(), above.end());
      os << "one_floor(k:" << cs[diag.one.k - 1] << ",E=";
      append_set(os, ma);
      os << '|';
      append_set(os, mb);
      os << ",above=";
      append_set(os, above);
      os << ",sub=" << family_signature(diag.children[0]) << ')';
      break;
    }
    case FloorDiagram::Kind::TwoFloor: {
      std::vector<int> ma = codims_of(cs, diag.two.set_a);
      std::vector<int> mb = codims_of(cs, diag.two.set_b);
      if (mb < ma) std::swap(ma, mb);
      // Positional classes: C1 splits into its between-floors and
      // above-upper-floor parts.
      std::vector<int> c1_between, c1_above;
      for (int j : diag.two.set_c1)
        (j < diag.two.k2 ? c1_between : c1_above).push_back(cs[j - 1]);
      std::sort(c1_between.begin(), c1_between.end());
      std::sort(c1_above.begin(), c1_above.end());
      os << "two_floor(k1:" << cs[diag.two.k1 - 1] << ",k2:" << cs[diag.two.k2 - 1]
         << ",E=";
      append_set(os, ma);
      os << '|';
      append_set(os, mb);
      os << ",D=";
      append_set(os, codims_of(cs, diag.two.set_d));
      os << ",C1between=";
      append_set(os, c1_between);
      os << ",C1above=";
      append_set(os, c1_above);
      os << ",C2=";
      append_set(os, codims_of(cs, diag.two.set_c2));
      os << ",line1=" << family_signature(diag.children[0])
         << ",line2=" << family_signature(diag.children[1]) << ')';
      break;
    }
  }
  return os.str();
}

std::vector<FloorDiagram> enumerate_floor_diagrams(int d, int n,
                                                   const std::vector<int>& codims) {
  validate_query(d, n, codims);  // surface malformed input as an error
  std::vector<FloorDiagram> out = d == 1 ? enumerate_line_diagrams(n, codims)
                                         : enumerate_conic_diagrams(n, codims);
  std::stable_sort(out.begin(), out.end(),
                   [](const FloorDiagram& a, const FloorDiagram& b) {
                     return serialize_diagram(a) < serialize_diagram(b);
                   });
  return out;
}

std::vector<FamilyGroup> family_breakdown(const std::vector<FloorDiagram>& diagrams) {
  std::map<std::string, FamilyGroup> groups;
  for (const FloorDiagram& d : diagrams) {
    std::string sig = family_signature(d);
    auto [it, fresh] = groups.try_emplace(sig);
    if (fresh) {
      it->second.signature = sig;
      it->second.per_diagram_solutions = solution_count(d);
    }
    ++it->second.diagram_count;
  }
  std::vector<FamilyGroup> out;
  out.reserve(groups.size());
  for (auto& [sig, g] : groups) out.push_back(std::move(g));
  return out;
}

namespace {

// Memoized diagram/solution totals; structural recursion over the same choice
// sets as the enumerator, counting instead of materializing.
//
// Unlike the counts themselves, the number of diagrams depends on the order
// of the constraint list (it fixes the height order), so the memo key must
// preserve the order instead of sorting to a multiset.
std::string ordered_key(int d, int n, const std::vector<int>& codims) {
  std::string key = std::to_string(d) + ":" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < codims.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(codims[i]);
  }
  return key;
}
DiagramTally tally_lines(int n, const std::vector<int>& codims, MemoTable* dmemo,
                         MemoTable* smemo);

DiagramTally tally_conics(int n, const std::vector<int>& codims, MemoTable* dmemo,
                          MemoTable* smemo) {
  NormalizedQuery q = validate_query(2, n, codims);
  if (!q.countable()) return {0, 0};
  const std::vector<int>& cs = q.constraints.codims;
  std::string key = ordered_key(2, n, cs);
  if (auto d = dmemo->lookup(key)) return {*d, *smemo->lookup(key)};

  DiagramTally t;
  if (n == 2) {
    t = {1, 1};
  } else {
    for (const OneFloorChoice& c : enumerate_one_floor_choices(n, cs)) {
      long sa = 0, sb = 0;
      for (int j : c.set_a) sa += cs[j - 1] - 1;
      for (int j : c.set_b) sb += cs[j - 1] - 1;
      std::vector<int> arg{static_cast<int>(sa), static_cast<int>(sb),
                           cs[c.k - 1] - 1};
      arg.insert(arg.end(), cs.begin() + c.k, cs.end());
      DiagramTally sub = tally_conics(n - 1, arg, dmemo, smemo);
      t.diagrams += sub.diagrams;
      t.solutions += pow2(c.m) * sub.solutions;
    }
    for (const TwoFloorChoice& c : enumerate_two_floor_choices(n, cs)) {
      TwoFloorLists lists = two_floor_lists(n, cs, c);
      DiagramTally t1 = tally_lines(n - 1, lists.line1, dmemo, smemo);
      if (t1.diagrams == 0) continue;
      DiagramTally t2 = tally_lines(n - 1, lists.line2, dmemo, smemo);
      t.diagrams += t1.diagrams * t2.diagrams;
      t.solutions += t1.solutions * t2.solutions;
    }
  }
  dmemo->insert(key, t.diagrams);
  smemo->insert(key, t.solutions);
  return t;
}

DiagramTally tally_lines(int n, const std::vector<int>& codims, MemoTable* dmemo,
                         MemoTable* smemo) {
  NormalizedQuery q = validate_query(1, n, codims);
  if (!q.countable()) return {0, 0};
  const std::vector<int>& cs = q.constraints.codims;
  std::string key = ordered_key(1, n, cs);
  if (auto d = dmemo->lookup(key)) return {*d, *smemo->lookup(key)};

  DiagramTally t;
  if (n == 2) {
    t = {1, 1};
  } else {
    const int gamma = static_cast<int>(cs.size());
    long merged = cs[0] - 1;
    for (int k = 2; k <= gamma; ++k) {
      std::vector<int> arg{static_cast<int>(merged), cs[k - 1] - 1};
      arg.insert(arg.end(), cs.begin() + k, cs.end());
      DiagramTally sub = tally_lines(n - 1, arg, dmemo, smemo);
      t.diagrams += sub.diagrams;
      t.solutions += sub.solutions;
      merged += cs[k - 1] - 1;
    }
  }
  dmemo->insert(key, t.diagrams);
  smemo->insert(key, t.solutions);
  return t;
}

MemoTable& diagram_memo() {
  static MemoTable t;
  return t;
}
MemoTable& solution_memo() {
  static MemoTable t;
  return t;
}

}  // namespace

DiagramTally tally_floor_diagrams(int d, int n, const std::vector<int>& codims) {
  validate_query(d, n, codims);
  return d == 1 ? tally_lines(n, codims, &diagram_memo(), &solution_memo())
                : tally_conics(n, codims, &diagram_memo(), &solution_memo());
}

MaximalityReport verify_maximality(int d, int n, const std::vector<int>& codims) {
  MaximalityReport report;
  report.invariant = d == 1 ? count_lines(n, codims) : count_conics(n, codims);
  report.distinct_solutions = tally_floor_diagrams(d, n, codims).solutions;
  report.real_lower_bound = report.distinct_solutions;
  report.maximal = report.invariant == report.distinct_solutions;
  return report;
}

}  // namespace gw
