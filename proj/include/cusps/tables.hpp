#pragma once

// Candidate tables for the divisor invariant of one-dimensional boundary
// components whose stabilizer has small index, plus membership tests against
// the bundled families of compatible discriminant-group shapes.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cusps/field.hpp"

namespace cusps {

// Index cases with candidate tables.  The s-variants are the special flavor
// of the same index; which (d, case) pairs exist depends on the unit group.
enum class CaseKind { idx2, idx3, idx4, idx6, sidx2, sidx3 };

const char* case_name(CaseKind kind);
CaseKind parse_case(const std::string& name);

// A validated field/case combination together with the element whose
// divisibility by div(a, b) characterizes candidate pairs.
struct CaseTag {
  int d;
  CaseKind kind;
  FieldElem test_elem;
};

// idx2 exists for every supported d; sidx2 for d = -1 and -3; idx4 for
// d = -1; idx3, sidx3 and idx6 for d = -3.  Anything else is bad_input.
CaseTag make_case(int d, CaseKind kind);

// The divisor encoded by an integer pair: div = s / (2 sqrt d) where
// s = a + b*sqrt(d) for d = 2,3 mod 4 and s = 2a + b*(1 + sqrt d) for
// d = 1 mod 4.  (0,0) is bad_input.
FieldElem pair_divisor(int d, int a, int b);

// gcd of the integral-basis coordinates of s; the translation lattice of the
// boundary stabilizer is scaled by this factor, and candidates require > 1.
Int pair_gcd(int d, int a, int b);

// All pairs with pair_gcd > 1 whose divisor divides the test element.  The
// divisibility bounds norm(div) by norm(test_elem), hence norm(s) by
// 4|d|*norm(test_elem), so the scanned box provably covers every candidate.
std::set<std::pair<int, int>> div_candidates(const CaseTag& tag);

// The bundled reference list for the same case (unknown_case if absent).
std::set<std::pair<int, int>> reference_div_pairs(int d, CaseKind kind);

// True iff a discriminant group of the given shape (cyclic factors
// O/divisor with multiplicities) appears among the bundled families for this
// case and the divisor class of div_ab, for some choice of the family's free
// parameters.  unknown_case when no bundled family covers that divisor class.
bool appendix_membership(const CaseTag& tag, std::pair<int, int> div_ab,
                         const std::vector<std::pair<FieldElem, int>>& structure);

}  // namespace cusps
