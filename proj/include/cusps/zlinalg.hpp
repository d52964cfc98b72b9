#pragma once

// Exact integer / rational linear algebra: column Hermite form, Smith form,
// linear solving over Z, and signatures of rational symmetric forms.

#include <optional>
#include <vector>

#include "cusps/eigen.hpp"

namespace cusps {

// Extended gcd: returns g >= 0 with s*a + t*b = g.
Int z_ext_gcd(const Int& a, const Int& b, Int& s, Int& t);
Int z_gcd(const Int& a, const Int& b);

struct ColHnf {
  ZMat h;        // A * u = h, column echelon with positive pivots
  ZMat u;        // unimodular
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;  // (row, col)
};

ColHnf z_col_hnf(const ZMat& a);

// Integer solution of A x = b, if one exists.
std::optional<ZVec> z_solve(const ZMat& a, const ZVec& b);

// Basis of { x : A x = 0 } as matrix columns (may have zero columns count).
ZMat z_kernel(const ZMat& a);

// Index [Z^n : column span of A] for A with full row rank n; fails otherwise.
Int z_lattice_index(const ZMat& a);

struct SmithForm {
  ZMat d;  // u * a * v = d, diagonal, nonneg, divisibility chain
  ZMat u;
  ZMat v;
};

SmithForm z_smith(const ZMat& a);

// Nontrivial diagonal entries (> 1) of the Smith form: the cyclic decomposition
// of coker(A) torsion; count of zero columns gives the free rank.
std::vector<Int> z_elementary_divisors(const ZMat& a);

struct FormSignature {
  int pos = 0;
  int neg = 0;
  int rank() const { return pos + neg; }
};

// Signature of a symmetric rational Gram matrix via exact symmetric
// elimination (diagonal pivots plus hyperbolic 2x2 blocks); fails with
// errc::degenerate if the form is singular, reporting an offending index.
FormSignature q_signature(const QMat& g);

Rat q_det(const QMat& m);

// Exact determinant over the field Q(sqrt d) by fraction-free elimination.
FieldElem f_det(const FMat& m);

// Inverse over the field; fails with errc::degenerate on singular input.
FMat f_inverse(const FMat& m);

}  // namespace cusps
