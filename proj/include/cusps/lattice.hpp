#pragma once

// Hermitian lattices over the rings of integers: validation and signature,
// dual lattice, discriminant group, trace form, orthogonal complements.

#include <vector>

#include "json.hpp"

#include "cusps/eigen.hpp"
#include "cusps/normform.hpp"
#include "cusps/numberring.hpp"
#include "cusps/zlinalg.hpp"

namespace cusps {

// Gram matrix H with H_jk = <b_j, b_k>, conjugate-symmetric, entries in the
// inverse different; the pairing is linear in the first slot.
struct HermitianLattice {
  int d = 0;
  FMat gram;
  Eigen::Index rank() const { return gram.rows(); }
};

struct Signature {
  int pos = 0;
  int neg = 0;
};

// JSON encoding: {"d": int, "gram": [[["p/q","r/s"], ...], ...]} where the
// pair encodes x + y sqrt(d).  Plain strings like "1-1/2*sqrt(-3)" are also
// accepted for entries; emission always uses the pair form, fully reduced.
HermitianLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const HermitianLattice& lat);

// Checks conjugate symmetry, integrality (entries in the inverse different),
// and nondegeneracy; returns the Hermitian signature computed by exact
// symmetric elimination on the trace form.
Signature validate(const HermitianLattice& lat);

// <x, y> = x^T H conj(y).
FieldElem inner(const HermitianLattice& lat, const FVec& x, const FVec& y);

bool vec_integral(const FVec& x, int d);

// x in the dual lattice: H^T x has all entries in the inverse different.
bool in_dual(const HermitianLattice& lat, const FVec& x);

// Column basis of the dual lattice in L-coordinates: inv_diff * (H^T)^{-1}.
FMat dual_coords(const HermitianLattice& lat);

struct DiscGroup {
  std::vector<FieldElem> divisors;  // nontrivial, canonical, c_1 | c_2 | ...
  std::vector<FVec> generators;     // dual vectors, one per divisor, reduced mod L
  Int order = 1;                    // product of divisor norms = |L^dual / L|
};

DiscGroup discriminant_group(const HermitianLattice& lat);

// Gram of the trace form (x, y) = Tr<x, y> on the interleaved Z-basis
// {b_1, omega b_1, b_2, omega b_2, ...}; always integral.
ZMat trace_gram(const HermitianLattice& lat);

// Coordinates of x on that interleaved Z-basis (rational in general).
QVec rational_coords(const FVec& x, int d);
FVec from_rational_coords(const QVec& c, int d);

struct Complement {
  FMat basis;              // columns: primitive sublattice basis in L-coords
  HermitianLattice gram;   // induced Gram (may be degenerate; not validated)
};

// { x in L : <x, s> = 0 for all s in S } with its induced Gram.
Complement orth_complement(const HermitianLattice& lat, const std::vector<FVec>& span);

}  // namespace cusps
