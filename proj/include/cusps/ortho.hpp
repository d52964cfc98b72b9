#pragma once

// Bridge from Hermitian lattices to their trace quadratic forms: matrices of
// F-linear maps on the interleaved integer basis, the multiplication-by-
// sqrt(d) matrix, the rank-2 isotropic plane attached to a cusp, its
// classification computed purely with integer matrices, and the predicted
// image of each Hermitian cusp type.

#include "json.hpp"

#include "cusps/cusp.hpp"
#include "cusps/lattice.hpp"

namespace cusps {

// Matrix of the F-linear map m on the interleaved basis b_1, omega b_1,
// b_2, omega b_2, ...  Multiplicative and injective; sends Hermitian
// isometries to isometries of the trace form.
QMat embed(const HermitianLattice& lat, const FMat& m);

// Matrix of multiplication by sqrt(d) on the interleaved basis.  Squares to
// d times the identity and conjugates embedded maps to d times themselves.
ZMat j_matrix(const HermitianLattice& lat);

// Rank-2 totally isotropic plane attached to a cusp of the trace lattice.
struct OrthoCusp {
  // 2(n+1) x 2 integer matrix whose columns are the interleaved coordinates
  // of e and omega*e.
  ZMat basis;
  // The scaled transvections along e stay integral exactly for parameters in
  // (1/lambda_den) * Z.
  Int lambda_den = 1;
};

// Computes the plane spanned by e and omega*e together with its translation
// denominator.  Requires e primitive isotropic; rejects planes whose span is
// not a primitive rank-2 sublattice.
OrthoCusp ortho_cusp(const HermitianLattice& lat, const FVec& e);

// Boundary type of a 1-dimensional cusp of an orthogonal modular variety:
// the translations along the plane come with no extra sign (R1_O), with an
// independent minus-identity (R2_O), or with a sign glued to a half-step
// translation (I2_O); only the last is irregular.
enum class OrthoKind { R1_O, R2_O, I2_O };

const char* ortho_kind_name(OrthoKind kind);

constexpr bool ortho_kind_regular(OrthoKind kind) { return kind != OrthoKind::I2_O; }

struct OrthoType {
  OrthoKind kind = OrthoKind::R1_O;
  // Minimal positive translation parameter realized inside the subgroup.
  Rat lambda0 = 0;
  // Parameter t with -E(t) in the subgroup; meaningful unless kind is R1_O.
  Rat star_witness = 0;

  bool regular() const { return ortho_kind_regular(kind); }
};

// Classifies the image plane of a cusp inside the chosen subgroup of the
// trace-form isometries.  Works entirely with rational matrices on the
// integer side: candidates are tested for integrality, preservation of the
// trace Gram, and triviality on the dual quotient or the fixed classes.
OrthoType ortho_classify(const HermitianLattice& lat, const FVec& e, const SubgroupSpec& spec);

// Predicted image of a Hermitian cusp type over Q(sqrt(d)): R1_O when -1 is
// not among its units, R2_O when -1 occurs with a trivial translation, I2_O
// otherwise.  Rejects types that do not occur over the given field.
OrthoKind image_type(const CuspType& type, int d);

// Classifies one cusp on both sides and reports: the Hermitian type, the
// image plane, the type computed on the trace side, the predicted image, and
// whether the two subgroup conditions selected the same scaled transvections.
nlohmann::json bridge_report(const HermitianLattice& lat, const FVec& e, const SubgroupSpec& spec);

}  // namespace cusps
