#pragma once

// Zero-dimensional cusps: primitive isotropic vectors, their divisor data,
// rational transvections, arithmetic-subgroup membership, the finite group of
// unit-scaled transvections modulo integral ones, and the type decision rule.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cusps/lattice.hpp"

namespace cusps {

enum class SubgroupKind { full, disc_kernel, fix_classes };

// The arithmetic subgroup membership is tested against: the full integral
// unitary group, the discriminant kernel, or the stabilizer of the listed
// dual classes (each vector must lie in the dual lattice; such a stabilizer
// always contains the discriminant kernel).
struct SubgroupSpec {
  SubgroupKind kind = SubgroupKind::disc_kernel;
  std::vector<FVec> classes;

  static SubgroupSpec full() { return {SubgroupKind::full, {}}; }
  static SubgroupSpec disc_kernel() { return {SubgroupKind::disc_kernel, {}}; }
  static SubgroupSpec fix_classes(std::vector<FVec> cls) {
    return {SubgroupKind::fix_classes, std::move(cls)};
  }
};

// Divisor data of a primitive isotropic e.  div is the canonical generator of
// the ideal of values <l, e>, l in L; s = 2 sqrt(d) div is integral with
// {1, omega}-coordinate gcd g; (a, b) are the integers with
// div = (a + b sqrt d)/(2 sqrt d), resp. (2a + (1 + sqrt d) b)/(2 sqrt d) when
// d = 1 mod 4.  e_prime realizes <e, e_prime> = pairing, where pairing is div
// itself whenever div lies in the conjugate value ideal {<e, l>} and the
// canonical generator of that ideal otherwise; e_prime_isotropic records
// whether the bounded search found an isotropic representative.
struct CuspData {
  FVec e;
  FieldElem div;
  Int a, b;
  FieldElem s;
  Int g = 1;
  FieldElem pairing;
  std::optional<FVec> e_prime;
  bool e_prime_isotropic = false;
};

// true iff <e,e> = 0 and the coordinate ideal of e is the whole ring.
bool is_primitive_isotropic(const HermitianLattice& lat, const FVec& e);

CuspData div_of(const HermitianLattice& lat, const FVec& e);

// Matrix of z -> z + 2 sqrt(d) lambda <z, e> e on the lattice basis; requires
// e isotropic.  Composition adds the lambda parameters.
FMat transvection(const HermitianLattice& lat, const FVec& e, const Rat& lambda);

struct GroupCheck {
  bool ok = true;
  nlohmann::json certificate;  // failure reason with a witness
  explicit operator bool() const { return ok; }
};

// Membership of an F-linear map in the subgroup: integral entries, exact form
// preservation, and fixing the required dual classes modulo L.
GroupCheck in_group(const FMat& m, const HermitianLattice& lat, const SubgroupSpec& spec);

struct QElem {
  FieldElem zeta;  // unit
  Int t;           // translation residue, 0 <= t < g/g_gamma
  Rat lambda;      // witness: the element is zeta * T_lambda with lambda = t/g
  FMat matrix;     // the verified matrix
};

// The group of unit-scaled rational transvections lying in the subgroup,
// modulo the subgroup's integral translations.  Composition is componentwise:
// (zeta1, t1)(zeta2, t2) = (zeta1 zeta2, t1 + t2 mod g/g_gamma).
struct QGroup {
  Int g = 1;        // rational translations preserving the lattice: (1/g)Z
  Int g_gamma = 1;  // integral translations inside the subgroup: (1/g_gamma)Z
  std::vector<QElem> elements;
  Int translation_order() const { return g / g_gamma; }
};

QGroup q_group(const HermitianLattice& lat, const FVec& e, const SubgroupSpec& spec);

// Type decision.  C is the unit projection of the group, Z0 the units paired
// with translation residue 0; the (C, Z0) pair determines the name and the
// branch index m = [C : Z0] (1 exactly for the regular types).
struct CuspType {
  std::string name;  // R1 R2 R3 R4 R6 I2 I3 I4 I6 SI2 SI3
  Int m = 1;
  std::vector<FieldElem> c_units;
  std::vector<FieldElem> z0_units;
};

CuspType classify(const QGroup& q, int d);
CuspType classify(const HermitianLattice& lat, const FVec& e, const SubgroupSpec& spec);

// Everything about one cusp in a single JSON object: vector, divisor data,
// group elements with their witness matrices, and the type.
nlohmann::json classification_report(const HermitianLattice& lat, const FVec& e,
                                     const SubgroupSpec& spec);

// JSON helpers shared with the command-line front end.
nlohmann::json fvec_to_json(const FVec& v);
FVec fvec_from_json(const nlohmann::json& j, int d);
nlohmann::json fmat_to_json(const FMat& m);
nlohmann::json int_to_json(const Int& v);

}  // namespace cusps
