#pragma once

// Ideal arithmetic in the rings of integers O_F (class number one, so every
// ideal is principal and gcds exist as elements).

#include <optional>
#include <vector>

#include "cusps/eigen.hpp"
#include "cusps/zlinalg.hpp"

namespace cusps {

// Regular representation of multiplication by c on the coordinate column
// (u, v) with respect to the basis {1, omega}.
ZMat of_mult_matrix(const FieldElem& c, int d);

// Generator (canonical associate) of the ideal spanned by gens; all inputs
// must be integral and not all zero.
FieldElem ideal_gcd(const std::vector<FieldElem>& gens, int d);
FieldElem ideal_gcd(const FieldElem& a, const FieldElem& b, int d);

struct OfBezout {
  FieldElem g;
  std::vector<FieldElem> coeffs;  // sum coeffs[k] * gens[k] = g
};

// Gcd together with an explicit integral cofactor vector.
OfBezout of_bezout(const std::vector<FieldElem>& gens, int d);

// One integral solution of sum x_k * gens[k] = rhs, if any.
std::optional<std::vector<FieldElem>> of_solve_linear(const std::vector<FieldElem>& gens,
                                                      const FieldElem& rhs, int d);

// true iff the element lies in the ideal generated by gens.
bool in_ideal(const FieldElem& z, const std::vector<FieldElem>& gens, int d);

struct PrimePower {
  FieldElem prime;  // canonical associate
  int exponent;
};

// Prime factorization of a nonzero integral element, unit part dropped;
// primes ordered by (norm, canonical coordinates).
std::vector<PrimePower> of_factor(const FieldElem& z, int d);

// Associate test: a and b generate the same ideal.
bool same_ideal(const FieldElem& a, const FieldElem& b, int d);

}  // namespace cusps
