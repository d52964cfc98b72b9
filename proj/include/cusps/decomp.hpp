#pragma once

// Isomorphism classification for extensions of finite modules over a PID:
// given an exact sequence 0 -> O/p^m -> N -> prod_i (O/p^i)^{a_i} -> 0 with p
// prime, enumerate the admissible index/multiplicity tuples together with the
// cyclic decomposition of N each one produces, plus an exhaustive brute-force
// verifier over the integers for small primes.

#include <vector>

namespace cusps {

// Extension data: the submodule has length m and the quotient is
// prod (O/p^i)^{a[i-1]} for i = 1..a.size().  Trailing zeros in a are allowed.
struct DecompProblem {
  int m = 1;
  std::vector<int> a;
};

// One admissible middle term: the strictly increasing exponent chain
// i_0 < ... < i_k, positive multiplicities m_0..m_k summing to m with
// m_l < i_{l+1} - i_l on inner links, and the cyclic exponents of the
// resulting module (non-increasing).
struct DecompSolution {
  std::vector<int> indices;
  std::vector<int> multiplicities;
  std::vector<int> structure;
};

// All admissible solutions, without duplicates, sorted by
// (chain length, indices, multiplicities).  A chain may start at exponent 0;
// every other entry i must have a_i > 0.  Every emitted structure has total
// exponent sum m + sum_i i*a_i.  The prime stays abstract: this is pure
// combinatorics on exponents.
std::vector<DecompSolution> decomp_enumerate(const DecompProblem& problem);

// Independent verifier over the integers: enumerate every abelian p-group of
// order p^(m + sum i*a_i) as a partition of the exponent, and keep the
// partitions whose group contains an element x of order exactly p^m such that
// the quotient by <x> is isomorphic to prod (Z/p^i)^{a_i}.  Isomorphism is
// decided by the element-order-count profile, a complete invariant of finite
// abelian p-groups.  Requires p in {2, 3} and total order at most 3^7
// (errc::size_cap otherwise).  Partitions are non-increasing and the result
// is sorted lexicographically.
std::vector<std::vector<int>> decomp_oracle(int p, const DecompProblem& problem);

}  // namespace cusps
