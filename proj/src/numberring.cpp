#include "cusps/numberring.hpp"

#include <algorithm>

namespace cusps {

ZMat of_mult_matrix(const FieldElem& c, int d) {
  auto [p, q] = integer_coords(c, d);
  ZMat m(2, 2);
  if (field_one_mod4(d)) {
    // omega^2 = omega + (d-1)/4.
    Int t = (Int(d) - 1) / 4;
    m << p, q * t, q, p + q;
  } else {
    // omega^2 = d.
    m << p, q * Int(d), q, p;
  }
  return m;
}

namespace {

// Columns spanning the Z-module sum of the principal ideals (gens[k]).
ZMat ideal_span_columns(const std::vector<FieldElem>& gens, int d) {
  ZMat a(2, 2 * static_cast<Eigen::Index>(gens.size()));
  for (size_t k = 0; k < gens.size(); ++k) {
    ZMat blk = of_mult_matrix(gens[k], d);
    a.block(0, 2 * static_cast<Eigen::Index>(k), 2, 2) = blk;
  }
  return a;
}

}  // namespace

FieldElem ideal_gcd(const std::vector<FieldElem>& gens, int d) {
  bool all_zero = true;
  for (const auto& g : gens) {
    if (!is_integral(g, d))
      fail(errc::bad_input, "ideal_gcd requires integral generators", {{"z", to_string(g)}});
    if (!g.is_zero()) all_zero = false;
  }
  if (gens.empty() || all_zero) fail(errc::bad_input, "ideal_gcd of the zero ideal");

  ZMat span = ideal_span_columns(gens, d);
  ColHnf hnf = z_col_hnf(span);
  if (hnf.pivots.size() != 2) fail(errc::internal, "ideal span is not rank two");
  Int index = hnf.h(0, 0) * hnf.h(1, 1);

  // Any ideal element of norm equal to the index generates the ideal.
  for (const FieldElem& z : norm_bounded_elements(Rat(index), d)) {
    if (z.norm() != Rat(index)) continue;
    auto [u, v] = integer_coords(z, d);
    ZVec coords(2);
    coords << u, v;
    if (z_solve(hnf.h, coords)) return canonical_associate(z, d);
  }
  fail(errc::internal, "no generator found for a principal ideal",
       {{"index", to_string(Rat(index))}});
}

FieldElem ideal_gcd(const FieldElem& a, const FieldElem& b, int d) {
  return ideal_gcd(std::vector<FieldElem>{a, b}, d);
}

std::optional<std::vector<FieldElem>> of_solve_linear(const std::vector<FieldElem>& gens,
                                                      const FieldElem& rhs, int d) {
  if (gens.empty()) return std::nullopt;
  ZMat a = ideal_span_columns(gens, d);
  if (!is_integral(rhs, d)) return std::nullopt;
  auto [ru, rv] = integer_coords(rhs, d);
  ZVec b(2);
  b << ru, rv;
  auto x = z_solve(a, b);
  if (!x) return std::nullopt;
  std::vector<FieldElem> coeffs;
  coeffs.reserve(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    coeffs.push_back(from_integer_coords((*x)(2 * k), (*x)(2 * k + 1), d));
  return coeffs;
}

OfBezout of_bezout(const std::vector<FieldElem>& gens, int d) {
  FieldElem g = ideal_gcd(gens, d);
  auto coeffs = of_solve_linear(gens, g, d);
  if (!coeffs) fail(errc::internal, "gcd not reachable as a combination");
  return OfBezout{g, *coeffs};
}

bool in_ideal(const FieldElem& z, const std::vector<FieldElem>& gens, int d) {
  return of_solve_linear(gens, z, d).has_value();
}

bool same_ideal(const FieldElem& a, const FieldElem& b, int d) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return of_divides(a, b, d) && of_divides(b, a, d);
}

namespace {

// Smallest prime above ell: norm ell if ell splits or ramifies, else ell itself.
FieldElem prime_above(const Int& ell, int d) {
  for (const FieldElem& z : norm_bounded_elements(Rat(ell), d))
    if (z.norm() == Rat(ell)) return canonical_associate(z, d);
  return FieldElem(Rat(ell));  // inert
}

}  // namespace

std::vector<PrimePower> of_factor(const FieldElem& z0, int d) {
  if (z0.is_zero() || !is_integral(z0, d))
    fail(errc::bad_input, "factorization needs a nonzero integral element",
         {{"z", to_string(z0)}});
  FieldElem z = z0;
  Int n = rat_num(z.norm());
  std::vector<PrimePower> out;
  auto strip = [&](Int ell) {  // by value: the last call passes n itself
    while (n % ell == 0) n /= ell;
    FieldElem p = prime_above(ell, d);
    for (FieldElem q : {p, p.conj()}) {
      q = canonical_associate(q, d);
      int e = 0;
      while (of_divides(q, z, d)) {
        z /= q;
        ++e;
      }
      if (e > 0) out.push_back(PrimePower{q, e});
      if (same_ideal(q, q.conj(), d)) break;  // inert or ramified: one prime only
    }
  };
  for (Int ell = 2; ell * ell <= n; ++ell)
    if (n % ell == 0) strip(ell);
  if (n > 1) strip(n);
  if (norm(z) != 1)
    fail(errc::internal, "factorization left a non-unit part", {{"rest", to_string(z)}});
  std::sort(out.begin(), out.end(), [d](const PrimePower& a, const PrimePower& b) {
    if (a.prime.norm() != b.prime.norm()) return a.prime.norm() < b.prime.norm();
    return a.prime < b.prime;
  });
  return out;
}

}  // namespace cusps
