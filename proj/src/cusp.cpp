#include "cusps/cusp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "cusps/normform.hpp"
#include "cusps/numberring.hpp"

namespace cusps {

namespace {

// <b_k, e> for all k: the column H conj(e).
FVec pair_with_basis(const HermitianLattice& lat, const FVec& e) {
  FVec r(lat.rank());
  for (Eigen::Index k = 0; k < lat.rank(); ++k) {
    FieldElem acc(0);
    for (Eigen::Index s = 0; s < lat.rank(); ++s) acc += lat.gram(k, s) * e(s).conj();
    r(k) = acc;
  }
  return r;
}

Int coord_height(const FVec& v, int d) {
  Int h = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    auto [u, w] = integer_coords(v(i), d);
    h = std::max(h, Int(boost::multiprecision::abs(u)));
    h = std::max(h, Int(boost::multiprecision::abs(w)));
  }
  return h;
}

}  // namespace

bool is_primitive_isotropic(const HermitianLattice& lat, const FVec& e) {
  if (e.size() != lat.rank())
    fail(errc::bad_input, "vector length does not match the lattice rank");
  if (!vec_integral(e, lat.d)) fail(errc::bad_input, "cusp vectors must be integral");
  std::vector<FieldElem> coords;
  bool all_zero = true;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    coords.push_back(e(i));
    if (!e(i).is_zero()) all_zero = false;
  }
  if (all_zero) fail(errc::bad_input, "cusp vectors must be nonzero");
  if (!inner(lat, e, e).is_zero()) return false;
  return ideal_gcd(coords, lat.d).norm() == 1;
}

CuspData div_of(const HermitianLattice& lat, const FVec& e) {
  if (!is_primitive_isotropic(lat, e))
    fail(errc::bad_input, "not a primitive isotropic vector");
  const int d = lat.d;
  const FieldElem two_sqrt(Rat(0), Rat(2), d);  // 2 sqrt(d)
  const FieldElem w = FieldElem::omega(d);
  FVec r = pair_with_basis(lat, e);

  CuspData out;
  out.e = e;

  // The value ideal {<l, e>}, scaled into O_F by 2 sqrt(d).
  std::vector<FieldElem> scaled(static_cast<size_t>(r.size()));
  for (Eigen::Index k = 0; k < r.size(); ++k) scaled[static_cast<size_t>(k)] = r(k) * two_sqrt;
  out.s = ideal_gcd(scaled, d);
  out.div = out.s / two_sqrt;
  auto [su, sv] = integer_coords(out.s, d);
  if (field_one_mod4(d)) {
    // Elements of the inverse different scale to 2 O_F here, so both
    // coordinates of s are even and the parametrization halves them.
    if (su % 2 != 0 || sv % 2 != 0)
      fail(errc::internal, "scaled divisor has odd coordinates");
    out.a = su / 2;
    out.b = sv / 2;
  } else {
    out.a = su;
    out.b = sv;
  }
  out.g = z_gcd(su, sv);

  // Values <e, l> over l in L form the conjugate ideal, spanned by the
  // conjugates of r; div need not lie in it, so the realized pairing value
  // falls back to that ideal's own canonical generator.
  std::vector<FieldElem> cscaled(scaled.size());
  for (size_t k = 0; k < scaled.size(); ++k)
    cscaled[k] = r(static_cast<Eigen::Index>(k)).conj() * two_sqrt;
  FieldElem gamma =
      in_ideal(out.s, cscaled, d) ? out.div : ideal_gcd(cscaled, d) / two_sqrt;
  out.pairing = gamma;

  // Solve sum_k y_k * (2 sqrt(d) <e, b_k>) = 2 sqrt(d) gamma and conjugate.
  auto sol = of_solve_linear(cscaled, gamma * two_sqrt, d);
  if (!sol) fail(errc::internal, "pairing value escaped its own ideal");
  FVec ep(lat.rank());
  for (Eigen::Index k = 0; k < lat.rank(); ++k)
    ep(k) = (*sol)[static_cast<size_t>(k)].conj();

  // Isotropy adjustment: candidates e' + y + mu e with <e, y> = 0 keep the
  // pairing; mu must satisfy Tr(mu gamma) = -<cand, cand>, a linear
  // Diophantine equation in the coordinates of mu.
  const Rat tr_a = gamma.trace();
  const Rat tr_b = (w * gamma).trace();
  if (!rat_is_int(tr_a) || !rat_is_int(tr_b))
    fail(errc::internal, "pairing value outside the inverse different");
  auto try_isotropic = [&](const FVec& base) -> std::optional<FVec> {
    Rat n = inner(lat, base, base).x();
    if (!rat_is_int(n)) return std::nullopt;
    Int s0, t0;
    Int g0 = z_ext_gcd(rat_num(tr_a), rat_num(tr_b), s0, t0);
    Int target = -rat_num(n);
    if (g0 == 0) return target == 0 ? std::optional<FVec>(base) : std::nullopt;
    if (target % g0 != 0) return std::nullopt;
    Int f = target / g0;
    FieldElem mu = FieldElem(Int(s0 * f)) + FieldElem(Int(t0 * f)) * w;
    // Tr(kappa gamma) = 0: sliding along kappa keeps the solution exact.
    FieldElem kappa =
        FieldElem(Int(-rat_num(tr_b) / g0)) + FieldElem(Int(rat_num(tr_a) / g0)) * w;
    for (int j : {0, 1, -1, 2, -2}) {
      FieldElem adj = mu + FieldElem(j) * kappa;
      FVec cand = base;
      for (Eigen::Index i = 0; i < cand.size(); ++i) cand(i) += adj * e(i);
      if (!inner(lat, cand, cand).is_zero())
        fail(errc::internal, "isotropy adjustment arithmetic failed");
      if (adj.is_zero() || coord_height(cand, d) <= 16) return cand;
    }
    return std::nullopt;
  };

  std::optional<FVec> iso = try_isotropic(ep);
  if (!iso) {
    // Small integral combinations of a kernel basis of x -> <e, x>.
    FMat row(1, lat.rank());
    for (Eigen::Index k = 0; k < lat.rank(); ++k) row(0, k) = scaled[static_cast<size_t>(k)];
    FMat ker = of_kernel(row, d);
    Eigen::Index cols = std::min<Eigen::Index>(ker.cols(), 4);
    const FieldElem coefset[] = {FieldElem(0), FieldElem(1), FieldElem(-1), w, -w};
    std::vector<int> pick(static_cast<size_t>(cols), 0);
    while (true) {
      // Advance the odometer; all-zero was covered by the plain solve.
      Eigen::Index p = 0;
      while (p < cols && ++pick[static_cast<size_t>(p)] == 5) {
        pick[static_cast<size_t>(p)] = 0;
        ++p;
      }
      if (p == cols) break;
      FVec base = ep;
      for (Eigen::Index c = 0; c < cols; ++c) {
        const FieldElem& coef = coefset[pick[static_cast<size_t>(c)]];
        if (coef.is_zero()) continue;
        for (Eigen::Index i = 0; i < base.size(); ++i) base(i) += coef * ker(i, c);
      }
      iso = try_isotropic(base);
      if (iso) break;
    }
  }
  if (iso) {
    out.e_prime = *iso;
    out.e_prime_isotropic = true;
  } else {
    out.e_prime = ep;
    out.e_prime_isotropic = false;
  }
  return out;
}

FMat transvection(const HermitianLattice& lat, const FVec& e, const Rat& lambda) {
  if (e.size() != lat.rank())
    fail(errc::bad_input, "vector length does not match the lattice rank");
  if (!inner(lat, e, e).is_zero())
    fail(errc::bad_input, "transvections require an isotropic vector");
  FVec r = pair_with_basis(lat, e);
  const FieldElem scale(Rat(0), 2 * lambda, lat.d);  // 2 sqrt(d) lambda
  FMat t = FMat::Identity(lat.rank(), lat.rank());
  for (Eigen::Index j = 0; j < lat.rank(); ++j)
    for (Eigen::Index k = 0; k < lat.rank(); ++k) t(j, k) += scale * e(j) * r(k);
  return t;
}

namespace {

std::vector<FVec> resolve_classes(const HermitianLattice& lat, const SubgroupSpec& spec) {
  switch (spec.kind) {
    case SubgroupKind::full:
      return {};
    case SubgroupKind::disc_kernel:
      return discriminant_group(lat).generators;
    case SubgroupKind::fix_classes:
      for (const FVec& x : spec.classes) {
        if (x.size() != lat.rank())
          fail(errc::bad_input, "class vector length does not match the lattice rank");
        if (!in_dual(lat, x))
          fail(errc::bad_input, "fixed classes must lie in the dual lattice",
               {{"vector", fvec_to_json(x)}});
      }
      return spec.classes;
  }
  fail(errc::internal, "unknown subgroup kind");
}

GroupCheck check_membership(const FMat& m, const HermitianLattice& lat,
                            const std::vector<FVec>& classes) {
  if (m.rows() != lat.rank() || m.cols() != lat.rank())
    fail(errc::bad_input, "matrix size does not match the lattice rank");
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      if (!is_integral(m(j, k), lat.d))
        return {false,
                {{"reason", "matrix_not_integral"},
                 {"row", static_cast<long>(j)},
                 {"col", static_cast<long>(k)},
                 {"entry", to_string(m(j, k))}}};
  FMat lhs = m.transpose() * lat.gram * conj_entries(m);
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      if (lhs(j, k) != lat.gram(j, k))
        return {false,
                {{"reason", "form_not_preserved"},
                 {"row", static_cast<long>(j)},
                 {"col", static_cast<long>(k)},
                 {"got", to_string(lhs(j, k))},
                 {"want", to_string(lat.gram(j, k))}}};
  for (size_t i = 0; i < classes.size(); ++i) {
    FVec diff = m * classes[i] - classes[i];
    for (Eigen::Index k = 0; k < diff.size(); ++k)
      if (!is_integral(diff(k), lat.d))
        return {false,
                {{"reason", "moves_class"},
                 {"class_index", static_cast<long>(i)},
                 {"class_vector", fvec_to_json(classes[i])},
                 {"coordinate", static_cast<long>(k)},
                 {"offset", to_string(diff(k))}}};
  }
  return {true, {}};
}

QGroup q_group_impl(const HermitianLattice& lat, const CuspData& cusp,
                    const std::vector<FVec>& classes) {
  const Int g = cusp.g;
  auto scaled_transvection = [&](const FieldElem& zeta, const Rat& lambda) {
    FMat t = transvection(lat, cusp.e, lambda);
    if (zeta != FieldElem(1))
      for (Eigen::Index j = 0; j < t.rows(); ++j)
        for (Eigen::Index k = 0; k < t.cols(); ++k) t(j, k) *= zeta;
    return t;
  };

  // Integer translations must land in the subgroup; they always lie in the
  // discriminant kernel, so a failure means the spec names a smaller group.
  if (!check_membership(scaled_transvection(FieldElem(1), Rat(1)), lat, classes).ok)
    fail(errc::spec_too_small, "integral translations escape the subgroup");

  Int k0 = 0;
  for (Int k = 1; k <= g; ++k)
    if (check_membership(scaled_transvection(FieldElem(1), Rat(k, g)), lat, classes).ok) {
      k0 = k;
      break;
    }
  if (k0 == 0 || g % k0 != 0)
    fail(errc::internal, "translation memberships are not periodic in g");

  QGroup q;
  q.g = g;
  q.g_gamma = g / k0;
  for (const FieldElem& zeta : units(lat.d)) {
    for (Int t = 0; t < k0; ++t) {
      Rat lambda(t, g);
      FMat m = scaled_transvection(zeta, lambda);
      if (check_membership(m, lat, classes).ok)
        q.elements.push_back({zeta, t, lambda, m});
    }
  }

  // Structural checks: identity present, unit projection injective, closure.
  bool has_identity = false;
  for (size_t i = 0; i < q.elements.size(); ++i) {
    const QElem& el = q.elements[i];
    if (el.zeta == FieldElem(1)) {
      if (el.t != 0) fail(errc::internal, "nontrivial translation with trivial unit");
      has_identity = true;
    }
    for (size_t j = i + 1; j < q.elements.size(); ++j)
      if (q.elements[j].zeta == el.zeta)
        fail(errc::internal, "unit projection is not injective");
  }
  if (!has_identity) fail(errc::internal, "identity missing from the membership scan");
  for (const QElem& x : q.elements)
    for (const QElem& y : q.elements) {
      FieldElem zu = x.zeta * y.zeta;
      Int tu = (x.t + y.t) % k0;
      bool found = false;
      for (const QElem& z : q.elements)
        if (z.zeta == zu && z.t == tu) found = true;
      if (!found) fail(errc::internal, "membership scan is not closed under composition");
    }
  return q;
}

}  // namespace

GroupCheck in_group(const FMat& m, const HermitianLattice& lat, const SubgroupSpec& spec) {
  return check_membership(m, lat, resolve_classes(lat, spec));
}

QGroup q_group(const HermitianLattice& lat, const FVec& e, const SubgroupSpec& spec) {
  return q_group_impl(lat, div_of(lat, e), resolve_classes(lat, spec));
}

CuspType classify(const QGroup& q, int d) {
  CuspType out;
  for (const QElem& el : q.elements) {
    out.c_units.push_back(el.zeta);
    if (el.t == 0) out.z0_units.push_back(el.zeta);
  }
  std::sort(out.c_units.begin(), out.c_units.end());
  std::sort(out.z0_units.begin(), out.z0_units.end());
  size_t c = out.c_units.size();
  size_t z = out.z0_units.size();

  struct Row {
    size_t c, z0;
    const char* name;
    int only_d;  // 0: any field
  };
  static constexpr Row kTable[] = {
      {1, 1, "R1", 0},   {2, 2, "R2", 0},   {2, 1, "I2", 0},
      {4, 4, "R4", -1},  {4, 2, "SI2", -1}, {4, 1, "I4", -1},
      {3, 3, "R3", -3},  {6, 6, "R6", -3},  {3, 1, "I3", -3},
      {6, 3, "SI2", -3}, {6, 2, "SI3", -3}, {6, 1, "I6", -3},
  };
  for (const Row& row : kTable) {
    if (row.c == c && row.z0 == z && (row.only_d == 0 || row.only_d == d)) {
      if (z == 0 || c % z != 0) fail(errc::internal, "unit subgroup sizes violate Lagrange");
      out.name = row.name;
      out.m = Int(c / z);
      return out;
    }
  }
  fail(errc::unclassifiable_pair, "computed unit pair matches no type",
       {{"C_order", static_cast<long>(c)}, {"Z0_order", static_cast<long>(z)}});
}

CuspType classify(const HermitianLattice& lat, const FVec& e, const SubgroupSpec& spec) {
  return classify(q_group(lat, e, spec), lat.d);
}

nlohmann::json fvec_to_json(const FVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

FVec fvec_from_json(const nlohmann::json& j, int d) {
  if (!j.is_array() || j.empty()) fail(errc::bad_input, "vector must be a nonempty array");
  FVec v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto& cell = j[static_cast<size_t>(i)];
    if (cell.is_string())
      v(i) = parse_field_elem(cell.get<std::string>(), d);
    else if (cell.is_number_integer())
      v(i) = FieldElem(cell.get<long>());
    else
      fail(errc::bad_input, "vector entries must be strings or integers");
  }
  return v;
}

nlohmann::json fmat_to_json(const FMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(j, k)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json int_to_json(const Int& v) {
  static const Int kMax = Int(std::numeric_limits<std::int64_t>::max());
  if (boost::multiprecision::abs(v) <= kMax) return v.convert_to<std::int64_t>();
  return v.str();
}

nlohmann::json classification_report(const HermitianLattice& lat, const FVec& e,
                                     const SubgroupSpec& spec) {
  CuspData cusp = div_of(lat, e);
  QGroup q = q_group_impl(lat, cusp, resolve_classes(lat, spec));
  CuspType type = classify(q, lat.d);

  nlohmann::json elems = nlohmann::json::array();
  for (const QElem& el : q.elements)
    elems.push_back({{"zeta", to_string(el.zeta)},
                     {"t", int_to_json(el.t)},
                     {"lambda", to_string(el.lambda)},
                     {"matrix", fmat_to_json(el.matrix)}});
  nlohmann::json c_units = nlohmann::json::array();
  for (const FieldElem& u : type.c_units) c_units.push_back(to_string(u));
  nlohmann::json z0_units = nlohmann::json::array();
  for (const FieldElem& u : type.z0_units) z0_units.push_back(to_string(u));

  return nlohmann::json{
      {"cusp", fvec_to_json(cusp.e)},
      {"div", to_string(cusp.div)},
      {"a", int_to_json(cusp.a)},
      {"b", int_to_json(cusp.b)},
      {"s", to_string(cusp.s)},
      {"g", int_to_json(cusp.g)},
      {"g_gamma", int_to_json(q.g_gamma)},
      {"pairing", to_string(cusp.pairing)},
      {"e_prime", cusp.e_prime ? fvec_to_json(*cusp.e_prime) : nlohmann::json()},
      {"e_prime_isotropic", cusp.e_prime_isotropic},
      {"q_elements", elems},
      {"type", type.name},
      {"index", int_to_json(type.m)},
      {"units", nlohmann::json{{"C", c_units}, {"Z0", z0_units}}},
  };
}

}  // namespace cusps
