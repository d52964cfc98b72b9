#include "cusps/ortho.hpp"

#include <string>
#include <utility>
#include <vector>

#include "cusps/zlinalg.hpp"

namespace cusps {

namespace {

// 2x2 block of multiplication by alpha on {1, omega} coordinates: omega^2 is
// d when omega = sqrt(d) and omega + (d-1)/4 when omega = (1+sqrt(d))/2.
void put_block(QMat& out, Eigen::Index r, Eigen::Index c, const FieldElem& alpha, int d) {
  auto [p, q] = omega_coords(alpha, d);
  out(r, c) = p;
  out(r + 1, c) = q;
  if (field_one_mod4(d)) {
    out(r, c + 1) = q * Rat(d - 1) / 4;
    out(r + 1, c + 1) = p + q;
  } else {
    out(r, c + 1) = q * d;
    out(r + 1, c + 1) = p;
  }
}

// Gauss-Jordan inverse over the rationals.
QMat q_inverse(QMat m) {
  const Eigen::Index n = m.rows();
  QMat inv = QMat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) fail(errc::degenerate, "matrix is singular");
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    const Rat pivot = m(col, col);
    for (Eigen::Index c = 0; c < n; ++c) {
      m(col, c) /= pivot;
      inv(col, c) /= pivot;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rat factor = m(r, col);
      for (Eigen::Index c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

// Membership data for a subgroup of the trace-form isometries.
struct OrthoCtx {
  QMat gram;                // trace Gram with rational entries
  std::vector<QVec> fixed;  // interleaved coordinates of classes to fix
};

OrthoCtx make_ctx(const HermitianLattice& lat, const SubgroupSpec& spec) {
  OrthoCtx ctx;
  const ZMat g = trace_gram(lat);
  ctx.gram = QMat(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) ctx.gram(i, j) = Rat(g(i, j));
  switch (spec.kind) {
    case SubgroupKind::full:
      break;
    case SubgroupKind::disc_kernel: {
      // The columns of the inverse Gram span the dual lattice, so fixing
      // them modulo Z^{2(n+1)} is exactly triviality on the dual quotient.
      const QMat dual = q_inverse(ctx.gram);
      for (Eigen::Index c = 0; c < dual.cols(); ++c) ctx.fixed.push_back(dual.col(c));
      break;
    }
    case SubgroupKind::fix_classes:
      for (const FVec& x : spec.classes) {
        if (x.size() != lat.rank())
          fail(errc::bad_input, "class vector length does not match the lattice rank");
        if (!in_dual(lat, x)) fail(errc::bad_input, "classes must lie in the dual lattice");
        ctx.fixed.push_back(rational_coords(x, lat.d));
      }
      break;
  }
  return ctx;
}

bool ortho_member(const QMat& m, const OrthoCtx& ctx) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!rat_is_int(m(i, j))) return false;
  const QMat preserved = m.transpose() * ctx.gram * m;
  if (!exact_eq(preserved, ctx.gram)) return false;
  for (const QVec& x : ctx.fixed) {
    const QVec moved = m * x - x;
    for (Eigen::Index i = 0; i < moved.size(); ++i)
      if (!rat_is_int(moved(i))) return false;
  }
  return true;
}

// Linear part of the translation family: E(t) = I + t*b with b integral.
QMat translation_direction(const HermitianLattice& lat, const FVec& e) {
  QMat b = embed(lat, transvection(lat, e, Rat(1)));
  for (Eigen::Index i = 0; i < b.rows(); ++i) b(i, i) -= 1;
  return b;
}

QMat translation_at(const QMat& b, const Rat& t, bool negate) {
  QMat m(b.rows(), b.cols());
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Rat v = t * b(i, j);
      if (i == j) v += 1;
      m(i, j) = negate ? Rat(-v) : v;
    }
  }
  return m;
}

nlohmann::json zmat_cols_to_json(const ZMat& m) {
  nlohmann::json cols = nlohmann::json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) col.push_back(int_to_json(m(r, c)));
    cols.push_back(col);
  }
  return cols;
}

}  // namespace

QMat embed(const HermitianLattice& lat, const FMat& m) {
  if (m.rows() != lat.rank() || m.cols() != lat.rank())
    fail(errc::bad_input, "matrix size does not match the lattice rank");
  QMat out = QMat::Zero(2 * m.rows(), 2 * m.cols());
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k) put_block(out, 2 * j, 2 * k, m(j, k), lat.d);
  return out;
}

ZMat j_matrix(const HermitianLattice& lat) {
  const int d = lat.d;
  ZMat out = ZMat::Zero(2 * lat.rank(), 2 * lat.rank());
  for (Eigen::Index j = 0; j < lat.rank(); ++j) {
    const Eigen::Index r = 2 * j;
    if (field_one_mod4(d)) {
      out(r, r) = -1;
      out(r, r + 1) = Int((d - 1) / 2);
      out(r + 1, r) = 2;
      out(r + 1, r + 1) = 1;
    } else {
      out(r, r + 1) = d;
      out(r + 1, r) = 1;
    }
  }
  return out;
}

OrthoCusp ortho_cusp(const HermitianLattice& lat, const FVec& e) {
  if (!is_primitive_isotropic(lat, e))
    fail(errc::bad_input, "cusp vector must be primitive isotropic");
  const int d = lat.d;
  const FieldElem w = FieldElem::omega(d);
  FVec we(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) we(i) = w * e(i);

  OrthoCusp out;
  out.basis = ZMat(2 * lat.rank(), 2);
  const QVec c0 = rational_coords(e, d);
  const QVec c1 = rational_coords(we, d);
  for (Eigen::Index i = 0; i < c0.size(); ++i) {
    if (!rat_is_int(c0(i)) || !rat_is_int(c1(i)))
      fail(errc::internal, "integral vector mapped to fractional coordinates");
    out.basis(i, 0) = rat_num(c0(i));
    out.basis(i, 1) = rat_num(c1(i));
  }

  const SmithForm sf = z_smith(out.basis);
  const Int d0 = sf.d(0, 0);
  const Int d1 = sf.d(1, 1);
  if (d0 != 1 || d1 != 1)
    fail(errc::imprimitive_image, "image plane is not a primitive rank-2 sublattice",
         {{"divisors", {int_to_json(d0), int_to_json(d1)}}});

  const ZMat g = trace_gram(lat);
  const ZMat pairings = out.basis.transpose() * g * out.basis;
  if (!is_zero_matrix(pairings)) fail(errc::internal, "image plane is not totally isotropic");

  // E(t) = I + t*b has integral entries exactly for t in (1/content)*Z.
  const QMat b = translation_direction(lat, e);
  Int content = 0;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (!rat_is_int(b(i, j)))
        fail(errc::internal, "integral transvection mapped to fractional entries");
      content = z_gcd(content, rat_num(b(i, j)));
    }
  }
  if (content == 0) fail(errc::internal, "translation family is trivial");
  out.lambda_den = content;
  return out;
}

const char* ortho_kind_name(OrthoKind kind) {
  switch (kind) {
    case OrthoKind::R1_O:
      return "R1_O";
    case OrthoKind::R2_O:
      return "R2_O";
    case OrthoKind::I2_O:
      return "I2_O";
  }
  fail(errc::internal, "unnamed orthogonal kind");
}

OrthoType ortho_classify(const HermitianLattice& lat, const FVec& e, const SubgroupSpec& spec) {
  const OrthoCusp oc = ortho_cusp(lat, e);
  const OrthoCtx ctx = make_ctx(lat, spec);
  const QMat b = translation_direction(lat, e);

  if (!ortho_member(translation_at(b, Rat(1), false), ctx))
    fail(errc::spec_too_small, "integral translations escape the subgroup");

  OrthoType out;
  for (Int k = 1; k <= oc.lambda_den; ++k) {
    const Rat t(k, oc.lambda_den);
    if (ortho_member(translation_at(b, t, false), ctx)) {
      out.lambda0 = t;
      break;
    }
  }
  if (out.lambda0 == 0 || !rat_is_int(Rat(1) / out.lambda0))
    fail(errc::internal, "translation memberships are not periodic");

  // A sign can only occur at parameters 0 or lambda0/2 modulo lambda0*Z:
  // two sign elements differ by a plain translation in the subgroup.
  if (ortho_member(translation_at(b, Rat(0), true), ctx)) {
    out.kind = OrthoKind::R2_O;
    out.star_witness = 0;
  } else if (ortho_member(translation_at(b, out.lambda0 / 2, true), ctx)) {
    out.kind = OrthoKind::I2_O;
    out.star_witness = out.lambda0 / 2;
  } else {
    out.kind = OrthoKind::R1_O;
  }
  return out;
}

OrthoKind image_type(const CuspType& type, int d) {
  struct Row {
    const char* name;
    int only_d;  // 0 when the type occurs over every field
    int c;       // order of the unit group of the type
    int z;       // order of its translation-free part
  };
  static constexpr Row kRows[] = {
      {"R1", 0, 1, 1},    {"R2", 0, 2, 2},    {"I2", 0, 2, 1},   {"R4", -1, 4, 4},
      {"SI2", -1, 4, 2},  {"I4", -1, 4, 1},   {"R3", -3, 3, 3},  {"R6", -3, 6, 6},
      {"I3", -3, 3, 1},   {"SI2", -3, 6, 3},  {"SI3", -3, 6, 2}, {"I6", -3, 6, 1},
  };
  for (const Row& row : kRows) {
    if (type.name != row.name) continue;
    if (row.only_d != 0 && row.only_d != d) continue;
    // -1 lies in a cyclic unit group of order c exactly when c is even; it
    // pairs with a trivial translation exactly when the order z stays even.
    if (row.c % 2 != 0) return OrthoKind::R1_O;
    if (row.z % 2 == 0) return OrthoKind::R2_O;
    return OrthoKind::I2_O;
  }
  fail(errc::bad_input, "cusp type does not occur over this field",
       {{"type", type.name}, {"d", d}});
}

nlohmann::json bridge_report(const HermitianLattice& lat, const FVec& e,
                             const SubgroupSpec& spec) {
  const CuspType unitary = classify(lat, e, spec);
  const OrthoCusp oc = ortho_cusp(lat, e);
  const OrthoType ortho = ortho_classify(lat, e, spec);
  const OrthoKind predicted = image_type(unitary, lat.d);

  // Whether the Hermitian subgroup is exactly the preimage of the trace-form
  // one is decided on the finite family that matters for the cusp: all
  // unit-scaled transvections on a half-step grid of one full period.
  const OrthoCtx ctx = make_ctx(lat, spec);
  bool preimage_equal = true;
  nlohmann::json mismatch;
  const Int den = Int(2) * oc.lambda_den;
  for (const FieldElem& zeta : units(lat.d)) {
    for (Int k = 0; k < den; ++k) {
      const Rat lambda(k, den);
      FMat m = transvection(lat, e, lambda);
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = zeta * m(i, j);
      const bool unitary_in = in_group(m, lat, spec).ok;
      const bool ortho_in = ortho_member(embed(lat, m), ctx);
      if (unitary_in != ortho_in) {
        preimage_equal = false;
        mismatch = {{"zeta", to_string(zeta)},
                    {"lambda", to_string(lambda)},
                    {"unitary", unitary_in},
                    {"orthogonal", ortho_in}};
        break;
      }
    }
    if (!preimage_equal) break;
  }

  nlohmann::json out{
      {"unitary_type", unitary.name},
      {"orthogonal_basis", zmat_cols_to_json(oc.basis)},
      {"lambda_den", int_to_json(oc.lambda_den)},
      {"orthogonal_type", ortho_kind_name(ortho.kind)},
      {"orthogonal_regular", ortho.regular()},
      {"lambda0", to_string(ortho.lambda0)},
      {"star_witness", to_string(ortho.star_witness)},
      {"predicted_type", ortho_kind_name(predicted)},
      {"prediction_audit", ortho.kind == predicted ? "match" : "mismatch"},
      {"preimage_equal", preimage_equal},
  };
  if (!preimage_equal) out["preimage_mismatch"] = mismatch;
  return out;
}

}  // namespace cusps
