#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#define CUSPS_LATTICE_HPP_TEST_HELPERS
#include "cusps/ortho.hpp"

#include "cusps/numberring.hpp"
#include "cusps/zlinalg.hpp"
#include "test_util.hpp"

using namespace cusps;

namespace {

HermitianLattice hyperbolic_unimodular(int d) {
  FieldElem dgen = inv_different_gen(d);
  FMat h(2, 2);
  h << FieldElem(0), dgen, -dgen, FieldElem(0);
  return HermitianLattice{d, h};
}

HermitianLattice scaled_hyperbolic(int d) {
  FMat h(2, 2);
  h << FieldElem(0), FieldElem::sqrt_d(d), -FieldElem::sqrt_d(d), FieldElem(0);
  return HermitianLattice{d, h};
}

FVec vec2(const FieldElem& a, const FieldElem& b) {
  FVec v(2);
  v << a, b;
  return v;
}

// Random lattice with the first basis vector primitive isotropic.
HermitianLattice rand_cusp_lattice(std::mt19937_64& gen, int d, int rank,
                                   long height = 2) {
  FieldElem dgen = inv_different_gen(d);
  while (true) {
    HermitianLattice tail = testutil::rand_lattice(gen, d, rank, height);
    FMat h = tail.gram;
    h(0, 0) = FieldElem(0);
    FieldElem p = testutil::rand_nonzero_integral_elem(gen, d, height) * dgen;
    h(0, 1) = p;
    h(1, 0) = p.conj();
    if (f_det(h).is_zero()) continue;
    return HermitianLattice{d, h};
  }
}

FVec e1(int rank) {
  FVec v = FVec::Zero(rank);
  v(0) = FieldElem(1);
  return v;
}

FMat scalar_matrix(int rank, const FieldElem& z) {
  FMat m = FMat::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) m(i, i) = z;
  return m;
}

QMat to_q(const ZMat& m) {
  QMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

QMat q_identity(Eigen::Index n) {
  QMat m = QMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// gcd of all 2x2 minors: 1 exactly when the column span is primitive.
Int minor_gcd(const ZMat& b) {
  Int g = 0;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = i + 1; j < b.rows(); ++j)
      g = z_gcd(g, Int(b(i, 0) * b(j, 1) - b(j, 0) * b(i, 1)));
  return g;
}

template <typename F>
errc code_of(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return errc::internal;  // sentinel: no throw
}

// Units of order dividing k.
std::vector<FieldElem> mu(int d, int k) {
  std::vector<FieldElem> out;
  for (const FieldElem& u : units(d)) {
    FieldElem p(1);
    for (int i = 0; i < k; ++i) p = p * u;
    if (p == FieldElem(1)) out.push_back(u);
  }
  return out;
}

bool has_minus_one(const std::vector<FieldElem>& v) {
  for (const FieldElem& u : v)
    if (u == FieldElem(-1)) return true;
  return false;
}

}  // namespace

TEST_CASE("the embedding is linear, multiplicative, and injective") {
  std::mt19937_64 gen(7211);
  for (int iter = 0; iter < 100; ++iter) {
    int d = testutil::kFields[iter % 9];
    int rank = 2 + iter % 2;
    HermitianLattice lat = testutil::rand_lattice(gen, d, rank);
    FMat m = testutil::rand_integral_fmat(gen, d, rank, rank, 3);
    FMat n = testutil::rand_integral_fmat(gen, d, rank, rank, 3);

    QMat prod = embed(lat, m) * embed(lat, n);
    CHECK(exact_eq(prod, embed(lat, FMat(m * n))));

    QMat sum = embed(lat, m) + embed(lat, n);
    CHECK(exact_eq(sum, embed(lat, FMat(m + n))));

    FMat shifted = m;
    shifted(0, 0) = m(0, 0) + FieldElem(1);
    CHECK_FALSE(exact_eq(embed(lat, m), embed(lat, shifted)));
  }

  HermitianLattice lat = hyperbolic_unimodular(-2);
  QMat neg = embed(lat, scalar_matrix(2, FieldElem(-1)));
  QMat expect = q_identity(4);
  for (Eigen::Index i = 0; i < 4; ++i) expect(i, i) = -1;
  CHECK(exact_eq(neg, expect));

  CHECK(code_of([&] { embed(lat, FMat::Zero(3, 3)); }) == errc::bad_input);
}

TEST_CASE("scalar images satisfy their minimal polynomials") {
  // Multiplication by sqrt(-1) is exactly the j matrix of that field.
  HermitianLattice gauss = hyperbolic_unimodular(-1);
  QMat i_mat = embed(gauss, scalar_matrix(2, FieldElem::sqrt_d(-1)));
  CHECK(exact_eq(i_mat, to_q(j_matrix(gauss))));

  // Multiplication by a primitive cube root of unity: X^2 + X + 1 = 0.
  HermitianLattice eis = hyperbolic_unimodular(-3);
  FieldElem rho(Rat(-1, 2), Rat(1, 2), -3);
  CHECK(rho * rho * rho == FieldElem(1));
  QMat x = embed(eis, scalar_matrix(2, rho));
  QMat poly = x * x + x + q_identity(4);
  CHECK(is_zero_matrix(poly));
  QMat cube = x * x * x;
  CHECK(exact_eq(cube, q_identity(4)));

  for (int d : testutil::kFields) {
    HermitianLattice lat = scaled_hyperbolic(d);
    QMat jq = to_q(j_matrix(lat));

    // j^2 = d * identity.
    QMat sq = jq * jq;
    QMat expect = q_identity(4);
    for (Eigen::Index i = 0; i < 4; ++i) expect(i, i) = d;
    CHECK(exact_eq(sq, expect));

    // j matches multiplication by sqrt(d).
    QMat s = embed(lat, scalar_matrix(2, FieldElem::sqrt_d(d)));
    CHECK(exact_eq(s, jq));

    // Embedded maps are F-linear: they commute with j.
    std::mt19937_64 gen(811 + d);
    for (int iter = 0; iter < 20; ++iter) {
      FMat m = testutil::rand_integral_fmat(gen, d, 2, 2, 3);
      QMat lhs = jq * embed(lat, m) * jq;
      QMat rhs = embed(lat, m);
      rhs *= Rat(d);
      CHECK(exact_eq(lhs, rhs));
    }
  }

  ZMat j2 = j_matrix(scaled_hyperbolic(-2));
  ZMat expect2 = ZMat::Zero(4, 4);
  expect2(0, 1) = -2;
  expect2(1, 0) = 1;
  expect2(2, 3) = -2;
  expect2(3, 2) = 1;
  CHECK(exact_eq(j2, expect2));
}

TEST_CASE("the embedding transports the Hermitian form to the trace form") {
  std::mt19937_64 gen(3307);
  for (int iter = 0; iter < 60; ++iter) {
    int d = testutil::kFields[iter % 9];
    int rank = 2 + iter % 2;
    HermitianLattice lat = testutil::rand_lattice(gen, d, rank);
    QMat gq = to_q(trace_gram(lat));

    FVec x(rank), y(rank);
    for (int i = 0; i < rank; ++i) {
      x(i) = testutil::rand_integral_elem(gen, d, 3);
      y(i) = testutil::rand_integral_elem(gen, d, 3);
    }
    QVec cx = rational_coords(x, d);
    QVec cy = rational_coords(y, d);
    QVec gy = gq * cy;
    Rat bilinear = 0;
    for (Eigen::Index i = 0; i < cx.size(); ++i) bilinear += cx(i) * gy(i);
    CHECK(bilinear == inner(lat, x, y).trace());
  }

  // Unitary maps become isometries of the trace Gram.
  for (int d : {-1, -2, -3, -7}) {
    HermitianLattice lat = hyperbolic_unimodular(d);
    FVec e = e1(2);
    QMat gq = to_q(trace_gram(lat));
    CuspData data = div_of(lat, e);
    for (Int k = 0; k <= 2 * data.g; ++k) {
      FMat t = transvection(lat, e, Rat(k, data.g));
      QMat et = embed(lat, t);
      QMat pres = et.transpose() * gq * et;
      CHECK(exact_eq(pres, gq));
    }
    for (const FieldElem& u : units(d)) {
      QMat eu = embed(lat, scalar_matrix(2, u));
      QMat pres = eu.transpose() * gq * eu;
      CHECK(exact_eq(pres, gq));
    }
  }
}

TEST_CASE("image planes are primitive, isotropic, and carry the translation denominator") {
  std::mt19937_64 gen(5501);
  int checked = 0;
  int iter = 0;
  while (checked < 20) {
    int d = testutil::kFields[iter % 9];
    int rank = 2 + iter % 2;
    ++iter;
    HermitianLattice lat = rand_cusp_lattice(gen, d, rank);
    FVec e = e1(rank);
    OrthoCusp oc = ortho_cusp(lat, e);

    CHECK(minor_gcd(oc.basis) == 1);
    ZMat g = trace_gram(lat);
    ZMat pairings = oc.basis.transpose() * g * oc.basis;
    CHECK(is_zero_matrix(pairings));

    // Columns are the coordinates of e and omega*e.
    QVec c0 = rational_coords(e, d);
    FVec we(rank);
    for (int i = 0; i < rank; ++i) we(i) = FieldElem::omega(d) * e(i);
    QVec c1 = rational_coords(we, d);
    for (Eigen::Index i = 0; i < c0.size(); ++i) {
      CHECK(Rat(oc.basis(i, 0)) == c0(i));
      CHECK(Rat(oc.basis(i, 1)) == c1(i));
    }

    CHECK(oc.lambda_den == div_of(lat, e).g);
    ++checked;
  }

  HermitianLattice lat = hyperbolic_unimodular(-2);
  OrthoCusp oc = ortho_cusp(lat, e1(2));
  ZMat expect(4, 2);
  expect << 1, 0, 0, 1, 0, 0, 0, 0;
  CHECK(exact_eq(oc.basis, expect));
  CHECK(oc.lambda_den == 1);

  // Imprimitive or anisotropic vectors are rejected up front.
  CHECK(code_of([&] { ortho_cusp(lat, vec2(FieldElem(2), FieldElem(0))); }) ==
        errc::bad_input);
  CHECK(code_of([&] { ortho_cusp(scaled_hyperbolic(-2),
                                 vec2(FieldElem(1), FieldElem::sqrt_d(-2))); }) ==
        errc::bad_input);
}

TEST_CASE("unimodular planes classify as regular with a sign") {
  struct Expect {
    int d;
    const char* unitary;
    Rat lambda0;
  };
  const Expect kExpect[] = {
      {-1, "R4", Rat(1)},
      {-2, "R2", Rat(1)},
      {-3, "R6", Rat(1, 2)},
      {-7, "R2", Rat(1, 2)},
  };
  for (const Expect& ex : kExpect) {
    HermitianLattice lat = hyperbolic_unimodular(ex.d);
    FVec e = e1(2);
    SubgroupSpec spec = SubgroupSpec::disc_kernel();
    REQUIRE(classify(lat, e, spec).name == ex.unitary);
    OrthoType ot = ortho_classify(lat, e, spec);
    CHECK(ot.kind == OrthoKind::R2_O);
    CHECK(ot.regular());
    CHECK(ot.lambda0 == ex.lambda0);
    CHECK(ot.star_witness == 0);
  }
}

TEST_CASE("irregular and special planes map as predicted") {
  // A sign glued to a quarter translation survives on the trace side.
  {
    HermitianLattice lat = scaled_hyperbolic(-2);
    FVec e = e1(2);
    FVec cls = vec2(FieldElem(Rat(1, 4)), FieldElem(Rat(1, 2)));
    SubgroupSpec spec = SubgroupSpec::fix_classes({cls});
    REQUIRE(classify(lat, e, spec).name == "I2");
    OrthoType ot = ortho_classify(lat, e, spec);
    CHECK(ot.kind == OrthoKind::I2_O);
    CHECK_FALSE(ot.regular());
    CHECK(ot.lambda0 == Rat(1, 2));
    CHECK(ot.star_witness == Rat(1, 4));
    CHECK(ortho_cusp(lat, e).lambda_den == 4);
  }

  // Without any sign at all the image has no sign either.
  {
    HermitianLattice lat = scaled_hyperbolic(-2);
    FVec e = e1(2);
    FVec cls = vec2(FieldElem(Rat(-1, 4)), FieldElem(0));
    SubgroupSpec spec = SubgroupSpec::fix_classes({cls});
    REQUIRE(classify(lat, e, spec).name == "R1");
    OrthoType ot = ortho_classify(lat, e, spec);
    CHECK(ot.kind == OrthoKind::R1_O);
    CHECK(ot.regular());
  }

  // A special type over the Gaussian integers becomes plainly regular.
  {
    FMat h(2, 2);
    h << FieldElem(0), FieldElem(1), FieldElem(1), FieldElem(0);
    HermitianLattice lat{-1, h};
    FVec e = e1(2);
    FVec cls = vec2(FieldElem(0, Rat(-1, 2), -1), FieldElem(Rat(-1, 2), Rat(-1, 2), -1));
    SubgroupSpec spec = SubgroupSpec::fix_classes({cls});
    REQUIRE(classify(lat, e, spec).name == "SI2");
    OrthoType ot = ortho_classify(lat, e, spec);
    CHECK(ot.kind == OrthoKind::R2_O);
    CHECK(ot.regular());
    CHECK(ot.lambda0 == Rat(1));
    CHECK(ot.star_witness == 0);
  }

  // An index-2 irregular cusp over the Gaussian integers stays irregular.
  {
    FMat h(2, 2);
    h << FieldElem(0), FieldElem(1, 1, -1), FieldElem(1, -1, -1), FieldElem(0);
    HermitianLattice lat{-1, h};
    FVec e = e1(2);
    FVec cls = vec2(FieldElem(Rat(1, 4), Rat(1, 4), -1), FieldElem(Rat(1, 2)));
    SubgroupSpec spec = SubgroupSpec::fix_classes({cls});
    REQUIRE(classify(lat, e, spec).name == "I2");
    OrthoType ot = ortho_classify(lat, e, spec);
    CHECK(ot.kind == OrthoKind::I2_O);
    CHECK(ot.lambda0 == Rat(1));
    CHECK(ot.star_witness == Rat(1, 2));
  }
}

TEST_CASE("trace-side classification agrees with the predicted image") {
  std::mt19937_64 gen(40961);
  int done = 0;
  while (done < 24) {
    int d = testutil::kFields[done % 9];
    HermitianLattice lat = rand_cusp_lattice(gen, d, 2 + done % 2);
    FVec e = e1(lat.rank());
    for (const SubgroupSpec& spec :
         {SubgroupSpec::full(), SubgroupSpec::disc_kernel()}) {
      CuspType ut = classify(lat, e, spec);
      OrthoType ot = ortho_classify(lat, e, spec);
      CHECK(ot.kind == image_type(ut, d));

      QGroup q = q_group(lat, e, spec);
      CHECK(ot.lambda0 == Rat(1, q.g_gamma));
      CHECK(ortho_cusp(lat, e).lambda_den == q.g);
    }
    ++done;
  }
}

TEST_CASE("predicted images follow the unit parity rule") {
  struct TypeRow {
    const char* name;
    int d;
    int c;
    int z;
  };
  const TypeRow kTypeRows[] = {
      {"R1", -2, 1, 1},  {"R1", -7, 1, 1},   {"R2", -2, 2, 2},  {"R2", -11, 2, 2},
      {"I2", -2, 2, 1},  {"I2", -163, 2, 1}, {"R4", -1, 4, 4},  {"SI2", -1, 4, 2},
      {"I4", -1, 4, 1},  {"R3", -3, 3, 3},   {"R6", -3, 6, 6},  {"I3", -3, 3, 1},
      {"SI2", -3, 6, 3}, {"SI3", -3, 6, 2},  {"I6", -3, 6, 1},
  };
  for (const TypeRow& row : kTypeRows) {
    CAPTURE(row.name);
    CAPTURE(row.d);
    OrthoKind kind = image_type(CuspType{row.name, 1, {}, {}}, row.d);
    bool sign_in_units = has_minus_one(mu(row.d, row.c));
    bool sign_untwisted = has_minus_one(mu(row.d, row.z));
    if (!sign_in_units) {
      CHECK(kind == OrthoKind::R1_O);
    } else if (sign_untwisted) {
      CHECK(kind == OrthoKind::R2_O);
    } else {
      CHECK(kind == OrthoKind::I2_O);
    }
  }

  // Fixed landmark images.
  CHECK(image_type(CuspType{"SI2", 2, {}, {}}, -1) == OrthoKind::R2_O);
  CHECK(ortho_kind_regular(image_type(CuspType{"SI2", 2, {}, {}}, -1)));
  CHECK(image_type(CuspType{"R4", 1, {}, {}}, -1) == OrthoKind::R2_O);
  CHECK(image_type(CuspType{"I6", 6, {}, {}}, -3) == OrthoKind::I2_O);
  CHECK(image_type(CuspType{"SI3", 3, {}, {}}, -3) == OrthoKind::R2_O);
  CHECK(image_type(CuspType{"I3", 3, {}, {}}, -3) == OrthoKind::R1_O);
  CHECK(image_type(CuspType{"I2", 2, {}, {}}, -7) == OrthoKind::I2_O);

  CHECK(code_of([] { image_type(CuspType{"R4", 1, {}, {}}, -7); }) == errc::bad_input);
  CHECK(code_of([] { image_type(CuspType{"I6", 6, {}, {}}, -1); }) == errc::bad_input);
  CHECK(code_of([] { image_type(CuspType{"R3", 1, {}, {}}, -2); }) == errc::bad_input);
  CHECK(code_of([] { image_type(CuspType{"X9", 1, {}, {}}, -1); }) == errc::bad_input);

  CHECK(std::string(ortho_kind_name(OrthoKind::R1_O)) == "R1_O");
  CHECK(std::string(ortho_kind_name(OrthoKind::R2_O)) == "R2_O");
  CHECK(std::string(ortho_kind_name(OrthoKind::I2_O)) == "I2_O");
}

TEST_CASE("bridge reports carry both classifications and the audits") {
  HermitianLattice lat = hyperbolic_unimodular(-2);
  FVec e = e1(2);
  nlohmann::json rep = bridge_report(lat, e, SubgroupSpec::disc_kernel());
  CHECK(rep["unitary_type"] == "R2");
  CHECK(rep["orthogonal_type"] == "R2_O");
  CHECK(rep["predicted_type"] == "R2_O");
  CHECK(rep["prediction_audit"] == "match");
  CHECK(rep["preimage_equal"] == true);
  CHECK(rep["orthogonal_regular"] == true);
  CHECK(rep["lambda_den"] == 1);
  CHECK(rep["lambda0"] == "1");
  CHECK(rep["orthogonal_basis"] == nlohmann::json::parse(R"([[1,0,0,0],[0,1,0,0]])"));

  // The subgroup conditions match across the bridge on a varied battery.
  std::mt19937_64 gen(9103);
  for (int iter = 0; iter < 8; ++iter) {
    int d = testutil::kFields[iter % 9];
    HermitianLattice rl = rand_cusp_lattice(gen, d, 2);
    nlohmann::json r = bridge_report(rl, e1(2), SubgroupSpec::disc_kernel());
    CHECK(r["prediction_audit"] == "match");
    CHECK(r["preimage_equal"] == true);
  }

  FMat h(2, 2);
  h << FieldElem(0), FieldElem(1, 1, -1), FieldElem(1, -1, -1), FieldElem(0);
  HermitianLattice gauss{-1, h};
  FVec cls = vec2(FieldElem(Rat(1, 4), Rat(1, 4), -1), FieldElem(Rat(1, 2)));
  nlohmann::json irr = bridge_report(gauss, e1(2), SubgroupSpec::fix_classes({cls}));
  CHECK(irr["unitary_type"] == "I2");
  CHECK(irr["orthogonal_type"] == "I2_O");
  CHECK(irr["orthogonal_regular"] == false);
  CHECK(irr["prediction_audit"] == "match");
  CHECK(irr["preimage_equal"] == true);
  CHECK(irr["star_witness"] == "1/2");
}
