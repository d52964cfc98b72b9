#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cusps/zlinalg.hpp"
#include "test_util.hpp"

using namespace cusps;

namespace {

QMat to_q(const ZMat& m) {
  QMat q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return q;
}

}  // namespace

TEST_CASE("extended gcd") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 500; ++i) {
    Int a(testutil::rand_int(gen, -500, 500)), b(testutil::rand_int(gen, -500, 500));
    Int s, t;
    Int g = z_ext_gcd(a, b, s, t);
    CHECK(g == z_gcd(a, b));
    CHECK(s * a + t * b == g);
    CHECK(g >= 0);
  }
}

TEST_CASE("column hermite form") {
  std::mt19937_64 gen(22);
  for (int i = 0; i < 200; ++i) {
    ZMat a = testutil::rand_zmat(gen, 3, 5, 9);
    ColHnf h = z_col_hnf(a);
    CHECK(exact_eq(ZMat(a * h.u), h.h));
    Rat du = q_det(to_q(h.u));
    CHECK((du == 1 || du == -1));
    Eigen::Index prev_row = -1;
    for (const auto& [r, c] : h.pivots) {
      CHECK(h.h(r, c) > 0);
      CHECK(r > prev_row);
      prev_row = r;
      for (Eigen::Index j = c + 1; j < h.h.cols(); ++j) CHECK(h.h(r, j) == 0);
    }
  }
}

TEST_CASE("integer solving") {
  std::mt19937_64 gen(33);
  for (int i = 0; i < 200; ++i) {
    ZMat a = testutil::rand_zmat(gen, 3, 4, 7);
    ZVec x0(4);
    for (int k = 0; k < 4; ++k) x0(k) = Int(testutil::rand_int(gen, -5, 5));
    ZVec b = a * x0;
    auto x = z_solve(a, b);
    REQUIRE(x.has_value());
    CHECK(exact_eq(ZVec(a * *x), b));
  }
  ZMat two = ZMat::Identity(2, 2) * Int(2);
  ZVec odd(2);
  odd << 1, 0;
  CHECK(!z_solve(two, odd).has_value());
}

TEST_CASE("integer kernel") {
  std::mt19937_64 gen(44);
  for (int i = 0; i < 150; ++i) {
    ZMat a = testutil::rand_zmat(gen, 2, 4, 6);
    ZMat k = z_kernel(a);
    CHECK(is_zero_matrix(ZMat(a * k)));
    ColHnf ha = z_col_hnf(a);
    CHECK(k.cols() == 4 - static_cast<Eigen::Index>(ha.pivots.size()));
    // Kernel columns extend to a basis of Z^4, hence are saturated.
    if (k.cols() > 0) CHECK(z_elementary_divisors(k).empty());
  }
}

TEST_CASE("lattice index") {
  ZMat a(2, 2);
  a << 2, 0, 0, 3;
  CHECK(z_lattice_index(a) == 6);
  ZMat b(2, 3);
  b << 1, 0, 4, 0, 1, 7;
  CHECK(z_lattice_index(b) == 1);
}

TEST_CASE("smith form") {
  ZMat a(2, 2);
  a << 2, 4, 6, 8;
  SmithForm s = z_smith(a);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 4);
  CHECK(exact_eq(ZMat(s.u * a * s.v), s.d));

  std::mt19937_64 gen(55);
  for (int i = 0; i < 150; ++i) {
    ZMat m = testutil::rand_zmat(gen, 3, 4, 9);
    SmithForm f = z_smith(m);
    CHECK(exact_eq(ZMat(f.u * m * f.v), f.d));
    Rat du = q_det(to_q(f.u)), dv = q_det(to_q(f.v));
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (Eigen::Index r = 0; r < f.d.rows(); ++r)
      for (Eigen::Index c = 0; c < f.d.cols(); ++c)
        if (r != c) CHECK(f.d(r, c) == 0);
    for (Eigen::Index t = 0; t + 1 < std::min(f.d.rows(), f.d.cols()); ++t) {
      CHECK(f.d(t, t) >= 0);
      if (f.d(t, t) != 0 && f.d(t + 1, t + 1) != 0)
        CHECK(f.d(t + 1, t + 1) % f.d(t, t) == 0);
      if (f.d(t, t) == 0) CHECK(f.d(t + 1, t + 1) == 0);
    }
  }
}

TEST_CASE("signature of rational forms") {
  QMat diag = QMat::Zero(3, 3);
  diag(0, 0) = 1;
  diag(1, 1) = -2;
  diag(2, 2) = 3;
  FormSignature s = q_signature(diag);
  CHECK(s.pos == 2);
  CHECK(s.neg == 1);

  QMat hyp = QMat::Zero(2, 2);
  hyp(0, 1) = 1;
  hyp(1, 0) = 1;
  s = q_signature(hyp);
  CHECK(s.pos == 1);
  CHECK(s.neg == 1);

  QMat uu = QMat::Zero(4, 4);
  uu(0, 1) = uu(1, 0) = 1;
  uu(2, 3) = uu(3, 2) = 1;
  s = q_signature(uu);
  CHECK(s.pos == 2);
  CHECK(s.neg == 2);

  QMat sing(2, 2);
  sing << 1, 1, 1, 1;
  CHECK_THROWS_AS(q_signature(sing), error);

  // Mixed: a hyperbolic block sitting inside a bigger form.
  QMat m = QMat::Zero(3, 3);
  m(0, 1) = m(1, 0) = Rat(1, 2);
  m(2, 2) = -5;
  s = q_signature(m);
  CHECK(s.pos == 1);
  CHECK(s.neg == 2);
}

TEST_CASE("determinants and inverse over the field") {
  CHECK(q_det(to_q((ZMat(2, 2) << 1, 2, 3, 4).finished())) == -2);

  FMat m(2, 2);
  m << FieldElem(Rat(1), Rat(1), -2), FieldElem(2), FieldElem::sqrt_d(-2), FieldElem(1);
  // det = (1+sqrt(-2)) - 2 sqrt(-2) = 1 - sqrt(-2)
  CHECK(f_det(m) == FieldElem(Rat(1), Rat(-1), -2));
  FMat mi = f_inverse(m);
  CHECK(exact_eq(FMat(m * mi), FMat(FMat::Identity(2, 2))));
  CHECK(exact_eq(FMat(mi * m), FMat(FMat::Identity(2, 2))));

  std::mt19937_64 gen(66);
  int done = 0;
  while (done < 50) {
    FMat r = testutil::rand_integral_fmat(gen, -7, 3, 3, 4);
    if (f_det(r).is_zero()) continue;
    FMat ri = f_inverse(r);
    CHECK(exact_eq(FMat(r * ri), FMat(FMat::Identity(3, 3))));
    ++done;
  }

  FMat sing = FMat::Zero(2, 2);
  CHECK(f_det(sing).is_zero());
  CHECK_THROWS_AS(f_inverse(sing), error);
}
