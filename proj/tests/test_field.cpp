#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cusps/field.hpp"
#include "test_util.hpp"

using namespace cusps;

TEST_CASE("rational helpers") {
  CHECK(rat_floor(Rat(-3, 2)) == -2);
  CHECK(rat_floor(Rat(3, 2)) == 1);
  CHECK(rat_floor(Rat(4)) == 4);
  CHECK(int_sqrt_floor(Int(8)) == 2);
  CHECK(int_sqrt_floor(Int(9)) == 3);
  CHECK(int_sqrt_floor(Int(0)) == 0);
}

TEST_CASE("field element arithmetic") {
  FieldElem a(Rat(1), Rat(1), -2);   // 1 + sqrt(-2)
  FieldElem b = a.conj();
  CHECK(a * b == FieldElem(3));
  CHECK(a + b == FieldElem(2));
  CHECK(a.norm() == 3);
  CHECK(a.trace() == 2);
  CHECK((a / a) == FieldElem(1));
  CHECK((FieldElem(1) / a) * a == FieldElem(1));

  FieldElem w = FieldElem::omega(-3);
  CHECK(w.norm() == 1);
  CHECK(w * w == w - FieldElem(1));  // sixth root of unity
  CHECK(w * w * w == FieldElem(-1));
}

TEST_CASE("omega satisfies its minimal polynomial") {
  for (int d : testutil::kFields) {
    FieldElem w = FieldElem::omega(d);
    if (field_one_mod4(d)) {
      Rat t((d - 1) / 4);
      CHECK(w * w == w + FieldElem(t));
    } else {
      CHECK(w * w == FieldElem(Rat(d)));
    }
  }
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 gen(20260815);
  for (int i = 0; i < 1000; ++i) {
    int d = testutil::kFields[i % 9];
    FieldElem a = testutil::rand_integral_elem(gen, d, 50);
    FieldElem b = testutil::rand_integral_elem(gen, d, 50);
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("integrality") {
  CHECK(is_integral(FieldElem(Rat(1, 2), Rat(1, 2), -7), -7));
  CHECK(!is_integral(FieldElem(Rat(0), Rat(1, 2), -7), -7));
  CHECK(is_integral(FieldElem(Rat(1), Rat(2), -2), -2));
  CHECK(!is_integral(FieldElem(Rat(1, 2), Rat(0), -2), -2));
  CHECK(is_integral(FieldElem(5), -163));

  std::mt19937_64 gen(7);
  for (int i = 0; i < 500; ++i) {
    int d = testutil::kFields[i % 9];
    FieldElem z(Rat(testutil::rand_int(gen, -20, 20), testutil::rand_int(gen, 1, 4)),
                Rat(testutil::rand_int(gen, -20, 20), testutil::rand_int(gen, 1, 4)), d);
    CHECK(is_integral(z, d) == is_integral(z.conj(), d));
  }
}

TEST_CASE("integer coordinates round trip") {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 500; ++i) {
    int d = testutil::kFields[i % 9];
    Int u(testutil::rand_int(gen, -30, 30)), v(testutil::rand_int(gen, -30, 30));
    FieldElem z = from_integer_coords(u, v, d);
    CHECK(is_integral(z, d));
    auto [uu, vv] = integer_coords(z, d);
    CHECK(uu == u);
    CHECK(vv == v);
  }
}

TEST_CASE("inverse different membership") {
  CHECK(in_inv_different(FieldElem(Rat(0), Rat(1, 7), -7), -7));    // 1/sqrt(-7) = -sqrt(-7)/7... sign irrelevant
  CHECK(in_inv_different(FieldElem(1) / FieldElem::sqrt_d(-7), -7));
  CHECK(!in_inv_different(FieldElem(1) / (FieldElem(2) * FieldElem::sqrt_d(-7)), -7));
  CHECK(in_inv_different(FieldElem(1) / (FieldElem(2) * FieldElem::sqrt_d(-2)), -2));
  CHECK(!in_inv_different(FieldElem(1) / (FieldElem(4) * FieldElem::sqrt_d(-2)), -2));
  CHECK(in_inv_different(FieldElem(Rat(1, 2)), -2));
  CHECK(!in_inv_different(FieldElem(Rat(1, 2)), -7));
  // The generator itself.
  for (int d : testutil::kFields) {
    CHECK(in_inv_different(inv_different_gen(d), d));
    CHECK(!in_inv_different(inv_different_gen(d) / FieldElem(2), d));
  }
}

TEST_CASE("unit groups") {
  CHECK(units(-1).size() == 4);
  CHECK(units(-3).size() == 6);
  CHECK(units(-2).size() == 2);
  CHECK(units(-163).size() == 2);
  for (int d : testutil::kFields)
    for (const FieldElem& u : units(d)) {
      CHECK(u.norm() == 1);
      CHECK(is_integral(u, d));
    }
}

TEST_CASE("canonical associate") {
  CHECK(canonical_associate(FieldElem(Rat(1), Rat(1), -1), -1) ==
        FieldElem(Rat(1), Rat(1), -1));
  CHECK(canonical_associate(FieldElem(Rat(-1), Rat(1), -1), -1) ==
        FieldElem(Rat(1), Rat(1), -1));
  CHECK(canonical_associate(FieldElem(-2), -1) == FieldElem(2));

  std::mt19937_64 gen(4242);
  for (int i = 0; i < 400; ++i) {
    int d = testutil::kFields[i % 9];
    FieldElem z = testutil::rand_nonzero_integral_elem(gen, d, 12);
    FieldElem c = canonical_associate(z, d);
    CHECK(canonical_associate(c, d) == c);  // idempotent
    for (const FieldElem& u : units(d))
      CHECK(canonical_associate(z * u, d) == c);  // class function
  }
}

TEST_CASE("norm bounded enumeration") {
  auto g1 = norm_bounded_elements(Rat(2), -1);
  CHECK(g1.size() == 8);  // four units and the four elements of norm 2
  auto e1 = norm_bounded_elements(Rat(1), -3);
  CHECK(e1.size() == 6);
  auto big = norm_bounded_elements(Rat(3), -163);
  CHECK(big.size() == 2);  // just the units: omega already has norm 41
  for (const FieldElem& z : norm_bounded_elements(Rat(20), -7)) {
    CHECK(!z.is_zero());
    CHECK(z.norm() <= 20);
    CHECK(is_integral(z, -7));
  }
}

TEST_CASE("divisibility") {
  CHECK(of_divides(FieldElem(Rat(1), Rat(1), -1), FieldElem(2), -1));
  CHECK(!of_divides(FieldElem(2), FieldElem(Rat(1), Rat(1), -1), -1));
  CHECK(of_divides(FieldElem::omega(-7), FieldElem(2), -7));
}

TEST_CASE("parsing and printing") {
  CHECK(parse_rat("3/2") == Rat(3, 2));
  CHECK(parse_rat("-4") == Rat(-4));
  CHECK(parse_field_elem("sqrt(-2)") == FieldElem::sqrt_d(-2));
  CHECK(parse_field_elem("-sqrt(-2)") == -FieldElem::sqrt_d(-2));
  CHECK(parse_field_elem("1-1/2*sqrt(-3)") == FieldElem(Rat(1), Rat(-1, 2), -3));
  CHECK(parse_field_elem("3/2*sqrt(-7)") == FieldElem(Rat(0), Rat(3, 2), -7));
  CHECK(parse_field_elem("2+sqrt(-11)") == FieldElem(Rat(2), Rat(1), -11));
  CHECK(parse_field_elem(" 1/2 + 1/2 * sqrt( -7 ) ") == FieldElem::omega(-7));
  CHECK(parse_field_elem("0") == FieldElem(0));

  CHECK_THROWS_AS(parse_field_elem("sqrt(-2)+sqrt(-3)"), error);
  CHECK_THROWS_AS(parse_field_elem("1 + + 2"), error);
  CHECK_THROWS_AS(parse_field_elem(""), error);
  CHECK_THROWS_AS(parse_field_elem("1/0"), error);
  CHECK_THROWS_AS(parse_field_elem("sqrt(-2)", -3), error);

  std::mt19937_64 gen(555);
  for (int i = 0; i < 300; ++i) {
    int d = testutil::kFields[i % 9];
    FieldElem z(Rat(testutil::rand_int(gen, -99, 99), testutil::rand_int(gen, 1, 12)),
                Rat(testutil::rand_int(gen, -99, 99), testutil::rand_int(gen, 1, 12)), d);
    CHECK(parse_field_elem(to_string(z)) == z);
  }
}

TEST_CASE("error taxonomy") {
  CHECK(std::string(errc_name(errc::bad_input)) == "bad_input");
  CHECK(errc_exit_code(errc::bad_input) == 1);
  CHECK(errc_exit_code(errc::unknown_case) == 1);
  CHECK(errc_exit_code(errc::internal) == 2);
  CHECK(errc_exit_code(errc::unclassifiable_pair) == 2);
  try {
    fail(errc::degenerate, "boom", {{"index", 3}});
  } catch (const error& e) {
    CHECK(e.code() == errc::degenerate);
    CHECK(e.to_json()["details"]["index"] == 3);
  }
}
