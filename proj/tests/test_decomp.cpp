#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cusps/decomp.hpp"
#include "cusps/error.hpp"

using namespace cusps;

namespace {

// Structures of all solutions, sorted for set comparison.
std::vector<std::vector<int>> structures_of(const std::vector<DecompSolution>& sols) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sols) out.push_back(s.structure);
  std::sort(out.begin(), out.end());
  return out;
}

// All quotient shapes a (as multiplicity vectors) with sum i*a_i = r.
std::vector<std::vector<int>> quotient_shapes(int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> part;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      int top = part.empty() ? 1 : part.front();
      std::vector<int> a(top, 0);
      for (int v : part) ++a[v - 1];
      out.push_back(a);
      return;
    }
    for (int v = std::min(remaining, maxpart); v >= 1; --v) {
      part.push_back(v);
      self(self, remaining - v, v);
      part.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

}  // namespace

TEST_CASE("the two extensions of a line by a line") {
  auto sols = decomp_enumerate({1, {1}});
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].indices == std::vector<int>{0});
  CHECK(sols[0].multiplicities == std::vector<int>{1});
  CHECK(sols[0].structure == std::vector<int>{1, 1});
  CHECK(sols[1].indices == std::vector<int>{1});
  CHECK(sols[1].multiplicities == std::vector<int>{1});
  CHECK(sols[1].structure == std::vector<int>{2});

  auto oracle = decomp_oracle(2, {1, {1}});
  CHECK(oracle == structures_of(sols));
}

TEST_CASE("extensions of a line by a plane length two") {
  auto sols = decomp_enumerate({2, {1}});
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].indices == std::vector<int>{0});
  CHECK(sols[0].structure == std::vector<int>{2, 1});
  CHECK(sols[1].indices == std::vector<int>{1});
  CHECK(sols[1].structure == std::vector<int>{3});
  CHECK(decomp_oracle(2, {2, {1}}) == structures_of(sols));
}

TEST_CASE("length-three sub under a single length-two quotient factor") {
  DecompProblem problem{3, {0, 1}};
  auto sols = decomp_enumerate(problem);
  REQUIRE(sols.size() == 3);
  // sorted by (chain length, indices, multiplicities)
  CHECK(sols[0].indices == std::vector<int>{0});
  CHECK(sols[0].multiplicities == std::vector<int>{3});
  CHECK(sols[0].structure == std::vector<int>{3, 2});
  CHECK(sols[1].indices == std::vector<int>{2});
  CHECK(sols[1].multiplicities == std::vector<int>{3});
  CHECK(sols[1].structure == std::vector<int>{5});
  CHECK(sols[2].indices == std::vector<int>{0, 2});
  CHECK(sols[2].multiplicities == std::vector<int>{1, 2});
  CHECK(sols[2].structure == std::vector<int>{4, 1});

  CHECK(decomp_oracle(2, problem) == structures_of(sols));
}

TEST_CASE("multiplicity-two quotient factor loses one copy when extended") {
  auto sols = decomp_enumerate({1, {2}});
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].structure == std::vector<int>{1, 1, 1});
  CHECK(sols[1].structure == std::vector<int>{2, 1});
  CHECK(decomp_oracle(3, {1, {2}}) == structures_of(sols));
}

TEST_CASE("trivial quotient leaves only the cyclic module") {
  auto sols = decomp_enumerate({4, {0}});
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].indices == std::vector<int>{0});
  CHECK(sols[0].structure == std::vector<int>{4});
  CHECK(decomp_oracle(2, {4, {0}}) == structures_of(sols));
}

TEST_CASE("enumeration and brute force agree on every small problem") {
  for (int p : {2, 3}) {
    int checked = 0;
    for (int e = 1; e <= 6; ++e) {
      for (int m = 1; m <= e; ++m) {
        for (const auto& a : quotient_shapes(e - m)) {
          DecompProblem problem{m, a};
          auto sols = decomp_enumerate(problem);
          auto got = structures_of(sols);
          // the correspondence is one-to-one: no two tuples share a structure
          CHECK(std::set<std::vector<int>>(got.begin(), got.end()).size() == got.size());
          CHECK(got == decomp_oracle(p, problem));
          ++checked;
        }
      }
    }
    CHECK(checked > 40);
  }
}

TEST_CASE("every solution independently satisfies the defining constraints") {
  std::mt19937 gen(2026);
  std::uniform_int_distribution<int> mdist(1, 6);
  std::uniform_int_distribution<int> len(1, 5);
  std::uniform_int_distribution<int> mult(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    DecompProblem problem{mdist(gen), {}};
    problem.a.resize(len(gen));
    for (int& v : problem.a) v = mult(gen);

    int total = problem.m;
    for (std::size_t j = 0; j < problem.a.size(); ++j)
      total += static_cast<int>(j + 1) * problem.a[j];

    auto sols = decomp_enumerate(problem);
    REQUIRE(!sols.empty());  // the chain {0} always works
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (std::size_t n = 0; n < sols.size(); ++n) {
      const auto& s = sols[n];
      REQUIRE(s.indices.size() == s.multiplicities.size());
      REQUIRE(!s.indices.empty());
      CHECK(seen.insert({s.indices, s.multiplicities}).second);

      int k = static_cast<int>(s.indices.size()) - 1;
      int sum = 0;
      for (int l = 0; l <= k; ++l) {
        if (l > 0) CHECK(s.indices[l] > s.indices[l - 1]);
        int i = s.indices[l];
        int ai = (i >= 1 && i <= static_cast<int>(problem.a.size())) ? problem.a[i - 1] : 0;
        if (l > 0 || i > 0) CHECK(ai > 0);
        CHECK(s.multiplicities[l] > 0);
        if (l < k) CHECK(s.multiplicities[l] < s.indices[l + 1] - s.indices[l]);
        sum += s.multiplicities[l];
      }
      CHECK(sum == problem.m);

      int structure_total = 0;
      for (std::size_t t = 0; t < s.structure.size(); ++t) {
        structure_total += s.structure[t];
        CHECK(s.structure[t] > 0);
        if (t > 0) CHECK(s.structure[t] <= s.structure[t - 1]);
      }
      CHECK(structure_total == total);

      if (n > 0) {
        const auto& prev = sols[n - 1];
        auto key = [](const DecompSolution& v) {
          return std::make_tuple(v.indices.size(), v.indices, v.multiplicities);
        };
        CHECK(key(prev) < key(s));
      }
    }
  }
}

TEST_CASE("invalid problems and oversized brute-force requests are rejected") {
  CHECK_THROWS_WITH_AS(decomp_enumerate({0, {1}}), "the submodule length m must be positive",
                       error);
  CHECK_THROWS_AS(decomp_enumerate({1, {}}), error);
  CHECK_THROWS_AS(decomp_enumerate({1, {1, -1}}), error);
  CHECK_THROWS_AS(decomp_oracle(5, {1, {1}}), error);

  try {
    decomp_oracle(3, {8, {0}});  // order 3^8 over the 3^7 cap
    FAIL("expected a size cap error");
  } catch (const error& e) {
    CHECK(e.code() == errc::size_cap);
  }
  try {
    decomp_oracle(2, {12, {0}});  // 2^12 > 3^7
    FAIL("expected a size cap error");
  } catch (const error& e) {
    CHECK(e.code() == errc::size_cap);
  }
  // 2^11 < 3^7 still fits
  CHECK(decomp_oracle(2, {11, {0}}) == std::vector<std::vector<int>>{{11}});
}
