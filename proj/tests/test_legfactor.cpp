#include "doctest.h"
#include "pytrip/legfactor.hpp"
#include "support.hpp"

using namespace pytrip;

namespace {

std::vector<FactorSplit> brute_splits(u64 a) {
  std::vector<FactorSplit> out;
  for (const auto& [u, v] : test::brute_factor_pairs(a * a))
    if (u < v && u % 2 == v % 2) out.push_back({u, v});
  return out;
}

}  // namespace

TEST_CASE("uv_splits") {
  CHECK(uv_splits(20) == std::vector<FactorSplit>{{2, 200}, {4, 100}, {8, 50}, {10, 40}});
  CHECK(uv_splits(3) == brute_splits(3));
  CHECK(uv_splits(3) == std::vector<FactorSplit>{{1, 9}});
  CHECK(uv_splits(4) == brute_splits(4));
  CHECK(uv_splits(4) == std::vector<FactorSplit>{{2, 8}});
  for (u64 a = 3; a <= 500; ++a) REQUIRE(uv_splits(a) == brute_splits(a));
  CHECK(uv_splits(6) == std::vector<FactorSplit>{{2, 18}});
  CHECK_THROWS_AS(uv_splits(2), DomainError);
  CHECK_THROWS_AS(uv_splits(u64{1} << 33), OverflowError);
}

TEST_CASE("triples_for_leg worked examples") {
  const auto t20 = triples_for_leg(20);
  REQUIRE(t20.size() == 4);
  CHECK(t20[0].triple == Triple{20, 99, 101});
  CHECK(t20[1].triple == Triple{20, 48, 52});
  CHECK(t20[2].triple == Triple{20, 21, 29});
  CHECK(t20[3].triple == Triple{20, 15, 25});
  CHECK(t20[0].c_minus_b() == 2);
  CHECK(t20[1].c_minus_b() == 4);
  CHECK(t20[2].c_minus_b() == 8);
  CHECK(t20[3].c_minus_a() == 5);
  CHECK(std::count_if(t20.begin(), t20.end(), [](const LegTriple& t) { return t.primitive; }) == 2);

  const auto t12 = triples_for_leg(12);
  REQUIRE(t12.size() == 4);
  CHECK(t12[0].triple == Triple{12, 35, 37});
  CHECK(t12[0].primitive);
  CHECK(t12[1].triple == Triple{12, 16, 20});
  CHECK_FALSE(t12[1].primitive);
  CHECK(t12[2].triple == Triple{12, 9, 15});
  CHECK_FALSE(t12[2].primitive);
  CHECK(t12[3].triple == Triple{12, 5, 13});
  CHECK(t12[3].primitive);

  const auto t3 = triples_for_leg(3);
  REQUIRE(t3.size() == 1);
  CHECK(t3[0].triple == Triple{3, 4, 5});
  CHECK(t3[0].c_minus_b() == 1);
}

TEST_CASE("triple_for_leg_and_diff") {
  CHECK(triple_for_leg_and_diff(12, 2) == Triple{12, 35, 37});
  CHECK_FALSE(triple_for_leg_and_diff(12, 1));
  CHECK(triple_for_leg_and_diff(12, 6) == Triple{12, 9, 15});
  CHECK_THROWS_AS(triple_for_leg_and_diff(12, 12), DomainError);
  CHECK_THROWS_AS(triple_for_leg_and_diff(12, 5), DomainError);
  CHECK_THROWS_AS(triple_for_leg_and_diff(12, 0), DomainError);
}

TEST_CASE("leg_diff_table for a = 12") {
  const auto rows = leg_diff_table(12);
  REQUIRE(rows.size() == 7);
  const std::vector<u64> ds{1, 2, 3, 4, 6, 8, 9};
  const std::vector<u64> q{143, 70, 45, 32, 18, 10, 7};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].d == ds[i]);
    CHECK(rows[i].quotient_minus_d == q[i]);
    CHECK(rows[i].triple.has_value() == rows[i].even());
  }
}

TEST_CASE("split identities and reported differences") {
  for (u64 a = 3; a <= 300; ++a) {
    for (const LegTriple& lt : triples_for_leg(a)) {
      const Triple& t = lt.triple;
      REQUIRE(t.c - t.b == lt.split.u);
      REQUIRE(t.c + t.b == lt.split.v);
      const auto cls = classify(t);
      REQUIRE(cls);
      REQUIRE(cls->d == std::min(lt.split.u, t.c - a));
    }
  }
}

TEST_CASE("triples_for_leg is the complete set of triples with that leg") {
  const auto& oracle = test::oracle_c_below_1e5();
  for (u64 a = 3; a <= 300; ++a) {
    std::vector<Triple> expected;
    for (const Triple& t : oracle)
      if (t.a == a || t.b == a) expected.push_back(t);
    std::vector<Triple> got;
    for (const LegTriple& lt : triples_for_leg(a)) got.push_back(canonicalize(lt.triple));
    std::sort(got.begin(), got.end());
    REQUIRE(got == expected);
  }
  // Formula-free route for a few legs.
  for (u64 a : {3u, 12u, 20u, 60u, 97u}) {
    std::vector<Triple> got;
    for (const LegTriple& lt : triples_for_leg(a)) got.push_back(lt.triple);
    auto brute = test::brute_triples_with_leg(a);
    std::sort(got.begin(), got.end());
    CHECK(got == brute);
  }
}

TEST_CASE("the u,v and a,d methods enumerate the same set") {
  for (u64 a = 3; a <= 300; ++a) {
    const u64 a2 = a * a;
    const auto splits = uv_splits(a);
    for (u64 d = 1; d < a; ++d) {
      if (a2 % d != 0) continue;
      const bool valid = std::find(splits.begin(), splits.end(), FactorSplit{d, a2 / d}) != splits.end();
      REQUIRE(triple_for_leg_and_diff(a, d).has_value() == valid);
    }
  }
}
