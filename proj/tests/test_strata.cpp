#include "doctest.h"

#include <bit>

#include "hbstrata/strata.hpp"

using namespace hbstrata;

namespace {

CellProduct product(const std::string& code) {
  // 'a' = [1:0], 'b' = [0:1], 'L' = P^1
  CellProduct x;
  for (char c : code) {
    switch (c) {
      case 'a': x.cells.push_back(Cell::Pt10); break;
      case 'b': x.cells.push_back(Cell::Pt01); break;
      case 'L': x.cells.push_back(Cell::Line); break;
    }
  }
  return x;
}

}  // namespace

TEST_CASE("equations_for") {
  auto eqs = equations_for(2, 0);
  CHECK(eqs == MonomialEquationSet{EqTag::TS, EqTag::TS});
  eqs = equations_for(5, mask_of_tau({0, 2}, 5));
  CHECK(eqs == MonomialEquationSet{EqTag::TT, EqTag::TS, EqTag::TT, EqTag::TS,
                                   EqTag::TS});
  eqs = equations_for(6, mask_of_tau({0, 2, 3, 4}, 6));
  CHECK(eqs == MonomialEquationSet{EqTag::TT, EqTag::TS, EqTag::TT, EqTag::TT,
                                   EqTag::TT, EqTag::TS});
}

TEST_CASE("satisfies_identically") {
  CHECK(satisfies_identically(product("aaaaa"), equations_for(5, 0)));
  CHECK(satisfies_identically(product("aLaLb"),
                              equations_for(5, mask_of_tau({0, 2}, 5))));
  CHECK_FALSE(satisfies_identically(product("LL"), equations_for(2, 0)));
}

TEST_CASE("containment") {
  CHECK(product("ab").contained_in(product("Lb")));
  CHECK_FALSE(product("ab").contained_in(product("bb")));
  CHECK(product("LL").dimension() == 2);
  CHECK(product("ab").dimension() == 0);
}

TEST_CASE("enumerate_components fixtures") {
  SUBCASE("empty tau") {
    auto comps = enumerate_components(4, 0);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == product("aaaa"));
    CHECK(comps[1] == product("bbbb"));
  }
  SUBCASE("g=5 tau={0,2}") {
    auto comps = enumerate_components(5, mask_of_tau({0, 2}, 5));
    REQUIRE(comps.size() == 4);
    int dim1 = 0, dim2 = 0;
    for (const auto& c : comps) {
      if (c.dimension() == 1) ++dim1;
      if (c.dimension() == 2) ++dim2;
    }
    CHECK(dim1 == 2);
    CHECK(dim2 == 2);
  }
  SUBCASE("g=6 tau={0,2,3,4}") {
    auto comps = enumerate_components(6, mask_of_tau({0, 2, 3, 4}, 6));
    REQUIRE(comps.size() == 5);
  }
  CHECK_THROWS_AS(enumerate_components(13, 0), std::invalid_argument);
}

TEST_CASE("max_dimension and top_dim_count") {
  CHECK(max_dimension(5, mask_of_tau({0, 2}, 5)) == 2);
  CHECK(max_dimension(6, mask_of_tau({0, 2, 3, 4}, 6)) == 3);
  CHECK(max_dimension(2, 0) == 0);
  CHECK(top_dim_count(5, mask_of_tau({0, 2}, 5)) == 2);
  CHECK(top_dim_count(3, 0) == 2);
  CHECK(top_dim_count(4, mask_of_tau({0, 2}, 4)) == 1);
  CHECK_THROWS_AS(top_dim_count(3, mask_of_tau({0, 1}, 3)), std::invalid_argument);
}

TEST_CASE("frobenius system") {
  SUBCASE("no odd support positions") {
    auto sys = ss_frobenius_equations(2, AlphaType::inert(2, 0b01));
    CHECK(sys.rotation == 0);
    CHECK(sys.equations.empty());
  }
  SUBCASE("full support on g=2") {
    auto sys = ss_frobenius_equations(2, AlphaType::inert(2, 0b11));
    REQUIRE(sys.equations.size() == 1);
    CHECK(sys.equations[0] == std::pair<int, int>{0, 0});
  }
  SUBCASE("g=4 with one odd position") {
    auto sys = ss_frobenius_equations(4, AlphaType::inert(4, 0b0111));
    REQUIRE(sys.equations.size() == 1);
    CHECK(sys.equations[0] == std::pair<int, int>{0, 1});
  }
  SUBCASE("odd alternating pattern is rotated") {
    auto sys = ss_frobenius_equations(4, AlphaType::inert(4, 0b1010));
    CHECK(sys.rotation == 1);
    CHECK(sys.equations.empty());
  }
  CHECK_THROWS_AS(ss_frobenius_equations(3, AlphaType::inert(3, 0b111)),
                  std::invalid_argument);
  CHECK_THROWS_AS(ss_frobenius_equations(4, AlphaType::inert(4, 0b0011)),
                  std::invalid_argument);
}

TEST_CASE("frobenius locus point counts") {
  CHECK(count_points_ss_locus(2, AlphaType::inert(2, 0b01), 3, 2) == 10);
  CHECK(count_points_ss_locus(2, AlphaType::inert(2, 0b11), 3, 2) == 10);
  CHECK(count_points_ss_locus(4, AlphaType::inert(4, 0b0101), 2, 2) == 25);
  // chain of length one over F_4: one free coordinate
  CHECK(count_points_ss_locus(4, AlphaType::inert(4, 0b0111), 2, 2) == 5);
  CHECK_THROWS_AS(count_points_ss_locus(2, AlphaType::inert(2, 0b01), 3, 3),
                  std::invalid_argument);
  // (q+1)^d over the enumeration cap
  CHECK_THROWS_AS(count_points_ss_locus(8, AlphaType::inert(8, 0b01010101), 5, 4),
                  std::invalid_argument);
  SUBCASE("q = p^4 counts match the free-coordinate formula") {
    for (int p : {2, 3}) {
      FiniteField k(p, 4);
      unsigned long long q1 = k.order() + 1;
      CHECK(count_points_ss_locus(4, AlphaType::inert(4, 0b0101), p, 4) == q1 * q1);
      CHECK(count_points_ss_locus(4, AlphaType::inert(4, 0b0111), p, 4) == q1);
      // full cycle: fixed points of the p^4-power Frobenius in F_{p^4}
      CHECK(count_points_ss_locus(4, AlphaType::inert(4, 0b1111), p, 4) == q1);
    }
    // over F_{5^4} spot-check one chain and the full cycle at g=6
    unsigned long long q1 = 626;
    CHECK(count_points_ss_locus(4, AlphaType::inert(4, 0b0111), 5, 4) == q1);
    CHECK(count_points_ss_locus(6, AlphaType::inert(6, 0b010111), 5, 4) == q1 * q1);
    // cyclic equations x^(p^6) = x inside F_{5^4}: fixed field is F_25
    CHECK(count_points_ss_locus(6, AlphaType::inert(6, 0b111111), 5, 4) == 26);
  }
}

TEST_CASE("component lists are canonical and reproducible") {
  auto a = enumerate_components(6, mask_of_tau({0, 2, 3, 4}, 6));
  auto b = enumerate_components(6, mask_of_tau({0, 2, 3, 4}, 6));
  CHECK(a == b);
  for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].cells < a[i].cells);
}
