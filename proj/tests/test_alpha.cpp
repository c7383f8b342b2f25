#include "doctest.h"

#include <bit>

#include "hbstrata/alpha.hpp"

using namespace hbstrata;

namespace {

AlphaType inert(const std::string& bits) {
  int g = static_cast<int>(bits.size());
  std::uint32_t m = 0;
  for (int i = 0; i < g; ++i)
    if (bits[i] == '1') m |= 1u << i;
  return AlphaType::inert(g, m);
}

}  // namespace

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(RamificationProfile(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(RamificationProfile({2, 0}), std::invalid_argument);
  CHECK(RamificationProfile({2, 3}).genus() == 5);
  CHECK(RamificationProfile::parse("2,2") == RamificationProfile({2, 2}));
  CHECK(RamificationProfile({2}).all_even());
  CHECK_FALSE(RamificationProfile({2, 3}).all_even());
}

TEST_CASE("size") {
  CHECK(inert("0000").size() == 0);
  CHECK(inert("10100").size() == 2);
  CHECK(inert("111").size() == 3);
  CHECK(AlphaType(RamificationProfile({2, 3}), {0b01, 0b101}).size() == 3);
}

TEST_CASE("preceq examples") {
  CHECK(preceq(inert("11"), inert("10")));
  CHECK_FALSE(preceq(inert("10"), inert("01")));
  CHECK(preceq(inert("10"), inert("10")));
  CHECK_THROWS_AS(preceq(inert("10"), inert("100")), std::invalid_argument);
}

TEST_CASE("genericity") {
  // the seven generic types on g = 4
  int count = 0;
  for (std::uint32_t m = 0; m < 16; ++m)
    if (is_generic_mask(m, 4)) ++count;
  CHECK(count == 7);
  CHECK(is_generic(inert("0000")));
  CHECK(is_generic(inert("1010")));
  CHECK(is_generic(inert("0101")));
  CHECK_FALSE(is_generic(inert("110")));
  CHECK_FALSE(is_generic(inert("1")));  // length-1 block: a_0 a_0 = 1
  CHECK(is_generic(AlphaType(RamificationProfile({2, 2}), {0b01, 0b10})));
}

TEST_CASE("weight w") {
  CHECK(weight_w(inert("0000")) == 2);
  CHECK(weight_w(inert("00")) == 2);
  CHECK(weight_w(inert("10100")) == 2);  // gaps (2-0-1)(5+0-2-1)
  CHECK(weight_w(inert("1010")) == 1);
  CHECK(weight_w(inert("110")) == 0);
  CHECK(weight_w(inert("100")) == 2);  // single gap of length 3
  SUBCASE("positive exactly on generic types") {
    for (int g = 1; g <= 10; ++g)
      for (std::uint32_t m = 0; m < (1u << g); ++m)
        CHECK((weight_w_mask(m, g) > 0) == is_generic_mask(m, g));
  }
}

TEST_CASE("weight w'") {
  CHECK(weight_w_prime(inert("100"), Rational(99)) == 2);
  AlphaType split_ss(RamificationProfile({2, 2}), {0b01, 0b10});
  CHECK(weight_w_prime(split_ss, Rational(6)) == 6);
  CHECK(weight_w_prime(inert("00"), Rational(123)) == 2);
  // supersingular but not generic: falls through to the product
  CHECK(weight_w_prime(inert("11"), Rational(7)) == 0);
}

TEST_CASE("lambda") {
  CHECK(lambda_max(inert("11")).lambda == 1);
  CHECK(lambda_max(inert("0000")).lambda == 0);
  CHECK_FALSE(lambda_max(inert("0000")).superspecial_exception);
  CHECK(lambda_max(inert("111")).superspecial_exception);
  SUBCASE("generic types realize their size") {
    for (int g = 1; g <= 12; ++g)
      for (std::uint32_t m = 0; m < (1u << g); ++m)
        if (is_generic_mask(m, g))
          CHECK(lambda_max_mask(m, g).lambda == std::popcount(m));
  }
  SUBCASE("brute force over generic minorants") {
    for (int g = 1; g <= 10; ++g)
      for (std::uint32_t m = 0; m < (1u << g); ++m) {
        int best = 0;
        std::uint32_t sub = m;
        while (true) {
          if (is_generic_mask(sub, g))
            best = std::max(best, std::popcount(sub));
          if (sub == 0) break;
          sub = (sub - 1) & m;
        }
        CHECK(lambda_max_mask(m, g).lambda == best);
      }
  }
}

TEST_CASE("supersingular classifier") {
  CHECK(is_supersingular(inert("10")));
  CHECK_FALSE(is_supersingular(inert("00")));
  CHECK(is_supersingular(inert("111")));
  CHECK_FALSE(is_supersingular(inert("110")));
  CHECK(is_supersingular(AlphaType(RamificationProfile({2, 3}), {0b01, 0b111})));
  CHECK(is_supersingular(inert("11")));
  CHECK(is_supersingular(inert("1")));  // odd length-1 block, all ones
}

TEST_CASE("slopes") {
  CHECK(slope_of_stratum(inert("1000")) == SlopeSequence{Rational(1), 4});
  CHECK(slope_of_stratum(inert("000")) == SlopeSequence{Rational(0), 3});
  CHECK(slope_of_stratum(inert("111")) == SlopeSequence{Rational(3, 2), 3});
  CHECK(slope_of_stratum(inert("111")).to_string() == "s(3/2,3)");
  CHECK(slope_of_stratum(inert("1010")) == SlopeSequence{Rational(2), 4});
}

TEST_CASE("enumerate_types") {
  CHECK(enumerate_types(RamificationProfile({4}), TypeFilter::All).size() == 16);
  CHECK(enumerate_types(RamificationProfile({4}), TypeFilter::Generic).size() == 7);
  CHECK(enumerate_types(RamificationProfile({3}), TypeFilter::GenericSupersingular)
            .empty());
  CHECK(enumerate_types(RamificationProfile({2, 2}),
                        TypeFilter::GenericSupersingular)
            .size() == 4);
  CHECK(enumerate_types(RamificationProfile({1, 1}),
                        TypeFilter::GenericSupersingular)
            .empty());
  CHECK_THROWS_AS(enumerate_types(RamificationProfile({25}), TypeFilter::All),
                  std::invalid_argument);
  SUBCASE("all filter has 2^g entries across blocks") {
    RamificationProfile prof({2, 3});
    CHECK(enumerate_types(prof, TypeFilter::All).size() == 32);
  }
}

TEST_CASE("alpha type parsing round trip") {
  RamificationProfile prof({2, 3});
  AlphaType a(prof, {0b01, 0b110});
  CHECK(AlphaType::parse(a.to_string(), prof) == a);
  CHECK(a.to_string() == "10|011");
  CHECK_THROWS_AS(AlphaType::parse("10|01", prof), std::invalid_argument);
}
