#include "doctest.h"

#include <random>
#include <stdexcept>

#include "hbstrata/dieudonne.hpp"
#include "hbstrata/strata.hpp"

using namespace hbstrata;

TEST_CASE("standard module shape") {
  FiniteField k(3, 2);
  SUBCASE("F kills Y and V kills X when tau is empty") {
    auto mod = standard_module(3, 0, k);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
      Fq c = k.random_element(rng);
      for (int i = 0; i < 3; ++i) {
        CHECK(apply_F(mod, i, Vec2{c, 0}) == Vec2{k.frobenius(c, 1), 0});
        CHECK(apply_F(mod, i, Vec2{0, c}) == Vec2{0, 0});
        CHECK(apply_V(mod, i, Vec2{0, c}) == Vec2{0, k.frobenius(c, -1)});
        CHECK(apply_V(mod, i, Vec2{c, 0}) == Vec2{0, 0});
      }
    }
  }
  SUBCASE("full tau routes X to Y under both maps") {
    auto mod = standard_module(3, 0b111, k);
    CHECK(apply_F(mod, 1, Vec2{1, 0}) == Vec2{0, 1});
    CHECK(apply_F(mod, 1, Vec2{0, 1}) == Vec2{0, 0});
    CHECK(apply_V(mod, 1, Vec2{1, 0}) == Vec2{0, 1});
    CHECK(apply_V(mod, 1, Vec2{0, 1}) == Vec2{0, 0});
  }
}

TEST_CASE("semilinearity of F and V") {
  FiniteField k(5, 2);
  std::mt19937_64 rng(17);
  for (std::uint32_t tau : {0u, 0b01u, 0b11u}) {
    auto mod = standard_module(2, tau, k);
    for (int t = 0; t < 200; ++t) {
      Fq c = k.random_element(rng);
      Vec2 v{k.random_element(rng), k.random_element(rng)};
      Vec2 cv{k.mul(c, v.x), k.mul(c, v.y)};
      for (int i = 0; i < 2; ++i) {
        Vec2 lhs = apply_F(mod, i, cv);
        Vec2 rhs = apply_F(mod, i, v);
        Fq cp = k.frobenius(c, 1);
        CHECK(lhs == Vec2{k.mul(cp, rhs.x), k.mul(cp, rhs.y)});
        Vec2 lhs_v = apply_V(mod, i, cv);
        Vec2 rhs_v = apply_V(mod, i, v);
        Fq cq = k.frobenius(c, -1);
        CHECK(lhs_v == Vec2{k.mul(cq, rhs_v.x), k.mul(cq, rhs_v.y)});
      }
    }
  }
}

TEST_CASE("F and V compose to zero on standard modules") {
  FiniteField k(2, 3);
  std::mt19937_64 rng(23);
  for (int g = 1; g <= 5; ++g) {
    for (std::uint32_t tau = 0; tau < (1u << g); ++tau) {
      auto mod = standard_module(g, tau, k);
      for (int t = 0; t < 20; ++t) {
        Vec2 v{k.random_element(rng), k.random_element(rng)};
        for (int i = 0; i < g; ++i) {
          // F: i -> i+1 then V: i+1 -> i
          CHECK(apply_V(mod, i, apply_F(mod, (i + 1) % g, v)) == Vec2{0, 0});
          // V: i+1 -> i then F: i -> i+1... source degree bookkeeping:
          // feed V's output at degree i into F targeting i+1
          CHECK(apply_F(mod, (i + 1) % g, apply_V(mod, i, v)) == Vec2{0, 0});
        }
      }
    }
  }
}

TEST_CASE("alpha_type_of") {
  FiniteField k(3, 2);
  SUBCASE("standard module gives the tau indicator") {
    for (int g = 1; g <= 6; ++g)
      for (std::uint32_t tau = 0; tau < (1u << g); ++tau) {
        auto got = alpha_type_of(standard_module(g, tau, k));
        for (int i = 0; i < g; ++i)
          CHECK(got[i] == static_cast<int>((tau >> i) & 1u));
      }
  }
  SUBCASE("zero maps leave everything") {
    GradedSemilinearModule mod;
    mod.field = &k;
    mod.g = 4;
    mod.F.resize(4);
    mod.V.resize(4);
    CHECK(alpha_type_of(mod) == std::vector<int>{2, 2, 2, 2});
  }
  SUBCASE("the (F,V)-saturation module alternates 0 and 2") {
    // F into even degrees is (X,Y) -> (-Y, X) after reduction; F into odd
    // degrees vanishes; V is the opposite twist into even degrees only.
    for (int g : {2, 4, 6}) {
      GradedSemilinearModule mod;
      mod.field = &k;
      mod.g = g;
      mod.F.resize(g);
      mod.V.resize(g);
      for (int i = 0; i < g; i += 2) {
        mod.F[i] = Mat2{0, 1, k.neg(1), 0};   // X -> -Y, Y -> X
        mod.V[i] = Mat2{0, k.neg(1), 1, 0};   // X -> Y, Y -> -X
      }
      std::vector<int> want(g, 0);
      for (int i = 1; i < g; i += 2) want[i] = 2;
      CHECK(alpha_type_of(mod) == want);
    }
  }
}

TEST_CASE("projective points") {
  FiniteField k(3, 2);
  CHECK(normalize_point(k, 0, 5) == ProjPoint{0, 1});
  Fq two = k.from_int(2);
  ProjPoint p = normalize_point(k, two, two);
  CHECK(p.s == 1);
  CHECK(p.t == 1);
  CHECK_THROWS_AS(normalize_point(k, 0, 0), std::invalid_argument);
}

TEST_CASE("submodule check against the worked example") {
  FiniteField k(3, 2);
  auto mod = standard_module(2, 0, k);
  SUBCASE("span of the Y_i is stable") {
    ProjectiveTuple P = {{1, 0}, {1, 0}};
    CHECK(submodule_check(mod, P));
    CHECK(equations_check(2, 0, k, P));
  }
  SUBCASE("span of the X_i is stable for empty tau") {
    ProjectiveTuple P = {{0, 1}, {0, 1}};
    CHECK(submodule_check(mod, P));
  }
  SUBCASE("the point ([1:1],[0:1]) violates t0 s1") {
    ProjectiveTuple P = {{1, 1}, {0, 1}};
    CHECK_FALSE(submodule_check(mod, P));
    CHECK_FALSE(equations_check(2, 0, k, P));
  }
}

TEST_CASE("oracle equivalence sample") {
  // the full sweep is acceptance criterion 5; keep a smoke version here
  FiniteField k(2, 2);
  std::mt19937_64 rng(29);
  for (int g = 1; g <= 4; ++g)
    for (std::uint32_t tau = 0; tau < (1u << g); ++tau) {
      auto mod = standard_module(g, tau, k);
      for (int t = 0; t < 100; ++t) {
        ProjectiveTuple P = random_proj_tuple(k, g, rng);
        CHECK(submodule_check(mod, P) == equations_check(g, tau, k, P));
      }
    }
}

TEST_CASE("satisfying points sit inside an enumerated component") {
  FiniteField k(3, 2);
  std::mt19937_64 rng(31);
  for (int g = 2; g <= 5; ++g)
    for (std::uint32_t tau = 0; tau < (1u << g); ++tau) {
      auto comps = enumerate_components(g, tau);
      for (int t = 0; t < 200; ++t) {
        ProjectiveTuple P = random_proj_tuple(k, g, rng);
        if (!equations_check(g, tau, k, P)) continue;
        bool inside = false;
        for (const auto& c : comps) {
          bool in_c = true;
          for (int i = 0; i < g && in_c; ++i) {
            switch (c.cells[i]) {
              case Cell::Pt10: in_c = P[i].t == 0; break;
              case Cell::Pt01: in_c = P[i].s == 0; break;
              case Cell::Line: break;
            }
          }
          if (in_c) inside = true;
        }
        CHECK(inside);
      }
    }
}
