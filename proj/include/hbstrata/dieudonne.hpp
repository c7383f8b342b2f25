// Mod-p Dieudonne calculus on Z/gZ-graded modules, two-dimensional in each
// degree, with a sigma-semilinear F and a sigma^{-1}-semilinear V.
//
// Vectors in degree i are written in the ordered basis (X_i, Y_i) as
// coordinate pairs (x, y).  F[i] maps degree i-1 to i and V[i] maps degree
// i+1 to i; both apply the appropriate Frobenius twist to the coordinates
// before the stored matrix.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hbstrata/gf.hpp"

namespace hbstrata {

// Columns are basis images: (a,c) is the image of X, (b,d) the image of Y.
struct Mat2 {
  Fq a = 0, b = 0, c = 0, d = 0;
};

struct Vec2 {
  Fq x = 0, y = 0;
  bool operator==(const Vec2&) const = default;
};

struct GradedSemilinearModule {
  const FiniteField* field = nullptr;
  int g = 0;
  std::vector<Mat2> F;  // F[i]: degree i-1 -> i
  std::vector<Mat2> V;  // V[i]: degree i+1 -> i
};

// Standard module of the alpha index tau (mask over Z/gZ):
//   F: X_{i-1} -> X_i (i not in tau), X_{i-1} -> Y_i (i in tau), Y -> 0
//   V: Y_{i+1} -> Y_i (i+1 not in tau), X_{i+1} -> Y_i (i+1 in tau), rest -> 0
GradedSemilinearModule standard_module(int g, std::uint32_t tau_mask,
                                       const FiniteField& k);

// Semilinear application of F (source degree i-1) / V (source degree i+1).
Vec2 apply_F(const GradedSemilinearModule& mod, int target_degree, Vec2 v);
Vec2 apply_V(const GradedSemilinearModule& mod, int target_degree, Vec2 v);

// Per degree, 2 minus the rank of the combined F- and V-images landing there.
std::vector<int> alpha_type_of(const GradedSemilinearModule& mod);

// A point of (P^1)^g: pairs [s_i : t_i], never both zero, normalized so the
// leading nonzero coordinate is 1.
struct ProjPoint {
  Fq s = 1, t = 0;
  bool operator==(const ProjPoint&) const = default;
};
using ProjectiveTuple = std::vector<ProjPoint>;

ProjPoint normalize_point(const FiniteField& k, Fq s, Fq t);
ProjPoint random_proj_point(const FiniteField& k, std::mt19937_64& rng);
ProjectiveTuple random_proj_tuple(const FiniteField& k, int g,
                                  std::mt19937_64& rng);

// True iff the span of { s_i Y_i + t_i X_i } is stable under F and V.
bool submodule_check(const GradedSemilinearModule& mod,
                     const ProjectiveTuple& P);

// Direct evaluation of the monomial equations t_{i-1} s_i (i not in tau) and
// t_{i-1} t_i (i in tau) at P.
bool equations_check(int g, std::uint32_t tau_mask, const FiniteField& k,
                     const ProjectiveTuple& P);

}  // namespace hbstrata
