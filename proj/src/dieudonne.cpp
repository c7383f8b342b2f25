#include "hbstrata/dieudonne.hpp"

#include <array>
#include <stdexcept>

namespace hbstrata {

GradedSemilinearModule standard_module(int g, std::uint32_t tau_mask,
                                       const FiniteField& k) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  if (g < 32 && (tau_mask >> g))
    throw std::invalid_argument("standard_module: tau mask wider than g");
  GradedSemilinearModule mod;
  mod.field = &k;
  mod.g = g;
  mod.F.resize(g);
  mod.V.resize(g);
  for (int i = 0; i < g; ++i) {
    bool i_in_tau = (tau_mask >> i) & 1u;
    Mat2 f;  // columns: image of X_{i-1}, image of Y_{i-1}
    if (i_in_tau) {
      f.c = 1;  // X -> Y
    } else {
      f.a = 1;  // X -> X
    }
    mod.F[i] = f;
    int src = (i + 1) % g;
    bool src_in_tau = (tau_mask >> src) & 1u;
    Mat2 v;  // columns: image of X_{i+1}, image of Y_{i+1}
    if (src_in_tau) {
      v.c = 1;  // X -> Y
    } else {
      v.d = 1;  // Y -> Y
    }
    mod.V[i] = v;
  }
  return mod;
}

Vec2 apply_F(const GradedSemilinearModule& mod, int target_degree, Vec2 v) {
  const FiniteField& k = *mod.field;
  Fq sx = k.frobenius(v.x, 1);
  Fq sy = k.frobenius(v.y, 1);
  const Mat2& A = mod.F[target_degree];
  return {k.add(k.mul(A.a, sx), k.mul(A.b, sy)),
          k.add(k.mul(A.c, sx), k.mul(A.d, sy))};
}

Vec2 apply_V(const GradedSemilinearModule& mod, int target_degree, Vec2 v) {
  const FiniteField& k = *mod.field;
  Fq sx = k.frobenius(v.x, -1);
  Fq sy = k.frobenius(v.y, -1);
  const Mat2& A = mod.V[target_degree];
  return {k.add(k.mul(A.a, sx), k.mul(A.b, sy)),
          k.add(k.mul(A.c, sx), k.mul(A.d, sy))};
}

std::vector<int> alpha_type_of(const GradedSemilinearModule& mod) {
  const FiniteField& k = *mod.field;
  std::vector<int> a(mod.g, 0);
  for (int i = 0; i < mod.g; ++i) {
    // Columns of F[i] and V[i] span the image in degree i (the Frobenius
    // twists are bijective, so they do not change the span).
    std::array<Vec2, 4> cols = {
        Vec2{mod.F[i].a, mod.F[i].c}, Vec2{mod.F[i].b, mod.F[i].d},
        Vec2{mod.V[i].a, mod.V[i].c}, Vec2{mod.V[i].b, mod.V[i].d}};
    // Rank of a 2 x 4 matrix by row reduction over k.
    Vec2 pivot1{0, 0};
    bool have1 = false;
    int rank = 0;
    for (const Vec2& w : cols) {
      Vec2 u = w;
      if (have1) {
        // eliminate against pivot1
        Fq factor;
        if (pivot1.x != 0) {
          factor = k.mul(u.x, k.inv(pivot1.x));
        } else {
          factor = k.mul(u.y, k.inv(pivot1.y));
        }
        u.x = k.sub(u.x, k.mul(factor, pivot1.x));
        u.y = k.sub(u.y, k.mul(factor, pivot1.y));
      }
      if (u.x != 0 || u.y != 0) {
        if (!have1) {
          pivot1 = u;
          have1 = true;
          rank = 1;
        } else {
          rank = 2;
          break;
        }
      }
    }
    a[i] = 2 - rank;
  }
  return a;
}

ProjPoint normalize_point(const FiniteField& k, Fq s, Fq t) {
  if (s == 0 && t == 0)
    throw std::invalid_argument("projective point needs a nonzero coordinate");
  if (s != 0) {
    Fq si = k.inv(s);
    return {1, k.mul(t, si)};
  }
  return {0, 1};
}

ProjPoint random_proj_point(const FiniteField& k, std::mt19937_64& rng) {
  // q affine points [1:t] plus [0:1]
  std::uint64_t r = rng() % (k.order() + 1);
  if (r == k.order()) return {0, 1};
  return {1, static_cast<Fq>(r)};
}

ProjectiveTuple random_proj_tuple(const FiniteField& k, int g,
                                  std::mt19937_64& rng) {
  ProjectiveTuple P(g);
  for (int i = 0; i < g; ++i) P[i] = random_proj_point(k, rng);
  return P;
}

bool submodule_check(const GradedSemilinearModule& mod,
                     const ProjectiveTuple& P) {
  if (static_cast<int>(P.size()) != mod.g)
    throw std::invalid_argument("point length does not match module grading");
  const FiniteField& k = *mod.field;
  int g = mod.g;
  for (int i = 0; i < g; ++i) {
    Vec2 u{P[i].t, P[i].s};  // s_i Y_i + t_i X_i
    int prev = (i + g - 1) % g;
    int next = (i + 1) % g;
    Vec2 fw = apply_F(mod, i, Vec2{P[prev].t, P[prev].s});
    // fw colinear with u: cross product vanishes
    if (k.sub(k.mul(fw.x, u.y), k.mul(fw.y, u.x)) != 0) return false;
    Vec2 vw = apply_V(mod, i, Vec2{P[next].t, P[next].s});
    if (k.sub(k.mul(vw.x, u.y), k.mul(vw.y, u.x)) != 0) return false;
  }
  return true;
}

bool equations_check(int g, std::uint32_t tau_mask, const FiniteField& k,
                     const ProjectiveTuple& P) {
  if (static_cast<int>(P.size()) != g)
    throw std::invalid_argument("point length does not match g");
  for (int i = 0; i < g; ++i) {
    int prev = (i + g - 1) % g;
    Fq other = ((tau_mask >> i) & 1u) ? P[i].t : P[i].s;
    if (k.mul(P[prev].t, other) != 0) return false;
  }
  return true;
}

}  // namespace hbstrata
