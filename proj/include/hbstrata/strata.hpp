// The fiber variety X_tau inside (P^1)^g cut out by the cyclic monomial
// equations t_{i-1} s_i = 0 (i not in tau) and t_{i-1} t_i = 0 (i in tau),
// its irreducible components as products of {[1:0], [0:1], P^1}, and the
// Frobenius-twist locus x_{j-1}^{p^2} = x_{j+1} inside the supersingular
// strata.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hbstrata/alpha.hpp"
#include "hbstrata/gf.hpp"

namespace hbstrata {

enum class Cell : std::uint8_t {
  Pt10 = 0,  // the point [1:0], where t = 0
  Pt01 = 1,  // the point [0:1], where s = 0
  Line = 2,  // all of P^1
};

std::string cell_name(Cell c);  // "[1:0]", "[0:1]", "P^1"

struct CellProduct {
  std::vector<Cell> cells;

  int dimension() const;
  // componentwise containment; points are incomparable, Pt ⊂ Line
  bool contained_in(const CellProduct& other) const;
  bool operator==(const CellProduct&) const = default;
  std::string to_string() const;  // "[1:0] x P^1 x ..."
};

enum class EqTag : std::uint8_t {
  TS,  // t_{i-1} s_i = 0
  TT,  // t_{i-1} t_i = 0
};

// One equation per index i in Z/gZ; entry i involves coordinates i-1 and i.
using MonomialEquationSet = std::vector<EqTag>;

MonomialEquationSet equations_for(int g, std::uint32_t tau_mask);

// The monomial of every equation vanishes on all of x.
bool satisfies_identically(const CellProduct& x, const MonomialEquationSet& eqs);

inline constexpr int kDefaultComponentBound = 12;

// All maximal satisfying cell products, in lexicographic cell-code order.
// This is exactly the set of irreducible components of X_tau.
std::vector<CellProduct> enumerate_components(int g, std::uint32_t tau_mask,
                                              int max_g = kDefaultComponentBound);

int max_dimension(int g, std::uint32_t tau_mask,
                  int max_g = kDefaultComponentBound);

// Number of components of dimension exactly |a|; rejects non-generic tau.
long long top_dim_count(int g, std::uint32_t tau_mask,
                        int max_g = kDefaultComponentBound);

// The supersingular-locus equations for an alpha type containing an
// alternating pattern (g even).  Coordinates are the d = g/2 points of
// (P^1)^d sitting at the even grading positions after normalization;
// equation (src, dst) reads x_{2 src}^{p^2} = x_{2 dst}.
struct FrobeniusSystem {
  int g = 0;
  int d = 0;
  int rotation = 0;  // cyclic shift applied so the even pattern is contained
  std::vector<std::pair<int, int>> equations;
};

FrobeniusSystem ss_frobenius_equations(int g, const AlphaType& a);

// F_q-points of the Frobenius-equation locus, counted by enumerating all of
// (P^1(F_q))^d.  q = p^m; m must be a positive even integer.
unsigned long long count_points_ss_locus(int g, const AlphaType& a, int p,
                                         int m);

}  // namespace hbstrata
