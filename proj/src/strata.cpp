#include "hbstrata/strata.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hbstrata {

std::string cell_name(Cell c) {
  switch (c) {
    case Cell::Pt10: return "[1:0]";
    case Cell::Pt01: return "[0:1]";
    case Cell::Line: return "P^1";
  }
  return "?";
}

int CellProduct::dimension() const {
  int d = 0;
  for (Cell c : cells)
    if (c == Cell::Line) ++d;
  return d;
}

bool CellProduct::contained_in(const CellProduct& other) const {
  if (cells.size() != other.cells.size()) return false;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] == other.cells[i]) continue;
    if (other.cells[i] != Cell::Line) return false;
  }
  return true;
}

std::string CellProduct::to_string() const {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += " x ";
    out += cell_name(cells[i]);
  }
  return out;
}

MonomialEquationSet equations_for(int g, std::uint32_t tau_mask) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  if (g < 32 && (tau_mask >> g))
    throw std::invalid_argument("equations_for: tau mask wider than g");
  MonomialEquationSet eqs(g);
  for (int i = 0; i < g; ++i)
    eqs[i] = ((tau_mask >> i) & 1u) ? EqTag::TT : EqTag::TS;
  return eqs;
}

bool satisfies_identically(const CellProduct& x, const MonomialEquationSet& eqs) {
  int g = static_cast<int>(eqs.size());
  if (static_cast<int>(x.cells.size()) != g)
    throw std::invalid_argument("cell product length does not match equations");
  for (int i = 0; i < g; ++i) {
    Cell prev = x.cells[(i + g - 1) % g];
    Cell here = x.cells[i];
    bool ok = (prev == Cell::Pt10) ||
              (here == (eqs[i] == EqTag::TS ? Cell::Pt01 : Cell::Pt10));
    if (!ok) return false;
  }
  return true;
}

std::vector<CellProduct> enumerate_components(int g, std::uint32_t tau_mask,
                                              int max_g) {
  if (g > max_g)
    throw std::invalid_argument("component bound exceeded: g = " +
                                std::to_string(g) + " > " + std::to_string(max_g));
  MonomialEquationSet eqs = equations_for(g, tau_mask);
  std::vector<CellProduct> satisfying;
  CellProduct x;
  x.cells.assign(g, Cell::Pt10);
  long long total = 1;
  for (int i = 0; i < g; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long t = code;
    for (int i = 0; i < g; ++i) {
      x.cells[i] = static_cast<Cell>(t % 3);
      t /= 3;
    }
    if (satisfies_identically(x, eqs)) satisfying.push_back(x);
  }
  // Maximality: satisfaction is downward closed under containment, so it is
  // enough to check that no single point cell can be raised to a line.
  std::vector<CellProduct> components;
  for (const CellProduct& c : satisfying) {
    bool maximal = true;
    CellProduct probe = c;
    for (int i = 0; i < g && maximal; ++i) {
      if (c.cells[i] == Cell::Line) continue;
      probe.cells[i] = Cell::Line;
      if (satisfies_identically(probe, eqs)) maximal = false;
      probe.cells[i] = c.cells[i];
    }
    if (maximal) components.push_back(c);
  }
  std::sort(components.begin(), components.end(),
            [](const CellProduct& a, const CellProduct& b) {
              return a.cells < b.cells;
            });
  return components;
}

int max_dimension(int g, std::uint32_t tau_mask, int max_g) {
  int best = 0;
  for (const CellProduct& c : enumerate_components(g, tau_mask, max_g))
    best = std::max(best, c.dimension());
  return best;
}

long long top_dim_count(int g, std::uint32_t tau_mask, int max_g) {
  if (!is_generic_mask(tau_mask, g))
    throw std::invalid_argument("top_dim_count: alpha type must be generic");
  int size = std::popcount(tau_mask);
  long long n = 0;
  for (const CellProduct& c : enumerate_components(g, tau_mask, max_g))
    if (c.dimension() == size) ++n;
  return n;
}

FrobeniusSystem ss_frobenius_equations(int g, const AlphaType& a) {
  if (!a.single_block() || a.profile.degrees[0] != g)
    throw std::invalid_argument("ss_frobenius_equations: single block of length g required");
  if (g % 2 != 0) throw std::invalid_argument("ss_frobenius_equations: g must be even");
  std::uint32_t full = (1u << g) - 1;
  std::uint32_t even_pat = 0x55555555u & full;
  std::uint32_t odd_pat = 0xAAAAAAAAu & full;
  std::uint32_t mask = a.bits[0];
  FrobeniusSystem sys;
  sys.g = g;
  sys.d = g / 2;
  if ((mask & even_pat) == even_pat) {
    sys.rotation = 0;
  } else if ((mask & odd_pat) == odd_pat) {
    // shift so ones land on the even positions: b_i = a_{i+1}
    sys.rotation = 1;
    mask = ((mask >> 1) | (mask << (g - 1))) & full;
  } else {
    throw std::invalid_argument(
        "ss_frobenius_equations: alpha type must contain an alternating pattern");
  }
  for (int j = 1; j < g; j += 2) {
    if ((mask >> j) & 1u)
      sys.equations.emplace_back((j - 1) / 2, ((j + 1) % g) / 2);
  }
  return sys;
}

unsigned long long count_points_ss_locus(int g, const AlphaType& a, int p,
                                         int m) {
  if (m < 1 || m % 2 != 0)
    throw std::invalid_argument("count_points_ss_locus: m must be a positive even integer");
  FrobeniusSystem sys = ss_frobenius_equations(g, a);
  FiniteField k(p, m);
  std::uint32_t q = k.order();
  // P^1(F_q) coded as 0..q-1 for affine [1:x] and q for [0:1]; the squared
  // Frobenius fixes the point at infinity.
  std::vector<std::uint32_t> frob2(q + 1);
  for (std::uint32_t x = 0; x < q; ++x)
    frob2[x] = k.frobenius(static_cast<Fq>(x), 2);
  frob2[q] = q;

  double size_estimate = 1;
  for (int i = 0; i < sys.d; ++i) size_estimate *= q + 1;
  if (size_estimate > 5e8)
    throw std::invalid_argument("count_points_ss_locus: field too large for enumeration");

  std::vector<std::uint32_t> coord(sys.d, 0);
  unsigned long long count = 0;
  while (true) {
    bool ok = true;
    for (const auto& [src, dst] : sys.equations) {
      if (frob2[coord[src]] != coord[dst]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int i = sys.d - 1;
    while (i >= 0 && coord[i] == q) coord[i--] = 0;
    if (i < 0) break;
    ++coord[i];
  }
  return count;
}

}  // namespace hbstrata
