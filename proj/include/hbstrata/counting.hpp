// Global irreducible-component counts: the type-sum and closed-form totals
// (computed independently and cross-checked), the per-slope component table,
// supersingular stratum counts, superspecial point counts, and the
// superspecial mass factors.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbstrata/alpha.hpp"
#include "hbstrata/quad.hpp"
#include "hbstrata/rational.hpp"

namespace hbstrata {

// Enumeration-backed data for one profile: the sum of the block-weight
// products over non-supersingular generic types, and the number of generic
// supersingular types.
struct GenericTypeSummary {
  RamificationProfile profile;
  Integer sum_w_nonss = 0;
  Integer n_generic_ss = 0;
};

GenericTypeSummary summarize_generic_types(const RamificationProfile& profile);

// 2^{#blocks} when every f_v is even, else 0 (no enumeration involved).
Integer generic_ss_count_closed(const RamificationProfile& profile);

struct TotalComponents {
  Rational via_type_sum;     // sum over generic types of w'
  Rational via_closed_form;  // 2^g + (number of generic ss types) * (H - 1)
};

TotalComponents total_components(const RamificationProfile& profile,
                                 const Rational& class_factor);
TotalComponents total_components(const GenericTypeSummary& summary,
                                 const Rational& class_factor);

// Both routes, asserted equal and integral.
Integer total_components_strict(const RamificationProfile& profile,
                                const Rational& class_factor);

// One row per slope tuple (j_v): integer tuples with some j_v < f_v/2 carry
// the count prod_v 2 C(f_v, 2 j_v); when every f_v is even the supersingular
// tuple (f_v/2)_v is reported as a single aggregate row of count
// 2^{#blocks} * H.
struct SlopeRow {
  std::vector<Rational> j;  // slope parameter per block
  Rational count;
  bool supersingular = false;

  bool operator==(const SlopeRow&) const = default;
};

std::vector<SlopeRow> slope_component_table(const RamificationProfile& profile,
                                            const Rational& class_factor);

// Superspecial point counts in the inert case: H (p^g - 1) for odd g,
// H (p^g + 1) for even g.
Rational superspecial_point_count(int g, long long p, const Rational& class_factor);

// H * prod_v c_v with c_v = p^{f_v} - 1 (f_v odd), p^{f_v} + 1 (f_v even and
// the block is all ones), 1 (f_v even otherwise); rejects non-supersingular a.
Rational ss_stratum_component_count(const AlphaType& a, long long p,
                                    const Rational& class_factor);

// Non-supersingular strata are irreducible.  Supersingular strata have
// H * prod c_v components (see ss_stratum_component_count).
inline bool stratum_is_irreducible(const AlphaType& a) {
  return !is_supersingular(a);
}
Rational stratum_component_count(const AlphaType& a, long long p,
                                 const Rational& class_factor);

// Superspecial mass factor: 1 if f even and e1 = e2; p^f + 1 if f even and
// e1 < e2; p^f - 1 if f odd.  Requires 0 <= e1 <= e2 <= 1, and e1 + e2 = 1
// when f is odd.
Integer mass_factor_c(int e1, int e2, long long p, int f);

struct CountReport {
  RamificationProfile profile;
  std::optional<long long> p;
  std::optional<long long> n;
  ClassFactor class_factor;
  Integer total_components;
  std::vector<SlopeRow> slope_table;
  Rational supersingular_component_count;
  std::optional<Rational> superspecial_point_count;  // inert profiles with p
  std::map<std::string, Rational> formula_variants;

  bool operator==(const CountReport&) const = default;
};

// Assembles and cross-checks a full report; throws on non-integral totals or
// any disagreement between formula variants.
CountReport build_count_report(const RamificationProfile& profile,
                               const ClassFactor& H,
                               std::optional<long long> p = std::nullopt,
                               std::optional<long long> n = std::nullopt);

}  // namespace hbstrata
