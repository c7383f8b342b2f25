#include "hbstrata/counting.hpp"

#include <bit>
#include <stdexcept>

namespace hbstrata {

GenericTypeSummary summarize_generic_types(const RamificationProfile& profile) {
  GenericTypeSummary s;
  s.profile = profile;
  std::vector<std::vector<WeightedMask>> pool;
  for (int f : profile.degrees) pool.push_back(generic_block_masks(f));
  // Walk the cartesian product of the per-block generic masks.
  std::vector<size_t> idx(pool.size(), 0);
  while (true) {
    Integer w = 1;
    bool ss = true;
    for (size_t v = 0; v < pool.size(); ++v) {
      const WeightedMask& wm = pool[v][idx[v]];
      w *= wm.w;
      ss = ss && is_supersingular_mask(wm.mask, profile.degrees[v]);
    }
    if (ss)
      s.n_generic_ss += 1;
    else
      s.sum_w_nonss += w;
    size_t v = pool.size();
    while (true) {
      if (v == 0) return s;
      --v;
      if (++idx[v] < pool[v].size()) break;
      idx[v] = 0;
    }
  }
}

Integer generic_ss_count_closed(const RamificationProfile& profile) {
  if (!profile.all_even()) return 0;
  return ipow(2, static_cast<unsigned>(profile.block_count()));
}

TotalComponents total_components(const GenericTypeSummary& summary,
                                 const Rational& class_factor) {
  if (class_factor <= 0)
    throw std::invalid_argument("class factor must be positive");
  TotalComponents t;
  t.via_type_sum = Rational(summary.sum_w_nonss) +
                   Rational(summary.n_generic_ss) * class_factor;
  Integer n_ss = generic_ss_count_closed(summary.profile);
  t.via_closed_form = Rational(ipow(2, static_cast<unsigned>(summary.profile.genus()))) +
                      Rational(n_ss) * (class_factor - 1);
  return t;
}

TotalComponents total_components(const RamificationProfile& profile,
                                 const Rational& class_factor) {
  return total_components(summarize_generic_types(profile), class_factor);
}

Integer total_components_strict(const RamificationProfile& profile,
                                const Rational& class_factor) {
  TotalComponents t = total_components(profile, class_factor);
  if (t.via_type_sum != t.via_closed_form)
    throw std::logic_error("component-count formulas disagree");
  if (!is_integral(t.via_type_sum))
    throw std::invalid_argument("component count is not an integer: " +
                                t.via_type_sum.str() +
                                " (check the class factor)");
  return to_integer(t.via_type_sum);
}

std::vector<SlopeRow> slope_component_table(const RamificationProfile& profile,
                                            const Rational& class_factor) {
  const std::vector<int>& fs = profile.degrees;
  bool all_even = profile.all_even();
  std::vector<SlopeRow> rows;
  std::vector<int> j(fs.size(), 0);
  while (true) {
    bool is_ss_tuple = all_even;
    for (size_t v = 0; v < fs.size() && is_ss_tuple; ++v)
      is_ss_tuple = (2 * j[v] == fs[v]);
    if (!is_ss_tuple) {
      SlopeRow row;
      Integer count = 1;
      for (size_t v = 0; v < fs.size(); ++v) {
        row.j.emplace_back(j[v]);
        count *= 2 * binomial(fs[v], 2 * j[v]);
      }
      row.count = Rational(count);
      rows.push_back(std::move(row));
    }
    size_t v = fs.size();
    while (true) {
      if (v == 0) goto done;
      --v;
      if (++j[v] <= fs[v] / 2) break;
      j[v] = 0;
    }
  }
done:
  if (all_even) {
    SlopeRow ss;
    for (int f : fs) ss.j.emplace_back(Rational(f, 2));
    ss.count = Rational(generic_ss_count_closed(profile)) * class_factor;
    ss.supersingular = true;
    rows.push_back(std::move(ss));
  }
  return rows;
}

Rational superspecial_point_count(int g, long long p,
                                  const Rational& class_factor) {
  Integer pg = ipow(p, static_cast<unsigned>(g));
  Integer factor = (g % 2) ? Integer(pg - 1) : Integer(pg + 1);
  return class_factor * Rational(factor);
}

Rational ss_stratum_component_count(const AlphaType& a, long long p,
                                    const Rational& class_factor) {
  if (!is_supersingular(a))
    throw std::invalid_argument("ss_stratum_component_count: alpha type is not supersingular");
  Integer c = 1;
  for (size_t v = 0; v < a.bits.size(); ++v) {
    int f = a.profile.degrees[v];
    if (f % 2 == 1) {
      c *= ipow(p, static_cast<unsigned>(f)) - 1;  // P1
    } else if (std::popcount(a.bits[v]) == f) {
      c *= ipow(p, static_cast<unsigned>(f)) + 1;  // P2
    }
    // P3 contributes 1
  }
  return class_factor * Rational(c);
}

Rational stratum_component_count(const AlphaType& a, long long p,
                                 const Rational& class_factor) {
  if (!is_supersingular(a)) return 1;
  return ss_stratum_component_count(a, p, class_factor);
}

Integer mass_factor_c(int e1, int e2, long long p, int f) {
  if (e1 < 0 || e2 < e1 || e2 > 1)
    throw std::invalid_argument("mass_factor_c: need 0 <= e1 <= e2 <= 1");
  if (f % 2 == 1 && e1 + e2 != 1)
    throw std::invalid_argument("mass_factor_c: odd degree forces e1 + e2 = 1");
  if (f % 2 == 1) return ipow(p, static_cast<unsigned>(f)) - 1;
  if (e1 == e2) return 1;
  return ipow(p, static_cast<unsigned>(f)) + 1;
}

CountReport build_count_report(const RamificationProfile& profile,
                               const ClassFactor& H,
                               std::optional<long long> p,
                               std::optional<long long> n) {
  CountReport rep;
  rep.profile = profile;
  rep.p = p;
  rep.n = n;
  rep.class_factor = H;

  TotalComponents t = total_components(profile, H.value);
  if (t.via_type_sum != t.via_closed_form)
    throw std::logic_error("component-count formulas disagree");
  if (!is_integral(t.via_type_sum))
    throw std::invalid_argument("component count is not an integer: " +
                                t.via_type_sum.str() +
                                " (check the class factor)");
  rep.total_components = to_integer(t.via_type_sum);
  rep.formula_variants["generic_type_sum"] = t.via_type_sum;
  rep.formula_variants["closed_form"] = t.via_closed_form;

  rep.slope_table = slope_component_table(profile, H.value);
  Rational slope_sum = 0;
  rep.supersingular_component_count = 0;
  for (const SlopeRow& row : rep.slope_table) {
    slope_sum += row.count;
    if (row.supersingular) rep.supersingular_component_count += row.count;
  }
  if (slope_sum != t.via_type_sum)
    throw std::logic_error("slope table does not sum to the component total");
  rep.formula_variants["slope_table_sum"] = slope_sum;

  if (p && profile.block_count() == 1)
    rep.superspecial_point_count =
        superspecial_point_count(profile.genus(), *p, H.value);
  return rep;
}

}  // namespace hbstrata
