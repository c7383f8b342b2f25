#include "hbstrata/verify.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "hbstrata/alpha.hpp"
#include "hbstrata/counting.hpp"
#include "hbstrata/dieudonne.hpp"
#include "hbstrata/gf.hpp"
#include "hbstrata/quad.hpp"
#include "hbstrata/rational.hpp"
#include "hbstrata/strata.hpp"

namespace hbstrata {

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    if (notes.size() < 8) notes.push_back(what);
  }
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c, std::uint64_t d) {
  std::uint64_t h = seed;
  for (std::uint64_t v : {a, b, c, d}) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// All ordered compositions of g (profiles of genus g).
std::vector<RamificationProfile> compositions(int g) {
  std::vector<RamificationProfile> out;
  for (std::uint32_t cuts = 0; cuts < (1u << (g - 1)); ++cuts) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < g - 1; ++i) {
      if ((cuts >> i) & 1u) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  return out;
}

Rational random_class_factor(std::mt19937_64& rng) {
  long long num = static_cast<long long>(rng() % 1000000) + 1;
  long long den = static_cast<long long>(rng() % 1000) + 1;
  return Rational(num, den);
}

CellProduct cells_of(std::initializer_list<Cell> cs) {
  CellProduct x;
  x.cells = cs;
  return x;
}

}  // namespace

SuiteResult check_weight_sum_identity(int max_g) {
  SuiteResult r;
  r.name = "alpha.weight_sum";
  for (int g = 1; g <= max_g; ++g) {
    unsigned long long sum = 0;
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask)
      sum += static_cast<unsigned long long>(weight_w_mask(mask, g));
    r.expect(sum == (1ull << g),
             "sum of w over subsets of Z/" + std::to_string(g) + "Z is " +
                 std::to_string(sum) + ", want 2^g");
  }
  return r;
}

SuiteResult check_weight_refinement(int max_g) {
  SuiteResult r;
  r.name = "alpha.weight_refinement";
  for (int g = 1; g <= max_g; ++g) {
    std::vector<unsigned long long> by_size(g + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask)
      by_size[std::popcount(mask)] +=
          static_cast<unsigned long long>(weight_w_mask(mask, g));
    for (int j = 1; 2 * j <= g; ++j) {
      Integer want = 2 * binomial(g, 2 * j);
      r.expect(Integer(by_size[j]) == want,
               "g=" + std::to_string(g) + " size-" + std::to_string(j) +
                   " weight sum is " + std::to_string(by_size[j]) + ", want 2*C(g,2j)");
    }
  }
  return r;
}

SuiteResult check_component_fixtures() {
  SuiteResult r;
  r.name = "strata.fixtures";
  const Cell L = Cell::Line, A = Cell::Pt10, B = Cell::Pt01;

  for (int g : {2, 5}) {
    auto comps = enumerate_components(g, 0);
    std::vector<CellProduct> want = {
        CellProduct{std::vector<Cell>(g, A)},
        CellProduct{std::vector<Cell>(g, B)},
    };
    std::sort(want.begin(), want.end(),
              [](const CellProduct& x, const CellProduct& y) { return x.cells < y.cells; });
    r.expect(comps == want, "empty tau, g=" + std::to_string(g) +
                                ": expected the two point components");
  }

  {
    auto comps = enumerate_components(5, mask_of_tau({0, 2}, 5));
    std::vector<CellProduct> want = {
        cells_of({L, B, A, A, A}),
        cells_of({A, A, L, B, B}),
        cells_of({A, L, A, L, B}),
        cells_of({A, L, A, A, L}),
    };
    std::sort(want.begin(), want.end(),
              [](const CellProduct& x, const CellProduct& y) { return x.cells < y.cells; });
    r.expect(comps == want, "g=5 tau={0,2}: component list mismatch");
    int dims[3] = {0, 0, 0};
    for (const auto& c : comps) ++dims[c.dimension()];
    r.expect(dims[1] == 2 && dims[2] == 2,
             "g=5 tau={0,2}: expected two 1-dim and two 2-dim components");
  }

  {
    auto comps = enumerate_components(6, mask_of_tau({0, 2, 3, 4}, 6));
    // The 3-dimensional component is [1:0] x P^1 x [1:0] x P^1 x [1:0] x P^1:
    // a [0:1] at position 2 or 4 would put t_2 = 1 resp. t_4 = 1 next to a
    // free coordinate and violate t_1 t_2 = 0 resp. t_3 t_4 = 0.
    std::vector<CellProduct> want = {
        cells_of({A, L, A, L, A, L}),
        cells_of({L, B, A, L, A, A}),
        cells_of({A, L, A, A, L, B}),
        cells_of({A, A, L, A, L, B}),
        cells_of({A, A, L, A, A, L}),
    };
    std::sort(want.begin(), want.end(),
              [](const CellProduct& x, const CellProduct& y) { return x.cells < y.cells; });
    r.expect(comps == want, "g=6 tau={0,2,3,4}: component list mismatch");
    int three = 0, two = 0;
    for (const auto& c : comps) {
      if (c.dimension() == 3) ++three;
      if (c.dimension() == 2) ++two;
    }
    r.expect(three == 1 && two == 4,
             "g=6 tau={0,2,3,4}: expected one 3-dim and four 2-dim components");
  }
  return r;
}

SuiteResult check_dimension_counts(int max_g) {
  SuiteResult r;
  r.name = "strata.dimensions";
  for (int g = 1; g <= max_g; ++g) {
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
      auto comps = enumerate_components(g, mask, max_g);
      int size = std::popcount(mask);
      int maxdim = 0;
      for (const auto& c : comps) maxdim = std::max(maxdim, c.dimension());
      bool generic = is_generic_mask(mask, g);
      r.expect(maxdim <= size, "g=" + std::to_string(g) + " tau mask " +
                                   std::to_string(mask) + ": dim exceeds |a|");
      r.expect((maxdim == size) == generic,
               "g=" + std::to_string(g) + " tau mask " + std::to_string(mask) +
                   ": dim = |a| iff generic violated");
      if (generic) {
        long long top = 0;
        for (const auto& c : comps)
          if (c.dimension() == size) ++top;
        r.expect(top == weight_w_mask(mask, g),
                 "g=" + std::to_string(g) + " tau mask " + std::to_string(mask) +
                     ": top-dimensional count " + std::to_string(top) +
                     " differs from w");
      }
    }
  }
  return r;
}

SuiteResult check_dieudonne_equivalence(int max_g,
                                        const std::vector<std::pair<int, int>>& fields,
                                        int samples, std::uint64_t seed) {
  SuiteResult r;
  r.name = "dieudonne.oracle_equivalence";
  for (const auto& [p, m] : fields) {
    FiniteField k(p, m);
    for (int g = 1; g <= max_g; ++g) {
      for (std::uint32_t tau = 0; tau < (1u << g); ++tau) {
        GradedSemilinearModule mod = standard_module(g, tau, k);
        auto comps = enumerate_components(g, tau);
        std::mt19937_64 rng(mix_seed(seed, g, tau, p, m));
        long long mismatches = 0;
        for (int s = 0; s < samples; ++s) {
          ProjectiveTuple P;
          if (s % 2 == 0 || comps.empty()) {
            P = random_proj_tuple(k, g, rng);
          } else {
            // a point on a random component, occasionally perturbed
            const CellProduct& c = comps[rng() % comps.size()];
            P.resize(g);
            for (int i = 0; i < g; ++i) {
              switch (c.cells[i]) {
                case Cell::Pt10: P[i] = {1, 0}; break;
                case Cell::Pt01: P[i] = {0, 1}; break;
                case Cell::Line: P[i] = random_proj_point(k, rng); break;
              }
            }
            if (rng() % 4 == 0) P[rng() % g] = random_proj_point(k, rng);
          }
          if (submodule_check(mod, P) != equations_check(g, tau, k, P))
            ++mismatches;
        }
        r.expect(mismatches == 0,
                 "g=" + std::to_string(g) + " tau=" + std::to_string(tau) +
                     " F_" + std::to_string(p) + "^" + std::to_string(m) + ": " +
                     std::to_string(mismatches) + " oracle mismatches");
      }
    }
  }
  return r;
}

SuiteResult check_alpha_type_oracle(int max_g, const std::vector<int>& primes) {
  SuiteResult r;
  r.name = "dieudonne.alpha_type";
  for (int p : primes) {
    FiniteField k(p, 2);
    for (int g = 1; g <= max_g; ++g) {
      for (std::uint32_t tau = 0; tau < (1u << g); ++tau) {
        std::vector<int> got = alpha_type_of(standard_module(g, tau, k));
        bool ok = true;
        for (int i = 0; i < g; ++i)
          ok = ok && got[i] == static_cast<int>((tau >> i) & 1u);
        r.expect(ok, "alpha type of standard module differs from tau indicator: g=" +
                         std::to_string(g) + " tau=" + std::to_string(tau) +
                         " p=" + std::to_string(p));
      }
    }
  }
  return r;
}

SuiteResult check_frobenius_locus(const std::vector<int>& genera,
                                  const std::vector<long long>& primes, int m) {
  SuiteResult r;
  r.name = "strata.frobenius_locus";
  for (int g : genera) {
    std::uint32_t full = (1u << g) - 1;
    std::uint32_t even_pat = 0x55555555u & full;
    for (long long p : primes) {
      FiniteField k(static_cast<int>(p), m);
      std::uint32_t q = k.order();
      // all masks containing the even alternating pattern
      for (std::uint32_t extra = 0; extra < (1u << (g / 2)); ++extra) {
        std::uint32_t odd_bits = 0;
        for (int pos = 1, bit = 0; pos < g; pos += 2, ++bit)
          if ((extra >> bit) & 1u) odd_bits |= 1u << pos;
        std::uint32_t mask = even_pat | odd_bits;
        AlphaType a = AlphaType::inert(g, mask);
        unsigned long long got =
            count_points_ss_locus(g, a, static_cast<int>(p), m);
        int size = std::popcount(mask);
        unsigned long long want;
        if (size < g) {
          want = 1;
          for (int i = 0; i < g - size; ++i) want *= q + 1;
        } else {
          // full alternating cycle: the locus is the (p^2)^d-Frobenius-fixed
          // part of the diagonal; count it directly in F_q
          want = 1;  // the point at infinity
          for (std::uint32_t x = 0; x < q; ++x)
            if (k.frobenius(static_cast<Fq>(x), g) == x) ++want;
        }
        r.expect(got == want, "g=" + std::to_string(g) + " mask=" +
                                  std::to_string(mask) + " q=" + std::to_string(q) +
                                  ": locus has " + std::to_string(got) +
                                  " points, want " + std::to_string(want));
      }
    }
  }
  return r;
}

SuiteResult check_zeta_values() {
  SuiteResult r;
  r.name = "quad.zeta_values";
  struct Pin {
    long long d;
    Rational want;
  } pins[] = {{5, Rational(1, 30)}, {8, Rational(1, 12)}, {12, Rational(1, 6)}};
  for (const Pin& pin : pins) {
    Rational got = zeta_minus_one(Discriminant(pin.d));
    r.expect(got == pin.want, "zeta_F(-1) for D=" + std::to_string(pin.d) +
                                  " is " + got.str() + ", want " + pin.want.str());
  }
  return r;
}

SuiteResult check_class_factor_pipeline() {
  SuiteResult r;
  r.name = "counting.class_factor_pipeline";
  Discriminant d5(5);
  r.expect(split_type(d5, 3) == SplitType::Inert, "3 should be inert in Q(sqrt 5)");
  RamificationProfile prof = profile_of(d5, 3);
  r.expect(prof == RamificationProfile({2}), "profile of inert prime should be [2]");
  ClassFactor h = class_factor(d5, 3);
  r.expect(h.value == 6, "class factor for D=5, n=3 is " + h.value.str() + ", want 6");
  Integer total = total_components_strict(prof, h.value);
  r.expect(total == 14, "total component count is " + total.str() + ", want 14");
  r.expect(Integer(4 + 2 * (6 - 1)) == total, "closed form 2^g + 2(H-1) mismatch");
  return r;
}

SuiteResult check_formula_equivalence(int max_g, int h_samples,
                                      std::uint64_t seed) {
  SuiteResult r;
  r.name = "counting.formula_equivalence";
  for (int g = 1; g <= max_g; ++g) {
    for (const RamificationProfile& prof : compositions(g)) {
      GenericTypeSummary summary = summarize_generic_types(prof);
      std::mt19937_64 rng(mix_seed(seed, g, summary.profile.block_count(),
                                   static_cast<std::uint64_t>(summary.profile.degrees[0]),
                                   0x5eed));
      long long bad = 0;
      for (int s = 0; s < h_samples; ++s) {
        Rational h = random_class_factor(rng);
        TotalComponents t = total_components(summary, h);
        if (t.via_type_sum != t.via_closed_form) ++bad;
      }
      r.expect(bad == 0, "profile " + prof.to_string() + ": " +
                             std::to_string(bad) + " of " +
                             std::to_string(h_samples) + " class factors disagree");
    }
  }
  return r;
}

SuiteResult check_slope_decomposition(int max_g) {
  SuiteResult r;
  r.name = "counting.slope_decomposition";
  const Rational hs[] = {Rational(6), Rational(7, 2)};
  for (int g = 1; g <= max_g; ++g) {
    for (const RamificationProfile& prof : compositions(g)) {
      for (const Rational& h : hs) {
        auto rows = slope_component_table(prof, h);
        Rational sum = 0;
        for (const SlopeRow& row : rows) sum += row.count;
        TotalComponents t = total_components(prof, h);
        r.expect(sum == t.via_type_sum && sum == t.via_closed_form,
                 "profile " + prof.to_string() + ", H=" + h.str() +
                     ": slope table sums to " + sum.str() + ", total is " +
                     t.via_type_sum.str());
      }
    }
  }
  {
    auto rows = slope_component_table(RamificationProfile({3}), Rational(1));
    bool ok = rows.size() == 2 && rows[0].count == 2 && rows[1].count == 6 &&
              rows[0].j[0] == 0 && rows[1].j[0] == 1;
    r.expect(ok, "profile [3] slope counts should be (j=0: 2, j=1: 6)");
  }
  return r;
}

SuiteResult check_p_independence(const std::vector<long long>& primes) {
  SuiteResult r;
  r.name = "counting.p_independence";
  // total_components and slope_component_table take no p argument at all;
  // the p-dependent entry points only enter the total through P3-only
  // types, whose counts must agree across primes.
  std::vector<RamificationProfile> profiles = {
      RamificationProfile({2}), RamificationProfile({4}),
      RamificationProfile({2, 2}), RamificationProfile({2, 4})};
  const Rational h(6);
  for (const RamificationProfile& prof : profiles) {
    for (const AlphaType& a :
         enumerate_types(prof, TypeFilter::GenericSupersingular)) {
      Rational first = ss_stratum_component_count(a, primes.front(), h);
      bool same = true;
      for (long long p : primes)
        same = same && ss_stratum_component_count(a, p, h) == first;
      r.expect(same, "profile " + prof.to_string() + " type " + a.to_string() +
                         ": supersingular component count depends on p");
    }
    TotalComponents t = total_components(prof, h);
    r.expect(t.via_type_sum == t.via_closed_form,
             "profile " + prof.to_string() + ": totals disagree");
  }
  return r;
}

SuiteResult check_partial_order(int max_g) {
  SuiteResult r;
  r.name = "alpha.partial_order";
  for (int g = 1; g <= max_g; ++g) {
    std::vector<AlphaType> all;
    for (std::uint32_t m = 0; m < (1u << g); ++m)
      all.push_back(AlphaType::inert(g, m));
    long long bad_refl = 0, bad_antisym = 0, bad_trans = 0;
    for (const auto& a : all) {
      if (!preceq(a, a)) ++bad_refl;
      for (const auto& b : all) {
        bool ab = preceq(a, b), ba = preceq(b, a);
        if (ab && ba && !(a == b)) ++bad_antisym;
        if (!ab) continue;
        for (const auto& c : all)
          if (preceq(b, c) && !preceq(a, c)) ++bad_trans;
      }
    }
    r.expect(bad_refl == 0, "preceq not reflexive at g=" + std::to_string(g));
    r.expect(bad_antisym == 0, "preceq not antisymmetric at g=" + std::to_string(g));
    r.expect(bad_trans == 0, "preceq not transitive at g=" + std::to_string(g));
  }
  return r;
}

SuiteResult check_lambda_properties(int max_g) {
  SuiteResult r;
  r.name = "alpha.lambda";
  for (int g = 1; g <= max_g; ++g) {
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
      // brute force: generic subsets of the support
      int best = 0;
      std::uint32_t sub = mask;
      while (true) {
        if (is_generic_mask(sub, g)) best = std::max(best, std::popcount(sub));
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
      LambdaResult lr = lambda_max_mask(mask, g);
      r.expect(lr.lambda == best, "lambda mismatch at g=" + std::to_string(g) +
                                      " mask=" + std::to_string(mask));
      if (is_generic_mask(mask, g))
        r.expect(lr.lambda == std::popcount(mask),
                 "generic type should realize its own size as lambda");
      r.expect(lr.superspecial_exception ==
                   (g % 2 == 1 && std::popcount(mask) == g),
               "superspecial exception flag wrong at g=" + std::to_string(g));
    }
  }
  return r;
}

SuiteResult check_ss_classifier(int max_g) {
  SuiteResult r;
  r.name = "alpha.supersingular_classifier";
  for (int g = 1; g <= max_g; ++g) {
    std::uint32_t full = (1u << g) - 1;
    std::uint32_t even_pat = 0x55555555u & full;
    std::uint32_t odd_pat = 0xAAAAAAAAu & full;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      bool want = (g % 2 == 1) ? mask == full
                               : ((mask & even_pat) == even_pat ||
                                  (mask & odd_pat) == odd_pat);
      r.expect(is_supersingular_mask(mask, g) == want,
               "supersingular classifier wrong at g=" + std::to_string(g) +
                   " mask=" + std::to_string(mask));
      bool gen_ss = is_generic_mask(mask, g) && is_supersingular_mask(mask, g);
      bool alternating = g % 2 == 0 && (mask == even_pat || mask == odd_pat);
      r.expect(gen_ss == alternating,
               "generic-supersingular should be exactly the alternating patterns");
    }
    // enumeration count agrees with the closed form
    RamificationProfile prof({g});
    auto ss = enumerate_types(prof, TypeFilter::GenericSupersingular);
    r.expect(Integer(ss.size()) == generic_ss_count_closed(prof),
             "generic-supersingular count mismatch at g=" + std::to_string(g));
  }
  for (const RamificationProfile& prof :
       {RamificationProfile({2, 2}), RamificationProfile({2, 3}),
        RamificationProfile({4, 2}), RamificationProfile({1, 2})}) {
    auto ss = enumerate_types(prof, TypeFilter::GenericSupersingular);
    r.expect(Integer(ss.size()) == generic_ss_count_closed(prof),
             "generic-supersingular count mismatch for profile " + prof.to_string());
  }
  return r;
}

SuiteResult check_strata_maximality(int max_g) {
  SuiteResult r;
  r.name = "strata.maximality";
  for (int g = 1; g <= max_g; ++g) {
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
      auto comps = enumerate_components(g, mask, max_g);
      MonomialEquationSet eqs = equations_for(g, mask);
      bool antichain = true;
      for (size_t i = 0; i < comps.size() && antichain; ++i)
        for (size_t j = 0; j < comps.size() && antichain; ++j)
          if (i != j && comps[i].contained_in(comps[j])) antichain = false;
      r.expect(antichain, "component list is not an antichain: g=" +
                              std::to_string(g) + " tau=" + std::to_string(mask));
      // every satisfying product is covered
      long long total = 1;
      for (int i = 0; i < g; ++i) total *= 3;
      bool covered = true;
      CellProduct x;
      x.cells.assign(g, Cell::Pt10);
      for (long long code = 0; code < total && covered; ++code) {
        long long t = code;
        for (int i = 0; i < g; ++i) {
          x.cells[i] = static_cast<Cell>(t % 3);
          t /= 3;
        }
        if (!satisfies_identically(x, eqs)) continue;
        bool in_some = false;
        for (const auto& c : comps)
          if (x.contained_in(c)) {
            in_some = true;
            break;
          }
        covered = in_some;
      }
      r.expect(covered, "a satisfying product escapes all components: g=" +
                            std::to_string(g) + " tau=" + std::to_string(mask));
    }
  }
  return r;
}

SuiteResult check_line_placement(int max_g) {
  SuiteResult r;
  r.name = "strata.line_placement";
  for (int g = 1; g <= max_g; ++g) {
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
      if (!is_generic_mask(mask, g) || mask == 0) continue;
      std::vector<int> tau = tau_of_mask(mask, g);
      int size = std::popcount(mask);
      for (const CellProduct& c : enumerate_components(g, mask, max_g)) {
        if (c.dimension() != size) continue;
        bool lines_off_support = true;
        for (int i = 0; i < g; ++i)
          if (c.cells[i] == Cell::Line && ((mask >> i) & 1u))
            lines_off_support = false;
        r.expect(lines_off_support,
                 "a top-dimensional line sits on the support: g=" +
                     std::to_string(g) + " tau=" + std::to_string(mask));
        // exactly one line strictly inside each cyclic support interval
        bool one_per_gap = true;
        for (size_t idx = 0; idx < tau.size(); ++idx) {
          int lo = tau[idx];
          int hi = (idx + 1 < tau.size()) ? tau[idx + 1] : tau[0] + g;
          int lines = 0;
          for (int pos = lo + 1; pos < hi; ++pos)
            if (c.cells[pos % g] == Cell::Line) ++lines;
          if (lines != 1) one_per_gap = false;
        }
        r.expect(one_per_gap, "gap without exactly one line: g=" +
                                  std::to_string(g) + " tau=" + std::to_string(mask));
      }
    }
  }
  return r;
}

SuiteResult check_field_automorphisms(const std::vector<std::pair<int, int>>& fields,
                                      int samples, std::uint64_t seed) {
  SuiteResult r;
  r.name = "gf.frobenius";
  for (const auto& [p, m] : fields) {
    FiniteField k(p, m);
    std::mt19937_64 rng(mix_seed(seed, p, m, 0, 1));
    bool hom_ok = true, order_ok = true, inverse_ok = true, prime_fixed = true;
    for (int s = 0; s < samples; ++s) {
      Fq x = k.random_element(rng);
      Fq y = k.random_element(rng);
      if (k.frobenius(k.mul(x, y), 1) !=
          k.mul(k.frobenius(x, 1), k.frobenius(y, 1)))
        hom_ok = false;
      if (k.frobenius(k.add(x, y), 1) !=
          k.add(k.frobenius(x, 1), k.frobenius(y, 1)))
        hom_ok = false;
      if (k.frobenius(x, m) != x) order_ok = false;
      if (k.frobenius(k.frobenius(x, 1), -1) != x) inverse_ok = false;
    }
    for (int c = 0; c < p; ++c)
      if (k.frobenius(k.from_int(c), 1) != k.from_int(c)) prime_fixed = false;
    // order exactly m: some element moves under every proper power
    for (int t = 1; t < m; ++t) {
      bool moves = false;
      for (std::uint32_t x = 0; x < k.order() && !moves; ++x)
        if (k.frobenius(static_cast<Fq>(x), t) != x) moves = true;
      order_ok = order_ok && moves;
    }
    std::string tag = "F_" + std::to_string(p) + "^" + std::to_string(m);
    r.expect(hom_ok, tag + ": Frobenius is not a ring homomorphism");
    r.expect(order_ok, tag + ": Frobenius order is not exactly m");
    r.expect(inverse_ok, tag + ": negative power is not the inverse");
    r.expect(prime_fixed, tag + ": Frobenius moves the prime field");
  }
  return r;
}

namespace {

// |SL_2| over Z[w]/(L) by enumerating products, w the integral generator of
// the field of discriminant D.  Elements are pairs (a, b) = a + b w mod L.
Integer brute_sl2_quadratic(long long D, long long L) {
  long long s, t;  // w^2 = s + t w
  if (D % 4 == 1) {
    s = (D - 1) / 4;
    t = 1;
  } else {
    s = D / 4;
    t = 0;
  }
  long long n = L * L;  // ring size
  auto mul = [&](long long e1, long long e2) {
    long long a = e1 % L, b = e1 / L, c = e2 % L, d = e2 / L;
    long long x = (a * c + b * d % L * (s % L)) % L;
    long long y = (a * d + b * c + b * d % L * (t % L)) % L;
    return x + L * y;
  };
  std::vector<long long> cnt(n, 0);
  for (long long e1 = 0; e1 < n; ++e1)
    for (long long e2 = 0; e2 < n; ++e2) ++cnt[mul(e1, e2)];
  // det = ad - bc = 1: for each (a, d) add the number of (b, c) with
  // bc = ad - 1
  Integer order = 0;
  for (long long ea = 0; ea < n; ++ea)
    for (long long ed = 0; ed < n; ++ed) {
      long long prod = mul(ea, ed);
      long long pa = prod % L, pb = prod / L;
      long long target = (pa + L - 1) % L + L * pb;
      order += cnt[target];
    }
  return order;
}

Integer brute_sl2_zn(long long L) {
  std::vector<long long> cnt(L, 0);
  for (long long x = 0; x < L; ++x)
    for (long long y = 0; y < L; ++y) ++cnt[x * y % L];
  Integer order = 0;
  for (long long a = 0; a < L; ++a)
    for (long long d = 0; d < L; ++d) order += cnt[(a * d % L + L - 1) % L];
  return order;
}

}  // namespace

SuiteResult check_sl2_orders() {
  SuiteResult r;
  r.name = "quad.sl2_orders";
  r.expect(sl2_order_residue_ring(Discriminant(5), 1) == 1, "n=1 order should be 1");
  r.expect(sl2_order_residue_ring(Discriminant(5), 3) == 720,
           "D=5, n=3 order should be 720");
  r.expect(sl2_order_residue_ring(Discriminant(5), 2) == 60,
           "D=5, n=2 order should be 60 (SL_2(F_4))");
  // whole-ring brute force against the formula
  for (long long D : {5, 8, 12, 13, 17}) {
    Discriminant disc(D);
    for (long long L : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
      r.expect(brute_sl2_quadratic(D, L) == sl2_order_residue_ring(disc, L),
               "brute-force SL_2 order mismatch at D=" + std::to_string(D) +
                   ", n=" + std::to_string(L));
    }
  }
  // split local factors are SL_2(Z/ell^e); check the factor formula directly
  struct PrimePower {
    long long ell;
    int e;
  };
  const PrimePower prime_powers[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                     {2, 3}, {3, 2}, {13, 1}, {2, 4}, {5, 2},
                                     {3, 3}, {2, 5}, {2, 6}, {3, 4}, {5, 3},
                                     {2, 7}, {3, 5}, {2, 8}};
  for (const auto& [ell, e] : prime_powers) {
    long long L = 1;
    for (int i = 0; i < e; ++i) L *= ell;
    Integer want = ipow(ell, static_cast<unsigned>(3 * e)) -
                   ipow(ell, static_cast<unsigned>(3 * e - 2));
    r.expect(brute_sl2_zn(L) == want,
             "SL_2(Z/" + std::to_string(L) + ") brute force differs from formula");
  }
  // multiplicativity in coprime moduli
  for (long long D : {5, 8}) {
    Discriminant disc(D);
    struct Pair {
      long long a, b;
    } pairs[] = {{2, 3}, {3, 4}, {5, 9}, {4, 35}};
    for (const auto& [a, b] : pairs)
      r.expect(sl2_order_residue_ring(disc, a * b) ==
                   sl2_order_residue_ring(disc, a) * sl2_order_residue_ring(disc, b),
               "SL_2 order not multiplicative at D=" + std::to_string(D) + ", n=" +
                   std::to_string(a) + "*" + std::to_string(b));
  }
  return r;
}

SuiteResult check_split_types() {
  SuiteResult r;
  r.name = "quad.split_types";
  std::vector<long long> fundamentals;
  for (long long d = 2; d <= 200; ++d)
    if (Discriminant::is_fundamental(d)) fundamentals.push_back(d);
  for (long long d : fundamentals) {
    Discriminant disc(d);
    for (long long p = 3; p <= 100; ++p) {
      bool prime = true;
      for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) prime = false;
      if (!prime) continue;
      // factor x^2 - D over F_p directly
      int roots = 0;
      for (long long x = 0; x < p; ++x)
        if ((x * x - d) % p == 0) ++roots;
      SplitType want = (d % p == 0) ? SplitType::Ramified
                       : (roots == 2 ? SplitType::Split : SplitType::Inert);
      r.expect(split_type(disc, p) == want,
               "split type at D=" + std::to_string(d) + ", p=" + std::to_string(p));
    }
    // p = 2 via the minimal polynomial of the integral generator
    SplitType got2 = split_type(disc, 2);
    SplitType want2;
    if (d % 2 == 0) {
      want2 = SplitType::Ramified;
    } else {
      // minimal polynomial x^2 - x - (d-1)/4 of (1+sqrt d)/2 over F_2:
      // two roots means split, none means inert
      long long c = (d - 1) / 4;
      int roots = 0;
      for (long long x = 0; x < 2; ++x)
        if (((x * x - x - c) % 2 + 2) % 2 == 0) ++roots;
      want2 = (roots == 2) ? SplitType::Split : SplitType::Inert;
    }
    r.expect(got2 == want2, "split type at D=" + std::to_string(d) + ", p=2");
  }
  // pinned examples
  Discriminant d5(5);
  r.expect(split_type(d5, 5) == SplitType::Ramified, "5 ramifies in Q(sqrt 5)");
  r.expect(split_type(d5, 11) == SplitType::Split, "11 splits in Q(sqrt 5)");
  r.expect(split_type(d5, 3) == SplitType::Inert, "3 is inert in Q(sqrt 5)");
  bool threw = false;
  try {
    profile_of(d5, 5);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  r.expect(threw, "profile_of should reject ramified primes");
  return r;
}

SuiteResult check_zeta_positivity(long long max_d) {
  SuiteResult r;
  r.name = "quad.zeta_positivity";
  long long bad = 0;
  long long count = 0;
  for (long long d = 3; d <= max_d; ++d) {
    if (!Discriminant::is_fundamental(d)) continue;
    ++count;
    if (zeta_minus_one(Discriminant(d)) <= 0) ++bad;
  }
  r.expect(bad == 0, std::to_string(bad) + " of " + std::to_string(count) +
                         " fundamental discriminants give zeta_F(-1) <= 0");
  return r;
}

SuiteResult check_order_invariance() {
  SuiteResult r;
  r.name = "counting.order_invariance";
  struct Case {
    RamificationProfile a, b;
  } cases[] = {
      {RamificationProfile({2, 3}), RamificationProfile({3, 2})},
      {RamificationProfile({1, 2, 2}), RamificationProfile({2, 2, 1})},
      {RamificationProfile({2, 4}), RamificationProfile({4, 2})},
      {RamificationProfile({1, 1, 3}), RamificationProfile({3, 1, 1})},
  };
  const Rational h(11, 2);
  for (const auto& [a, b] : cases) {
    TotalComponents ta = total_components(a, h);
    TotalComponents tb = total_components(b, h);
    r.expect(ta.via_type_sum == tb.via_type_sum &&
                 ta.via_closed_form == tb.via_closed_form,
             "totals differ between reordered profiles " + a.to_string() +
                 " and " + b.to_string());
    auto rows_a = slope_component_table(a, h);
    auto rows_b = slope_component_table(b, h);
    Rational sa = 0, sb = 0;
    for (const auto& row : rows_a) sa += row.count;
    for (const auto& row : rows_b) sb += row.count;
    r.expect(sa == sb, "slope totals differ between reordered profiles");
    r.expect(Integer(enumerate_types(a, TypeFilter::Generic).size()) ==
                 Integer(enumerate_types(b, TypeFilter::Generic).size()),
             "generic type counts differ between reordered profiles");
  }
  return r;
}

std::vector<SuiteResult> run_all_suites(const VerifyConfig& c) {
  std::vector<SuiteResult> out;
  out.push_back(check_weight_sum_identity(c.max_g_weight));
  out.push_back(check_weight_refinement(c.max_g_weight));
  out.push_back(check_partial_order(c.max_g_order));
  out.push_back(check_lambda_properties(std::min(c.max_g_classifiers, 12)));
  out.push_back(check_ss_classifier(c.max_g_classifiers));
  out.push_back(check_component_fixtures());
  out.push_back(check_dimension_counts(c.max_g_components));
  out.push_back(check_strata_maximality(std::min(c.max_g_components, 7)));
  out.push_back(check_line_placement(c.max_g_components));
  out.push_back(check_field_automorphisms(c.fields, c.samples, c.seed));
  out.push_back(check_dieudonne_equivalence(c.max_g_oracle, c.fields, c.samples,
                                            c.seed));
  out.push_back(check_alpha_type_oracle(c.max_g_alpha_oracle, {2, 3}));
  out.push_back(check_frobenius_locus(c.frobenius_genera, c.frobenius_primes, 2));
  out.push_back(check_zeta_values());
  out.push_back(check_zeta_positivity(500));
  out.push_back(check_split_types());
  out.push_back(check_sl2_orders());
  out.push_back(check_class_factor_pipeline());
  out.push_back(check_formula_equivalence(c.max_g_counting, c.h_samples, c.seed));
  out.push_back(check_slope_decomposition(c.max_g_slopes));
  out.push_back(check_p_independence({2, 3, 5, 7}));
  out.push_back(check_order_invariance());
  return out;
}

}  // namespace hbstrata
