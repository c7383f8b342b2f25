#include "hbstrata/alpha.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace hbstrata {

RamificationProfile::RamificationProfile(std::vector<int> fs)
    : degrees(std::move(fs)) {
  if (degrees.empty())
    throw std::invalid_argument("profile needs at least one residue degree");
  for (int f : degrees)
    if (f < 1) throw std::invalid_argument("residue degrees must be >= 1");
  if (genus() > 31)
    throw std::invalid_argument("profile genus too large for mask storage");
}

int RamificationProfile::genus() const {
  int g = 0;
  for (int f : degrees) g += f;
  return g;
}

bool RamificationProfile::all_even() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](int f) { return f % 2 == 0; });
}

RamificationProfile RamificationProfile::parse(const std::string& s) {
  std::vector<int> fs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    int f = std::stoi(item, &pos);
    if (pos != item.size())
      throw std::invalid_argument("bad profile entry: '" + item + "'");
    fs.push_back(f);
  }
  return RamificationProfile(std::move(fs));
}

std::string RamificationProfile::to_string() const {
  std::string out;
  for (size_t v = 0; v < degrees.size(); ++v) {
    if (v) out += ',';
    out += std::to_string(degrees[v]);
  }
  return out;
}

AlphaType::AlphaType(RamificationProfile prof, std::vector<std::uint32_t> masks)
    : profile(std::move(prof)), bits(std::move(masks)) {
  if (bits.size() != profile.degrees.size())
    throw std::invalid_argument("alpha type block count does not match profile");
  for (size_t v = 0; v < bits.size(); ++v)
    if (bits[v] >> profile.degrees[v])
      throw std::invalid_argument("alpha type block wider than its residue degree");
}

AlphaType AlphaType::inert(int g, std::uint32_t mask) {
  return AlphaType(RamificationProfile({g}), {mask});
}

int AlphaType::size() const {
  int s = 0;
  for (std::uint32_t m : bits) s += std::popcount(m);
  return s;
}

std::string AlphaType::to_string() const {
  std::string out;
  for (size_t v = 0; v < bits.size(); ++v) {
    if (v) out += '|';
    for (int i = 0; i < profile.degrees[v]; ++i)
      out += entry(static_cast<int>(v), i) ? '1' : '0';
  }
  return out;
}

AlphaType AlphaType::parse(const std::string& s, const RamificationProfile& prof) {
  std::vector<std::uint32_t> masks;
  std::uint32_t cur = 0;
  int pos = 0;
  size_t block = 0;
  auto close_block = [&]() {
    if (block >= prof.degrees.size() || pos != prof.degrees[block])
      throw std::invalid_argument("alpha type '" + s + "' does not fit profile " +
                                  prof.to_string());
    masks.push_back(cur);
    cur = 0;
    pos = 0;
    ++block;
  };
  for (char c : s) {
    if (c == '|') {
      close_block();
    } else if (c == '0' || c == '1') {
      if (c == '1') cur |= 1u << pos;
      ++pos;
    } else {
      throw std::invalid_argument("bad alpha type character in '" + s + "'");
    }
  }
  close_block();
  if (block != prof.degrees.size())
    throw std::invalid_argument("alpha type '" + s + "' does not fit profile " +
                                prof.to_string());
  return AlphaType(prof, std::move(masks));
}

std::vector<int> tau_of_mask(std::uint32_t mask, int len) {
  std::vector<int> out;
  for (int i = 0; i < len; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

std::uint32_t mask_of_tau(const std::vector<int>& positions, int len) {
  std::uint32_t m = 0;
  for (int i : positions) {
    if (i < 0 || i >= len)
      throw std::invalid_argument("tau position out of range");
    m |= 1u << i;
  }
  return m;
}

TauIndex tau_index(const AlphaType& a) {
  TauIndex tau;
  for (size_t v = 0; v < a.bits.size(); ++v)
    tau.push_back(tau_of_mask(a.bits[v], a.profile.degrees[v]));
  return tau;
}

bool preceq(const AlphaType& a1, const AlphaType& a2) {
  if (a1.profile != a2.profile)
    throw std::invalid_argument("preceq: profiles differ");
  for (size_t v = 0; v < a1.bits.size(); ++v)
    if ((a1.bits[v] & a2.bits[v]) != a2.bits[v]) return false;
  return true;
}

bool is_generic_mask(std::uint32_t mask, int len) {
  if (len == 1) return mask == 0;  // position 0 is its own cyclic neighbour
  for (int i = 0; i < len; ++i) {
    int next = (i + 1) % len;
    if (((mask >> i) & 1u) && ((mask >> next) & 1u)) return false;
  }
  return true;
}

bool is_generic(const AlphaType& a) {
  for (size_t v = 0; v < a.bits.size(); ++v)
    if (!is_generic_mask(a.bits[v], a.profile.degrees[v])) return false;
  return true;
}

bool is_supersingular_mask(std::uint32_t mask, int len) {
  std::uint32_t full = (len == 32) ? ~0u : ((1u << len) - 1);
  if (len % 2 == 1) return mask == full;
  std::uint32_t even_pat = 0x55555555u & full;
  std::uint32_t odd_pat = 0xAAAAAAAAu & full;
  return (mask & even_pat) == even_pat || (mask & odd_pat) == odd_pat;
}

bool is_supersingular(const AlphaType& a) {
  for (size_t v = 0; v < a.bits.size(); ++v)
    if (!is_supersingular_mask(a.bits[v], a.profile.degrees[v])) return false;
  return true;
}

long long weight_w_mask(std::uint32_t mask, int g) {
  if (mask == 0) return 2;
  std::vector<int> tau = tau_of_mask(mask, g);
  long long w = 1;
  for (size_t j = 0; j < tau.size(); ++j) {
    int next = (j + 1 < tau.size()) ? tau[j + 1] : g + tau[0];
    w *= next - tau[j] - 1;
    if (w == 0) return 0;
  }
  return w;
}

static void require_single_block(const AlphaType& a, const char* op) {
  if (!a.single_block())
    throw std::invalid_argument(std::string(op) + ": single-block alpha type required");
}

Integer weight_w(const AlphaType& a) {
  require_single_block(a, "weight_w");
  return weight_w_mask(a.bits[0], a.profile.degrees[0]);
}

Rational weight_w_prime(const AlphaType& a, const Rational& class_factor) {
  if (is_generic(a) && is_supersingular(a)) return class_factor;
  Rational w = 1;
  for (size_t v = 0; v < a.bits.size(); ++v)
    w *= weight_w_mask(a.bits[v], a.profile.degrees[v]);
  return w;
}

// Max independent set on the cycle Z/gZ among positions of the mask.
static int cycle_mis(std::uint32_t mask, int g) {
  if (mask == 0) return 0;
  if (g == 1) return 0;  // the single position is self-adjacent
  if (g == 2) return 1;  // positions 0 and 1 are adjacent
  auto allowed = [&](int i) { return ((mask >> i) & 1u) != 0; };
  // Path DP over positions [lo, hi] with fixed choices at the cycle seam.
  auto path_mis = [&](int lo, int hi) {
    int take = -1, skip = 0;  // best with/without position chosen
    for (int i = lo; i <= hi; ++i) {
      int new_skip = std::max(skip, take);
      int new_take = allowed(i) ? skip + 1 : -1;
      skip = new_skip;
      take = new_take;
    }
    return std::max(skip, take);
  };
  int best = path_mis(1, g - 1);  // position 0 not chosen
  if (allowed(0)) best = std::max(best, 1 + path_mis(2, g - 2));
  return best;
}

LambdaResult lambda_max_mask(std::uint32_t mask, int g) {
  LambdaResult r;
  r.lambda = cycle_mis(mask, g);
  r.superspecial_exception = (g % 2 == 1) && (std::popcount(mask) == g);
  return r;
}

LambdaResult lambda_max(const AlphaType& a) {
  require_single_block(a, "lambda_max");
  return lambda_max_mask(a.bits[0], a.profile.degrees[0]);
}

std::string SlopeSequence::to_string() const {
  std::string js = numerator(j).str();
  if (!is_integral(j)) js += "/" + denominator(j).str();
  return "s(" + js + "," + std::to_string(g) + ")";
}

SlopeSequence slope_of_stratum_mask(std::uint32_t mask, int g) {
  LambdaResult lr = lambda_max_mask(mask, g);
  SlopeSequence s;
  s.g = g;
  s.j = lr.superspecial_exception ? Rational(g, 2) : Rational(lr.lambda);
  return s;
}

SlopeSequence slope_of_stratum(const AlphaType& a) {
  require_single_block(a, "slope_of_stratum");
  return slope_of_stratum_mask(a.bits[0], a.profile.degrees[0]);
}

std::vector<AlphaType> enumerate_types(const RamificationProfile& profile,
                                       TypeFilter filter, int max_g) {
  int g = profile.genus();
  if (g > max_g)
    throw std::invalid_argument("enumeration bound exceeded: g = " +
                                std::to_string(g) + " > " + std::to_string(max_g));
  // Per-block candidate masks under the blockwise part of the filter.
  std::vector<std::vector<std::uint32_t>> pool;
  for (int f : profile.degrees) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << f); ++m) {
      if (filter != TypeFilter::All && !is_generic_mask(m, f)) continue;
      if (filter == TypeFilter::GenericSupersingular && !is_supersingular_mask(m, f))
        continue;
      masks.push_back(m);
    }
    pool.push_back(std::move(masks));
  }
  for (const auto& masks : pool)
    if (masks.empty()) return {};
  std::vector<AlphaType> out;
  std::vector<size_t> idx(pool.size(), 0);
  while (true) {
    std::vector<std::uint32_t> cur(pool.size());
    for (size_t v = 0; v < pool.size(); ++v) cur[v] = pool[v][idx[v]];
    out.emplace_back(profile, std::move(cur));
    // odometer, last block fastest
    size_t v = pool.size();
    while (true) {
      if (v == 0) return out;
      --v;
      if (++idx[v] < pool[v].size()) break;
      idx[v] = 0;
    }
  }
}

std::vector<WeightedMask> generic_block_masks(int len) {
  std::vector<WeightedMask> out;
  for (std::uint32_t m = 0; m < (1u << len); ++m)
    if (is_generic_mask(m, len)) out.push_back({m, weight_w_mask(m, len)});
  return out;
}

}  // namespace hbstrata
