// Alpha types over a ramification profile: the partial order, genericity and
// supersingularity classifiers, the cyclic gap-product weight w, the class
// weight w', the slope parameter lambda, and type enumeration.
//
// An alpha type is one bit vector per place, the bits indexed cyclically by
// Z/f_v Z.  Blocks are stored as masks (bit i = entry a_i), so a block of
// length f ranges over [0, 2^f).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hbstrata/rational.hpp"

namespace hbstrata {

// Ordered residue degrees (f_v) with sum g.  The inert case is exactly [g].
struct RamificationProfile {
  std::vector<int> degrees;

  RamificationProfile() = default;
  explicit RamificationProfile(std::vector<int> fs);

  int genus() const;
  int block_count() const { return static_cast<int>(degrees.size()); }
  bool all_even() const;

  bool operator==(const RamificationProfile&) const = default;

  // "2,2" -> {2,2}
  static RamificationProfile parse(const std::string& s);
  std::string to_string() const;
};

struct AlphaType {
  RamificationProfile profile;
  std::vector<std::uint32_t> bits;  // bits[v] is the mask of block v

  AlphaType() = default;
  AlphaType(RamificationProfile prof, std::vector<std::uint32_t> masks);

  // Single-block (inert) type on Z/gZ.
  static AlphaType inert(int g, std::uint32_t mask);

  int entry(int block, int i) const { return (bits[block] >> i) & 1u; }
  int size() const;  // |a| = number of 1 entries
  bool single_block() const { return profile.block_count() == 1; }

  bool operator==(const AlphaType&) const = default;

  // "10|011" (entries a_0 a_1 ... per block, blocks separated by '|')
  std::string to_string() const;
  static AlphaType parse(const std::string& s, const RamificationProfile& prof);
};

// Sorted support positions, one list per block.
using TauIndex = std::vector<std::vector<int>>;

std::vector<int> tau_of_mask(std::uint32_t mask, int len);
std::uint32_t mask_of_tau(const std::vector<int>& positions, int len);
TauIndex tau_index(const AlphaType& a);

// a1 precedes a2 iff every entry of a1 is >= the corresponding entry of a2
// (closure order on strata: smaller types are more degenerate).
// Throws on profile mismatch.
bool preceq(const AlphaType& a1, const AlphaType& a2);

// No two cyclically adjacent 1s in any block.  A block of length 1 is generic
// only when its entry is 0 (i+1 = i on Z/1Z).
bool is_generic_mask(std::uint32_t mask, int len);
bool is_generic(const AlphaType& a);

// Every odd-length block is all ones; every even-length block contains one of
// its two alternating patterns.
bool is_supersingular_mask(std::uint32_t mask, int len);
bool is_supersingular(const AlphaType& a);

// Gap product over the cyclic support: 2 for empty support, otherwise
// prod_j (n_{j+1} - n_j - 1) with n_{a+1} = g + n_1.  Zero exactly for
// nonempty non-generic masks.
long long weight_w_mask(std::uint32_t mask, int g);
Integer weight_w(const AlphaType& a);  // single block only

// H for generic supersingular types, otherwise the product of the block
// weights.  H is the caller-supplied class factor.
Rational weight_w_prime(const AlphaType& a, const Rational& class_factor);

struct LambdaResult {
  int lambda = 0;                       // max |b| over generic b <= a
  bool superspecial_exception = false;  // g odd and |a| = g

  bool operator==(const LambdaResult&) const = default;
};

// Maximum independent set on the cycle Z/gZ restricted to the support of a.
LambdaResult lambda_max_mask(std::uint32_t mask, int g);
LambdaResult lambda_max(const AlphaType& a);  // single block only

// Slope parameter j of the sequence {j/g (x g), (g-j)/g (x g)}; j = g/2 is
// the supersingular sequence.
struct SlopeSequence {
  Rational j;
  int g = 0;

  bool operator==(const SlopeSequence&) const = default;
  std::string to_string() const;  // "s(j,g)"
};

SlopeSequence slope_of_stratum_mask(std::uint32_t mask, int g);
SlopeSequence slope_of_stratum(const AlphaType& a);  // single block only

enum class TypeFilter { All, Generic, GenericSupersingular };

inline constexpr int kDefaultEnumBound = 24;

// All types over the profile passing the filter, in lexicographic mask order
// (last block fastest).  Throws when g exceeds the bound.
std::vector<AlphaType> enumerate_types(const RamificationProfile& profile,
                                       TypeFilter filter,
                                       int max_g = kDefaultEnumBound);

// Generic masks of one block, paired with their weights.
struct WeightedMask {
  std::uint32_t mask;
  long long w;
};
std::vector<WeightedMask> generic_block_masks(int len);

}  // namespace hbstrata
