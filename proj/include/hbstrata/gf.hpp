// Explicit finite fields F_{p^m} with table-based arithmetic.
//
// Elements are indices in [0, p^m): the base-p digits of an index are the
// coefficients of the residue polynomial, constant term first.  The modulus
// is the first irreducible monic polynomial of degree m when candidates are
// ordered by their packed base-p coefficient value, so construction is
// reproducible.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hbstrata {

using Fq = std::uint16_t;  // element index

class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 4096;

  FiniteField(int p, int m);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  // Embeds an integer via the prime subfield.
  Fq from_int(long long n) const;
  std::vector<int> coeffs(Fq a) const;  // length m, base-p digits

  Fq add(Fq a, Fq b) const { return add_[idx(a, b)]; }
  Fq sub(Fq a, Fq b) const { return add_[idx(a, neg_[b])]; }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq mul(Fq a, Fq b) const { return mul_[idx(a, b)]; }
  Fq inv(Fq a) const;
  Fq pow(Fq a, unsigned long long e) const;

  // x^(p^k); negative k means the inverse automorphism sigma^{-1} applied
  // |k| times (k is reduced mod m).
  Fq frobenius(Fq a, int k) const;

  Fq random_element(std::mt19937_64& rng) const {
    return static_cast<Fq>(rng() % q_);
  }

  std::string to_string(Fq a) const;

 private:
  std::size_t idx(Fq a, Fq b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  int p_;
  int m_;
  std::uint32_t q_;
  std::vector<int> modulus_;  // monic, coefficients c_0..c_m with c_m = 1
  std::vector<Fq> add_;
  std::vector<Fq> mul_;
  std::vector<Fq> neg_;
  std::vector<Fq> inv_;
  std::vector<Fq> frob_;  // x -> x^p
};

}  // namespace hbstrata
