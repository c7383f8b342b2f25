#include "hbstrata/gf.hpp"

#include <stdexcept>

namespace hbstrata {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mod(Poly f, const Poly& g, int p) {
  // g is monic
  while (poly_deg(f) >= poly_deg(g)) {
    int shift = poly_deg(f) - poly_deg(g);
    int lead = f.back();
    for (int i = 0; i <= poly_deg(g); ++i) {
      int& c = f[i + shift];
      c = ((c - lead * g[i]) % p + p) % p;
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f;
}

bool divides(const Poly& d, const Poly& f, int p) {
  return poly_mod(f, d, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, int p) {
  int m = poly_deg(f);
  for (int d = 1; 2 * d <= m; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      Poly cand(d + 1, 0);
      long long t = v;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(t % p);
        t /= p;
      }
      cand[d] = 1;
      if (divides(cand, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw std::invalid_argument("field too large: p^m exceeds " +
                                  std::to_string(kMaxOrder));
  }
  q_ = static_cast<std::uint32_t>(q);

  // Deterministic modulus: first irreducible x^m + sum c_i x^i in packed order.
  modulus_.assign(m + 1, 0);
  modulus_[m] = 1;
  if (m == 1) {
    // x itself is irreducible; keep c_0 = 0.
  } else {
    bool found = false;
    for (std::uint32_t v = 0; v < q_ && !found; ++v) {
      Poly cand(m + 1, 0);
      std::uint32_t t = v;
      for (int i = 0; i < m; ++i) {
        cand[i] = static_cast<int>(t % p);
        t /= p;
      }
      cand[m] = 1;
      if (is_irreducible(cand, p)) {
        modulus_ = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  auto decode = [&](Fq a) {
    std::vector<int> c(m_, 0);
    std::uint32_t t = a;
    for (int i = 0; i < m_; ++i) {
      c[i] = static_cast<int>(t % p_);
      t /= p_;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    std::uint32_t v = 0;
    for (int i = m_ - 1; i >= 0; --i) v = v * p_ + c[i];
    return static_cast<Fq>(v);
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);

  std::vector<std::vector<int>> digits(q_);
  for (std::uint32_t a = 0; a < q_; ++a) digits[a] = decode(static_cast<Fq>(a));

  for (std::uint32_t a = 0; a < q_; ++a) {
    std::vector<int> nc(m_);
    for (int i = 0; i < m_; ++i) nc[i] = (p_ - digits[a][i]) % p_;
    neg_[a] = encode(nc);
    for (std::uint32_t b = 0; b < q_; ++b) {
      std::vector<int> sc(m_);
      for (int i = 0; i < m_; ++i) sc[i] = (digits[a][i] + digits[b][i]) % p_;
      add_[idx(static_cast<Fq>(a), static_cast<Fq>(b))] = encode(sc);
    }
  }

  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = a; b < q_; ++b) {
      Poly prod(2 * m_ - 1, 0);
      for (int i = 0; i < m_; ++i) {
        if (digits[a][i] == 0) continue;
        for (int j = 0; j < m_; ++j)
          prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p_;
      }
      while (!prod.empty() && prod.back() == 0) prod.pop_back();
      Poly red = poly_mod(std::move(prod), modulus_, p_);
      red.resize(m_, 0);
      Fq r = encode(red);
      mul_[idx(static_cast<Fq>(a), static_cast<Fq>(b))] = r;
      mul_[idx(static_cast<Fq>(b), static_cast<Fq>(a))] = r;
    }
  }

  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul_[idx(static_cast<Fq>(a), static_cast<Fq>(b))] == 1) {
        inv_[a] = static_cast<Fq>(b);
        break;
      }
    }
    if (inv_[a] == 0) throw std::logic_error("element without inverse; modulus not irreducible?");
  }

  for (std::uint32_t a = 0; a < q_; ++a)
    frob_[a] = pow(static_cast<Fq>(a), static_cast<unsigned long long>(p_));
}

Fq FiniteField::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Fq>(r);
}

std::vector<int> FiniteField::coeffs(Fq a) const {
  std::vector<int> c(m_, 0);
  std::uint32_t t = a;
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(t % p_);
    t /= p_;
  }
  return c;
}

Fq FiniteField::inv(Fq a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return inv_[a];
}

Fq FiniteField::pow(Fq a, unsigned long long e) const {
  Fq r = 1;
  Fq base = a;
  while (e) {
    if (e & 1ull) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fq FiniteField::frobenius(Fq a, int k) const {
  int kk = ((k % m_) + m_) % m_;
  Fq r = a;
  for (int i = 0; i < kk; ++i) r = frob_[r];
  return r;
}

std::string FiniteField::to_string(Fq a) const {
  std::vector<int> c = coeffs(a);
  std::string out;
  bool first = true;
  for (int i = 0; i < m_; ++i) {
    if (c[i] == 0) continue;
    if (!first) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
    first = false;
  }
  return first ? "0" : out;
}

}  // namespace hbstrata
