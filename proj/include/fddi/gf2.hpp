#pragma once

// GF(2) polynomial arithmetic. Two representations, cross-tested:
//  - GfPoly: dense word vector, arbitrary degree (frame polynomials, the
//    degree-91639 multiples, the long-division oracle),
//  - 32-bit residues modulo the FCS generator (search and residue tables).

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fddi {

struct ZeroModulus : std::domain_error {
  ZeroModulus() : std::domain_error("polynomial modulus is zero") {}
};

class GfPoly {
 public:
  GfPoly() = default;

  static GfPoly zero() { return {}; }
  static GfPoly one() { return x_pow(0); }
  static GfPoly x_pow(uint64_t k) {
    GfPoly p;
    p.set(k);
    return p;
  }
  static GfPoly from_exponents(std::span<const uint64_t> exps) {
    GfPoly p;
    for (uint64_t e : exps) p.flip(e);
    return p;
  }
  static GfPoly from_exponents(std::initializer_list<uint64_t> exps) {
    return from_exponents(std::span<const uint64_t>(exps.begin(), exps.size()));
  }
  // value's bit i becomes coefficient of x^i
  static GfPoly from_bits(uint64_t value) {
    GfPoly p;
    if (value) {
      p.words_.push_back(value);
      p.normalize();
    }
    return p;
  }

  bool is_zero() const { return words_.empty(); }

  // degree of the zero polynomial is -1
  int64_t degree() const {
    if (words_.empty()) return -1;
    uint64_t top = words_.back();
    int bit = 63;
    while (!(top >> bit)) --bit;
    return static_cast<int64_t>((words_.size() - 1) * 64 + static_cast<uint64_t>(bit));
  }

  bool coeff(uint64_t e) const {
    std::size_t w = e / 64;
    return w < words_.size() && ((words_[w] >> (e % 64)) & 1);
  }

  void set(uint64_t e) {
    std::size_t w = e / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= uint64_t{1} << (e % 64);
  }

  void flip(uint64_t e) {
    std::size_t w = e / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= uint64_t{1} << (e % 64);
    normalize();
  }

  GfPoly& operator^=(const GfPoly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    normalize();
    return *this;
  }
  friend GfPoly operator^(GfPoly a, const GfPoly& b) { return a ^= b; }

  // multiply by x^k
  GfPoly shifted(uint64_t k) const {
    if (is_zero()) return {};
    GfPoly out;
    std::size_t wshift = k / 64;
    unsigned bshift = static_cast<unsigned>(k % 64);
    out.words_.assign(words_.size() + wshift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      out.words_[i + wshift] ^= words_[i] << bshift;
      if (bshift) out.words_[i + wshift + 1] ^= words_[i] >> (64 - bshift);
    }
    out.normalize();
    return out;
  }

  std::vector<uint64_t> exponents() const {
    std::vector<uint64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t v = words_[w];
      while (v) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(v));
        out.push_back(w * 64 + bit);
        v &= v - 1;
      }
    }
    return out;
  }

  uint64_t weight() const {
    uint64_t n = 0;
    for (uint64_t w : words_) n += static_cast<uint64_t>(__builtin_popcountll(w));
    return n;
  }

  // low 64 coefficient bits
  uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }

  bool operator==(const GfPoly&) const = default;

 private:
  void normalize() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }
  std::vector<uint64_t> words_;  // bit e of words_[e/64]
};

// Remainder of f modulo g, by shift-and-subtract long division.
inline GfPoly poly_mod(GfPoly f, const GfPoly& g) {
  if (g.is_zero()) throw ZeroModulus();
  int64_t dg = g.degree();
  int64_t df = f.degree();
  while (df >= dg) {
    f ^= g.shifted(static_cast<uint64_t>(df - dg));
    df = f.degree();
  }
  return f;
}

inline GfPoly poly_mulmod(const GfPoly& a, const GfPoly& b, const GfPoly& g) {
  GfPoly acc;
  for (uint64_t e : a.exponents()) acc ^= poly_mod(b.shifted(e), g);
  return poly_mod(acc, g);
}

// ---------------------------------------------------------------------------
// The 32-bit frame check sequence generator:
//   g(x) = x^32 + x^26 + x^23 + x^22 + x^16 + x^12 + x^11 + x^10
//        + x^8 + x^7 + x^5 + x^4 + x^2 + x + 1
// shared with the IEEE 802 LAN standards.
// ---------------------------------------------------------------------------
inline constexpr uint32_t kFcsGeneratorLow = 0x04C11DB7u;  // terms below x^32

inline const GfPoly& fcs_generator() {
  static const GfPoly g = [] {
    GfPoly p = GfPoly::from_bits(kFcsGeneratorLow);
    p.set(32);
    return p;
  }();
  return g;
}

// Residue arithmetic modulo the FCS generator, on packed 32-bit values
// (bit i = coefficient of x^i).
namespace res32 {

inline constexpr uint32_t mul_x(uint32_t r) {
  uint32_t hi = r >> 31;
  r <<= 1;
  return hi ? (r ^ kFcsGeneratorLow) : r;
}

inline constexpr uint32_t mul_x4(uint32_t r) {
  for (int i = 0; i < 4; ++i) r = mul_x(r);
  return r;
}

// reduce a 64-bit polynomial value mod g
inline constexpr uint32_t reduce64(uint64_t v) {
  for (int bit = 63; bit >= 32; --bit)
    if ((v >> bit) & 1) v ^= (0x100000000ull | kFcsGeneratorLow) << (bit - 32);
  return static_cast<uint32_t>(v);
}

inline constexpr uint32_t mulmod(uint32_t a, uint32_t b) {
  // carryless 32x32 multiply, then reduce
  uint64_t acc = 0;
  uint64_t aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  // aa shifts can reach bit 62; acc degree <= 62, reducible
  return reduce64(acc);
}

// x^k mod g by square-and-multiply
inline constexpr uint32_t xpow(uint64_t k) {
  uint32_t result = 1;
  uint32_t base = 2;  // x
  while (k) {
    if (k & 1) result = mulmod(result, base);
    base = mulmod(base, base);
    k >>= 1;
  }
  return result;
}

}  // namespace res32

// x^k mod g as a polynomial; consistent with poly_mod for all k.
inline GfPoly xpow_mod(uint64_t k) { return GfPoly::from_bits(res32::xpow(k)); }

// True iff g divides e; an error polynomial is undetectable iff it is a
// codeword of the FCS code.
inline bool is_codeword(const GfPoly& e) { return poly_mod(e, fcs_generator()).is_zero(); }

inline bool is_codeword(std::span<const uint64_t> exponents) {
  uint32_t acc = 0;
  for (uint64_t e : exponents) acc ^= res32::xpow(e);
  return acc == 0;
}

}  // namespace fddi
