#pragma once

// Frame check sequence, per the IEEE-802 convention the FDDI MAC inherits.
//
// Number the data-bits of the checked region 0,1,2,... starting with the bit
// before the ending delimiter and working backwards; the region is valid iff
//     Mod(x^n I(x) + x^32 {f(x) + I(x)}, g(x)) = 0,
// where n is the region's bit count including the FCS field and
// I(x) = sum_{i<32} x^i. The I(x) terms amount to complementing the first and
// last 32 transmitted bits before the division.
//
// The check polynomial degree is parameterized (CheckPoly) so that the merge
// statistics can run against deliberately weakened 8/16-bit generators; the
// protocol itself always uses the degree-32 generator from gf2.hpp.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fddi/gf2.hpp"

namespace fddi {

struct TooShort : std::invalid_argument {
  TooShort() : std::invalid_argument("checked region shorter than the FCS width") {}
};

// x^degree + low_bits, constant term required (low_bits odd).
struct CheckPoly {
  int degree = 32;
  uint32_t low_bits = kFcsGeneratorLow;

  uint32_t mask() const {
    return degree == 32 ? 0xFFFFFFFFu : ((uint32_t{1} << degree) - 1);
  }
  uint32_t mul_x(uint32_t r) const {
    uint32_t hi = r >> (degree - 1);
    r = (r << 1) & mask();
    return hi ? (r ^ low_bits) : r;
  }
  uint32_t mulmod(uint32_t a, uint32_t b) const {
    uint32_t acc = 0;
    while (b) {
      if (b & 1) acc ^= a;
      a = mul_x(a);
      b >>= 1;
    }
    return acc;
  }
  // x^-degree mod g, used to peel the x^degree factor off the FCS term
  uint32_t x_inv_deg() const {
    uint64_t g = (uint64_t{1} << degree) | low_bits;
    uint32_t xinv = static_cast<uint32_t>((g ^ 1) >> 1);  // x^-1 = (g+1)/x
    uint32_t result = 1, base = xinv;
    int k = degree;
    while (k) {
      if (k & 1) result = mulmod(result, base);
      base = mulmod(base, base);
      k >>= 1;
    }
    return result;
  }
  GfPoly poly() const {
    GfPoly p = GfPoly::from_bits(low_bits);
    p.set(static_cast<uint64_t>(degree));
    return p;
  }
};

inline constexpr CheckPoly kFcs32{32, kFcsGeneratorLow};
// weakened generators for desk-scale merge statistics
inline constexpr CheckPoly kCheck16{16, 0x1021};  // x^16+x^12+x^5+1
inline constexpr CheckPoly kCheck8{8, 0x07};      // x^8+x^2+x+1

// Checks a region (transmission order, one 0/1 per entry, FCS included).
inline bool check_region(const CheckPoly& g, std::span<const uint8_t> bits) {
  const std::size_t n = bits.size();
  const std::size_t d = static_cast<std::size_t>(g.degree);
  if (n < d) throw TooShort();
  // Mod(f + I + x^{n-d} I, g) == 0, Horner from the first transmitted bit
  uint32_t r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    uint8_t b = bits[j];
    if (j < d) b ^= 1;
    if (j >= n - d) b ^= 1;
    r = g.mul_x(r) ^ (b & 1);
  }
  return r == 0;
}

// FCS value for a payload (transmission order); returns the FCS field bits in
// transmission order (coefficient of x^{d-1} first).
inline std::vector<uint8_t> compute_region_fcs(const CheckPoly& g,
                                               std::span<const uint8_t> payload) {
  const std::size_t k = payload.size();
  const std::size_t d = static_cast<std::size_t>(g.degree);
  const std::size_t n = k + d;
  // rem = Mod(x^n I + x^{2d} M, g); R = I + x^-d * rem
  uint32_t r = 0;
  for (std::size_t e_plus1 = n + d; e_plus1 > 0; --e_plus1) {
    const std::size_t e = e_plus1 - 1;
    uint8_t bit = (e >= n) ? 1 : 0;  // x^n I term, exponents n..n+d-1
    if (e >= 2 * d && e < 2 * d + k) {
      // x^{2d} M term: M's bit i at exponent 2d+i; M bit i = payload[k-1-i]
      bit ^= payload[k - 1 - (e - 2 * d)];
    }
    r = g.mul_x(r) ^ bit;
  }
  uint32_t fcs = g.mulmod(r, g.x_inv_deg()) ^ g.mask();
  std::vector<uint8_t> out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = (fcs >> (d - 1 - j)) & 1;
  return out;
}

// Protocol-polynomial entry points.
inline bool fcs_check(std::span<const uint8_t> frame_bits) {
  return check_region(kFcs32, frame_bits);
}

// 32-bit FCS of a payload, packed with bit 31 = first transmitted bit.
inline uint32_t fcs_compute(std::span<const uint8_t> payload_bits) {
  auto bits = compute_region_fcs(kFcs32, payload_bits);
  uint32_t v = 0;
  for (uint8_t b : bits) v = (v << 1) | b;
  return v;
}

}  // namespace fddi
