#include <catch2/catch_amalgamated.hpp>

#include <cstring>
#include <random>
#include <vector>

#include "fddi/fcs.hpp"
#include "fddi/gf2.hpp"
#include "fddi/reference.hpp"

using namespace fddi;

namespace {

// Independent oracle: naive bit-serial shift-subtract long division over a
// coefficient array. Deliberately unrelated to the GfPoly word machinery.
std::vector<uint8_t> naive_mod(std::vector<uint8_t> f, const std::vector<uint8_t>& g) {
  auto deg = [](const std::vector<uint8_t>& p) {
    for (std::size_t i = p.size(); i-- > 0;)
      if (p[i]) return static_cast<std::ptrdiff_t>(i);
    return std::ptrdiff_t{-1};
  };
  std::ptrdiff_t dg = deg(g);
  REQUIRE(dg >= 0);
  for (std::ptrdiff_t df = deg(f); df >= dg; df = deg(f)) {
    for (std::ptrdiff_t i = 0; i <= dg; ++i)
      f[static_cast<std::size_t>(df - dg + i)] ^= g[static_cast<std::size_t>(i)];
  }
  return f;
}

std::vector<uint8_t> to_coeffs(const GfPoly& p, std::size_t len) {
  std::vector<uint8_t> out(len, 0);
  for (uint64_t e : p.exponents()) out[e] = 1;
  return out;
}

GfPoly from_coeffs(const std::vector<uint8_t>& c) {
  GfPoly p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) p.flip(i);
  return p;
}

// Direct evaluation of the acceptance condition
//   Mod(x^n I + x^32 (f + I), g) == 0
// via poly_mod, used as the oracle for fcs_compute/fcs_check.
bool oracle_check(const std::vector<uint8_t>& frame_bits) {
  const std::size_t n = frame_bits.size();
  GfPoly f;
  for (std::size_t j = 0; j < n; ++j)
    if (frame_bits[j]) f.set(n - 1 - j);
  GfPoly value = f.shifted(32);
  for (int i = 0; i < 32; ++i) {
    value ^= GfPoly::x_pow(n + static_cast<uint64_t>(i));
    value ^= GfPoly::x_pow(32 + static_cast<uint64_t>(i));
  }
  return poly_mod(value, fcs_generator()).is_zero();
}

std::vector<uint8_t> frame_with_fcs(const std::vector<uint8_t>& payload) {
  uint32_t crc = fcs_compute(payload);
  std::vector<uint8_t> frame = payload;
  for (int j = 31; j >= 0; --j) frame.push_back((crc >> j) & 1);
  return frame;
}

}  // namespace

TEST_CASE("poly_mod basics") {
  const GfPoly& g = fcs_generator();
  REQUIRE(poly_mod(g, g).is_zero());
  GfPoly xg1 = g.shifted(1) ^ GfPoly::one();
  REQUIRE(poly_mod(xg1, g) == GfPoly::one());
  REQUIRE_THROWS_AS(poly_mod(GfPoly::one(), GfPoly::zero()), ZeroModulus);
}

TEST_CASE("poly_mod matches the bit-serial long-division oracle") {
  std::mt19937_64 rng(42);
  const GfPoly& g = fcs_generator();
  auto gc = to_coeffs(g, 33);
  for (int trial = 0; trial < 100; ++trial) {
    GfPoly f;
    for (int k = 0; k < 40; ++k) f.flip(rng() % 201);
    auto want = naive_mod(to_coeffs(f, 201), gc);
    REQUIRE(poly_mod(f, g) == from_coeffs(want));
  }
}

TEST_CASE("dense and residue32 representations agree") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    uint64_t e = rng() % 100000;
    REQUIRE(xpow_mod(e) == poly_mod(GfPoly::x_pow(e), fcs_generator()));
  }
  for (int trial = 0; trial < 100; ++trial) {
    uint32_t a = static_cast<uint32_t>(rng());
    uint32_t b = static_cast<uint32_t>(rng());
    GfPoly pa = GfPoly::from_bits(a), pb = GfPoly::from_bits(b);
    REQUIRE(GfPoly::from_bits(res32::mulmod(a, b)) ==
            poly_mulmod(pa, pb, fcs_generator()));
  }
}

TEST_CASE("xpow_mod basics and the weight-3 multiple") {
  REQUIRE(xpow_mod(0) == GfPoly::one());
  REQUIRE(xpow_mod(31) == GfPoly::x_pow(31));
  GfPoly sum = xpow_mod(91639) ^ xpow_mod(41678) ^ GfPoly::one();
  REQUIRE(sum.is_zero());
}

TEST_CASE("all published minimum-degree multiples are codewords") {
  for (const auto& row : reference::fcs_multiples()) {
    CAPTURE(row.weight);
    REQUIRE(row.exponents.size() == static_cast<std::size_t>(row.weight));
    REQUIRE(is_codeword(std::span<const uint64_t>(row.exponents)));
    REQUIRE(is_codeword(GfPoly::from_exponents(std::span<const uint64_t>(row.exponents))));
  }
}

TEST_CASE("codeword linearity") {
  GfPoly a = GfPoly::from_exponents({0, 2215, 2866, 3006});
  GfPoly b = GfPoly::from_exponents({0, 89, 117, 155, 300});
  REQUIRE(is_codeword(a));
  REQUIRE(is_codeword(b));
  REQUIRE(is_codeword(a ^ b));
  REQUIRE(is_codeword(GfPoly::zero()));
  REQUIRE(is_codeword(a.shifted(40)));  // multiples remain multiples
}

TEST_CASE("fcs roundtrip for random payloads of 8..512 bits") {
  std::mt19937_64 rng(2024);
  for (std::size_t k : {8u, 16u, 32u, 33u, 64u, 100u, 511u, 512u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<uint8_t> payload(k);
      for (auto& b : payload) b = rng() & 1;
      auto frame = frame_with_fcs(payload);
      REQUIRE(fcs_check(frame));
      REQUIRE(oracle_check(frame));
    }
  }
}

TEST_CASE("complement sensitivity: zero payload has nonzero fcs") {
  std::vector<uint8_t> zeros(64, 0);
  REQUIRE(fcs_compute(zeros) != 0);
}

TEST_CASE("flipping any single payload bit changes the fcs") {
  std::mt19937_64 rng(5);
  std::vector<uint8_t> payload(96);
  for (auto& b : payload) b = rng() & 1;
  uint32_t base = fcs_compute(payload);
  for (std::size_t j = 0; j < payload.size(); ++j) {
    auto copy = payload;
    copy[j] ^= 1;
    REQUIRE(fcs_compute(copy) != base);
  }
}

TEST_CASE("fcs_check requires at least 32 bits") {
  std::vector<uint8_t> tiny(31, 0);
  REQUIRE_THROWS_AS(fcs_check(tiny), TooShort);
}

TEST_CASE("single error patterns are always detected") {
  std::mt19937_64 rng(11);
  std::vector<uint8_t> payload(400);
  for (auto& b : payload) b = rng() & 1;
  auto frame = frame_with_fcs(payload);
  std::size_t n = frame.size();

  const char* patterns[] = {"0010", "0101", "0110", "1000", "1001",
                            "1010", "1100", "1111", "00010110", "00011000"};
  for (const char* pat : patterns) {
    std::size_t len = std::strlen(pat);
    for (std::size_t sym_off : {0u, 5u, 50u, 100u}) {
      auto copy = frame;
      for (std::size_t m = 0; m < len; ++m)
        if (pat[m] == '1') copy[n - 1 - (4 * sym_off + (len - 1 - m))] ^= 1;
      REQUIRE_FALSE(fcs_check(copy));
    }
  }
}

TEST_CASE("undetected triple on a real frame") {
  // patterns 1010, 1111, 0010 at symbol positions 0, 625, 3605 (numbered
  // backwards from the last FCS symbol) leave the check satisfied
  std::mt19937_64 rng(3605);
  std::vector<uint8_t> payload(14500);
  for (auto& b : payload) b = rng() & 1;
  auto frame = frame_with_fcs(payload);
  std::size_t n = frame.size();
  auto inject = [&](const char* pat, std::size_t sym) {
    std::size_t len = std::strlen(pat);
    for (std::size_t m = 0; m < len; ++m)
      if (pat[m] == '1') frame[n - 1 - (4 * sym + (len - 1 - m))] ^= 1;
  };
  inject("1010", 0);
  inject("1111", 625);
  inject("0010", 3605);
  REQUIRE(fcs_check(frame));
}

TEST_CASE("detectability depends only on the error polynomial") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<uint8_t> payload(168);
    for (auto& b : payload) b = rng() & 1;
    auto frame = frame_with_fcs(payload);
    std::size_t n = frame.size();

    GfPoly e;
    for (int k = 0; k < 6; ++k) e.flip(rng() % n);
    if (e.is_zero()) continue;
    auto corrupted = frame;
    for (uint64_t exp : e.exponents()) corrupted[n - 1 - exp] ^= 1;
    REQUIRE(fcs_check(corrupted) == is_codeword(e));
  }
}

TEST_CASE("weakened check polynomials roundtrip") {
  std::mt19937_64 rng(16);
  for (const CheckPoly& g : {kCheck8, kCheck16}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<uint8_t> payload(40 + rng() % 100);
      for (auto& b : payload) b = rng() & 1;
      auto fcs_bits = compute_region_fcs(g, payload);
      REQUIRE(fcs_bits.size() == static_cast<std::size_t>(g.degree));
      auto frame = payload;
      frame.insert(frame.end(), fcs_bits.begin(), fcs_bits.end());
      REQUIRE(check_region(g, frame));
      frame[rng() % frame.size()] ^= 1;
      REQUIRE_FALSE(check_region(g, frame));
    }
  }
}

TEST_CASE("burst detection: every burst of length <= 32 is caught") {
  // structural core: a nonzero polynomial of degree < 32 is its own residue,
  // so no short burst can be a codeword at any offset
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    GfPoly q = GfPoly::from_bits(rng() & 0xFFFFFFFFull);
    if (q.is_zero()) continue;
    REQUIRE(poly_mod(q, fcs_generator()) == q);
    REQUIRE_FALSE(is_codeword(q.shifted(rng() % 480)));
  }
  // end to end on a 512-bit frame: random interior for every length and offset
  std::vector<uint8_t> payload(480);
  for (auto& b : payload) b = rng() & 1;
  auto frame = frame_with_fcs(payload);
  for (std::size_t blen = 1; blen <= 32; ++blen) {
    for (std::size_t off = 0; off + blen <= frame.size(); off += 7) {
      auto copy = frame;
      if (blen == 1) {
        copy[off] ^= 1;
      } else {
        copy[off] ^= 1;
        copy[off + blen - 1] ^= 1;
        for (std::size_t j = 1; j + 1 < blen; ++j) copy[off + j] ^= rng() & 1;
      }
      REQUIRE_FALSE(fcs_check(copy));
    }
  }
}
