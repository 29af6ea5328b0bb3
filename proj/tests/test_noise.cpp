#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fddi/noise.hpp"
#include "fddi/reference.hpp"

using namespace fddi;

TEST_CASE("apply_noise flips exactly one level and is an involution") {
  std::mt19937 rng(7);
  CodeBits bits(40);
  for (auto& b : bits) b = rng() & 1;
  LevelStream ls = nrzi_modulate(bits, Level::Low);
  for (std::ptrdiff_t i = -1; i < static_cast<std::ptrdiff_t>(ls.size()); ++i) {
    LevelStream once = apply_noise(ls, {i});
    REQUIRE(apply_noise(once, {i}).levels == ls.levels);
    REQUIRE(apply_noise(once, {i}).leading_level == ls.leading_level);
  }
  REQUIRE_THROWS_AS(apply_noise(ls, {-2}), IndexOutOfRange);
  REQUIRE_THROWS_AS(apply_noise(ls, {static_cast<std::ptrdiff_t>(ls.size())}),
                    IndexOutOfRange);
}

TEST_CASE("two-bit theorem: one noise event corrupts exactly bits i and i+1") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    CodeBits bits(10 + rng() % 100);
    for (auto& b : bits) b = rng() & 1;
    LevelStream ls = nrzi_modulate(bits, Level::Low);
    for (std::ptrdiff_t i = -1; i < static_cast<std::ptrdiff_t>(ls.size()); ++i) {
      CodeBits noisy = nrzi_demodulate(apply_noise(ls, {i}));
      std::vector<std::size_t> diff;
      for (std::size_t j = 0; j < bits.size(); ++j)
        if (noisy[j] != bits[j]) diff.push_back(j);
      std::vector<std::size_t> expected;
      if (i >= 0) expected.push_back(static_cast<std::size_t>(i));
      if (i + 1 < static_cast<std::ptrdiff_t>(bits.size()))
        expected.push_back(static_cast<std::size_t>(i + 1));
      REQUIRE(diff == expected);
    }
  }
}

TEST_CASE("spot values from the effect matrix") {
  REQUIRE(symbol_effect(Symbol::data(0x3), ChangedPositions::P45) == Symbol::data(0xA));
  REQUIRE(symbol_effect(Symbol::data(0x0), ChangedPositions::P12).cls() == SymbolClass::V);
  REQUIRE(symbol_effect(Symbol::data(0x1), ChangedPositions::P1).cls() == SymbolClass::S);
  auto [a, b] = pair_effect(Symbol::data(0x0), Symbol::data(0x0));
  REQUIRE(a.cls() == SymbolClass::Idle);
  REQUIRE(b == Symbol::data(0x6));
  auto [c, d] = pair_effect(Symbol::data(0x2), Symbol::data(0x4));
  REQUIRE(c == Symbol::data(0x3));
  REQUIRE(d == Symbol::data(0xC));
}

TEST_CASE("effect matrix matches the published table cell for cell") {
  auto m = effect_matrix();
  for (int v = 0; v < 16; ++v) {
    for (int c = 0; c < 6; ++c) {
      std::string got(1, symbol_to_char(m[v][c]));
      REQUIRE(got == std::string(reference::kEffectTable[v][c]));
    }
  }
  // the text notation collapses V/VH; check the VH cells separately
  int vh_cells = 0;
  for (int v = 0; v < 16; ++v)
    for (int c = 0; c < 6; ++c)
      if (m[v][c].cls() == SymbolClass::VH) {
        ++vh_cells;
        bool listed = false;
        for (auto [rv, rc] : reference::kEffectTableVhCells)
          if (rv == v && rc == c) listed = true;
        REQUIRE(listed);
      }
  REQUIRE(vh_cells == reference::kEffectTableVhCells.size());
}

TEST_CASE("error pattern matrix matches the published table") {
  auto m = error_pattern_matrix();
  for (int v = 0; v < 16; ++v) {
    for (int c = 0; c < 6; ++c) {
      auto want = reference::kPatternTable[v][c];
      if (want.empty()) {
        REQUIRE_FALSE(m[v][c].has_value());
      } else {
        REQUIRE(m[v][c].has_value());
        uint8_t bits = 0;
        for (char ch : want) bits = static_cast<uint8_t>((bits << 1) | (ch == '1'));
        REQUIRE(*m[v][c] == bits);
      }
    }
  }
}

TEST_CASE("outcome tabulation reproduces the published counts and percentages") {
  EffectTabulation tab = tabulate_effects();

  REQUIRE(tab.intra_data == 32);
  REQUIRE(tab.intra_j == 3);
  REQUIRE(tab.intra_k == 4);
  REQUIRE(tab.intra_r == 1);
  REQUIRE(tab.intra_s == 2);
  REQUIRE(tab.intra_t == 3);
  REQUIRE(tab.intra_violation == 19);
  uint32_t intra_total = tab.intra_data + tab.intra_j + tab.intra_k + tab.intra_r +
                         tab.intra_s + tab.intra_t + tab.intra_violation;
  REQUIRE(intra_total == 64);

  REQUIRE(tab.inter_data_data == 84);
  REQUIRE(tab.inter_data_t == 14);
  REQUIRE(tab.inter_data_r == 14);
  REQUIRE(tab.inter_data_s == 14);
  REQUIRE(tab.inter_violation == 130);
  REQUIRE(tab.inter_data_data + tab.inter_data_t + tab.inter_data_r + tab.inter_data_s +
              tab.inter_violation == 256);

  for (const auto& row : reference::kIntraStats) {
    uint32_t count = 0;
    if (row.label == "Data") count = tab.intra_data;
    else if (row.label == "J") count = tab.intra_j;
    else if (row.label == "K") count = tab.intra_k;
    else if (row.label == "R") count = tab.intra_r;
    else if (row.label == "S") count = tab.intra_s;
    else if (row.label == "T") count = tab.intra_t;
    else count = tab.intra_violation;
    REQUIRE(count == row.count);
    REQUIRE(std::abs(EffectTabulation::intra_pct(count) - row.percent) < 0.005);
  }
  for (const auto& row : reference::kInterStats) {
    uint32_t count = 0;
    if (row.label == "Data-data") count = tab.inter_data_data;
    else if (row.label == "Data-T") count = tab.inter_data_t;
    else if (row.label == "Data-R") count = tab.inter_data_r;
    else if (row.label == "Data-S") count = tab.inter_data_s;
    else count = tab.inter_violation;
    REQUIRE(count == row.count);
    REQUIRE(std::abs(EffectTabulation::inter_pct(count) - row.percent) < 0.005);
  }

  REQUIRE(std::abs(tab.symbol_violation_pct() - reference::kSymbolViolationPct) < 0.005);
  REQUIRE(std::abs(tab.data_to_data_pct() - reference::kDataToDataPct) < 0.005);
  REQUIRE(std::abs(tab.control_pct() - reference::kControlPct) < 0.005);
  REQUIRE(std::abs(tab.symbol_violation_pct() + tab.data_to_data_pct() +
                   tab.control_pct() - 100.0) < 1e-9);
}

TEST_CASE("error pattern alphabet is exactly the ten published patterns") {
  const auto& pats = error_pattern_alphabet();
  REQUIRE(pats.size() == reference::kPatternStats.size());
  double total_pct = 0;
  for (const auto& want : reference::kPatternStats) {
    bool found = false;
    for (const auto& p : pats) {
      if (p.label() == want.pattern) {
        found = true;
        REQUIRE(p.count == want.count);
        REQUIRE(std::abs(100.0 * p.probability() - want.percent) < 0.005);
      }
    }
    REQUIRE(found);
  }
  for (const auto& p : pats) total_pct += 100.0 * p.probability();
  REQUIRE(std::abs(total_pct - reference::kPatternTotalPct) < 0.005);
}

TEST_CASE("four-bit bound: data outcomes never differ in more than 4 data-bits") {
  for (uint8_t v = 0; v < 16; ++v)
    for (auto p : kAllChangedPositions) {
      Symbol r = symbol_effect(Symbol::data(v), p);
      if (r.is_data()) {
        int w = __builtin_popcount(v ^ r.data_value());
        REQUIRE(w >= 1);
        REQUIRE(w <= 4);
      }
    }
  // every data-data outcome's pattern is one of the ten alphabet members
  const auto& pats = error_pattern_alphabet();
  for (uint8_t a = 0; a < 16; ++a)
    for (uint8_t b = 0; b < 16; ++b) {
      auto [ra, rb] = pair_effect(Symbol::data(a), Symbol::data(b));
      if (ra.is_data() && rb.is_data()) {
        uint16_t bits = static_cast<uint16_t>(((a ^ ra.data_value()) << 4) |
                                              (b ^ rb.data_value()));
        bool in_alphabet = false;
        for (const auto& p : pats)
          if (p.symbol_span == 2 && p.bits == bits) in_alphabet = true;
        REQUIRE(in_alphabet);
      }
    }
}
