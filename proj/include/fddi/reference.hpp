#pragma once

// Published reference data for the FDDI coding chain and the IEEE-802 FCS
// polynomial, transcribed for golden-value tests and the verify subcommands.
// The generators in this library are the runtime source of truth; these
// transcripts exist so that regressions in either direction are caught.

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

namespace fddi::reference {

// Effect of noise on a data symbol: resulting symbol per (symbol, changed
// bit positions 1 / 1,2 / 2,3 / 3,4 / 4,5 / 5), in text notation.
inline constexpr std::array<std::array<std::string_view, 6>, 16> kEffectTable = {{
    {"6", "V", "8", "J", "F", "I"},
    {"S", "K", "V", "7", "4", "V"},   // trailing V is the halt-like group 01000
    {"H", "V", "J", "8", "B", "3"},
    {"V", "T", "S", "9", "A", "2"},
    {"C", "8", "V", "V", "1", "5"},
    {"D", "9", "R", "T", "V", "4"},
    {"0", "A", "V", "V", "T", "7"},
    {"I", "B", "V", "1", "V", "6"},
    {"V", "4", "0", "2", "K", "9"},
    {"V", "5", "I", "3", "V", "8"},
    {"V", "6", "C", "V", "3", "B"},
    {"R", "7", "D", "K", "2", "A"},
    {"4", "V", "A", "E", "S", "D"},
    {"5", "V", "B", "F", "J", "C"},
    {"V", "H", "V", "C", "I", "F"},
    {"T", "V", "K", "D", "0", "E"},
}};

// Which of the kEffectTable violation cells decode specifically as VH
// (the halt-like invalid groups). Pairs of (symbol value, column index).
inline constexpr std::array<std::pair<int, int>, 9> kEffectTableVhCells = {{
    {0x1, 5}, {0x5, 4}, {0x6, 2}, {0x6, 3}, {0x8, 0},
    {0x9, 4}, {0xA, 3}, {0xC, 1}, {0xE, 2},
}};

// Outcome statistics. Counts of resulting symbols; intrasymbol percentages
// are count/80, intersymbol count/1280.
struct OutcomeStat {
  std::string_view label;
  uint32_t count;
  double percent;
};
inline constexpr std::array<OutcomeStat, 7> kIntraStats = {{
    {"Data", 32, 40.00}, {"J", 3, 3.75}, {"K", 4, 5.00}, {"R", 1, 1.25},
    {"S", 2, 2.50}, {"T", 3, 3.75}, {"H, I, V, VH", 19, 23.75},
}};
inline constexpr std::array<OutcomeStat, 5> kInterStats = {{
    {"Data-data", 84, 6.56}, {"Data-T", 14, 1.09}, {"Data-R", 14, 1.09},
    {"Data-S", 14, 1.09}, {"At least one H, I, V, VH", 130, 10.16},
}};
inline constexpr double kSymbolViolationPct = 33.91;
inline constexpr double kDataToDataPct = 46.56;
inline constexpr double kControlPct = 19.53;

// Data error pattern matrix: pattern per (symbol, changed positions), empty
// where the outcome is a nondata symbol.
inline constexpr std::array<std::array<std::string_view, 6>, 16> kPatternTable = {{
    {"0110", "", "1000", "", "1111", ""},
    {"", "", "", "0110", "0101", ""},
    {"", "", "", "1010", "1001", "0001"},
    {"", "", "", "1010", "1001", "0001"},
    {"1000", "1100", "", "", "0101", "0001"},
    {"1000", "1100", "", "", "", "0001"},
    {"0110", "1100", "", "", "", "0001"},
    {"", "1100", "", "0110", "", "0001"},
    {"", "1100", "1000", "1010", "", "0001"},
    {"", "1100", "", "1010", "", "0001"},
    {"", "1100", "0110", "", "1001", "0001"},
    {"", "1100", "0110", "", "1001", "0001"},
    {"1000", "", "0110", "0010", "", "0001"},
    {"1000", "", "0110", "0010", "", "0001"},
    {"", "", "", "0010", "", "0001"},
    {"", "", "", "0010", "1111", "0001"},
}};

// Frequency of data error patterns.
struct PatternStat {
  std::string_view pattern;
  uint32_t count;
  double percent;
};
inline constexpr std::array<PatternStat, 10> kPatternStats = {{
    {"0010", 4, 5.00}, {"0101", 2, 2.50}, {"0110", 6, 7.50}, {"1000", 2, 2.50},
    {"1001", 4, 5.00}, {"1010", 4, 5.00}, {"1100", 8, 10.00}, {"1111", 2, 2.50},
    {"0001-0110", 28, 2.19}, {"0001-1000", 56, 4.38},
}};
inline constexpr double kPatternTotalPct = 46.56;

// Minimum-degree multiples of the FCS polynomial per Hamming weight.
struct FcsMultiple {
  int weight;
  std::vector<uint64_t> exponents;
};
inline const std::vector<FcsMultiple>& fcs_multiples() {
  static const std::vector<FcsMultiple> rows = {
      {3, {0, 41678, 91639}},
      {4, {0, 2215, 2866, 3006}},
      {5, {0, 89, 117, 155, 300}},
      {6, {0, 79, 85, 123, 186, 203}},
      {7, {0, 45, 53, 74, 80, 120, 123}},
      {8, {0, 5, 13, 16, 36, 41, 88, 89}},
      {9, {0, 2, 3, 18, 19, 32, 37, 57, 66}},
      {10, {0, 3, 7, 25, 27, 30, 33, 36, 38, 53}},
      {11, {0, 5, 7, 16, 31, 32, 35, 37, 41, 43, 44}},
      {12, {0, 3, 5, 7, 8, 13, 18, 21, 24, 26, 30, 42}},
      {13, {0, 1, 6, 15, 18, 20, 23, 29, 33, 35, 37, 40, 42}},
  };
  return rows;
}

// Max frame size (in data bits) at which the code still has Hamming
// distance > weight; equals the degree of the minimum-degree multiple.
inline constexpr std::array<std::pair<int, uint64_t>, 11> kHammingDistanceLimits = {{
    {3, 91639}, {4, 3006}, {5, 300}, {6, 203}, {7, 123}, {8, 89},
    {9, 66}, {10, 53}, {11, 44}, {12, 42}, {13, 42},
}};

// Complete list of three-noise-event combinations not detected by the FCS:
// error patterns at symbol positions (i, i+o2, i+o3), with the probability
// printed for the large-ring configuration.
struct UndetectedTriple {
  std::array<std::string_view, 3> patterns;
  std::array<uint32_t, 3> offsets;
  double probability_large_ring;
};
inline constexpr std::array<UndetectedTriple, 10> kUndetectedTriples = {{
    {{"1010", "1111", "0010"}, {0, 625, 3605}, 3.29e-25},
    {{"1000", "1001", "0010"}, {0, 1366, 6398}, 1.58e-25},
    {{"1001", "1001", "1000"}, {0, 1630, 5509}, 2.12e-25},
    {{"1111", "1001", "0101"}, {0, 1835, 8404}, 1.79e-26},
    {{"0010", "1111", "1000"}, {0, 1947, 3096}, 1.80e-25},
    {{"1100", "0001-0110", "0110"}, {0, 2239, 3289}, 9.14e-25},
    {{"0101", "0001-1000", "0110"}, {0, 3881, 5609}, 2.71e-25},
    {{"1100", "0010", "1000"}, {0, 3882, 5609}, 4.13e-25},
    {{"0001-1000", "1111", "0001-0110"}, {0, 4209, 8972}, 3.98e-28},
    {{"1001", "0110", "0101"}, {0, 6092, 6340}, 2.43e-25},
}};
inline constexpr double kUndetectedTriplesTotal = 2.74e-24;

// Maximum frame size vs number of noise events all detected by the FCS.
struct FrameSizeLimit {
  int events;
  uint32_t data_symbols;
  uint32_t total_symbols;
  uint32_t octets;
};
inline constexpr std::array<FrameSizeLimit, 3> kFrameSizeLimits = {{
    {3, 3096, 3106, 1553},
    {4, 434, 444, 222},
    {5, 30, 40, 20},
}};

// -------------------------------------------------------------------------
// Summary-of-error-rates grid: published values for the four parameter
// columns (large ring; BER=2.5E-11; 100 links; 450-octet frames).
// ulp = one unit in the last printed digit. Two cells in the option-A row
// are internally inconsistent with their own formula (published-value
// arithmetic slip of ~1%); they are flagged and compared at 1% instead.
// -------------------------------------------------------------------------
struct SummaryCell {
  double value;   // as printed; 0 = exact zero, inf = infinity
  double ulp;     // comparison granularity at the printed precision
  bool known_misprint = false;
};
struct SummaryRow {
  std::string_view quantity;
  std::string_view unit;  // "", "ms", "s", "yr"
  std::array<SummaryCell, 4> cells;
};

inline const std::vector<SummaryRow>& summary_grid() {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  static const std::vector<SummaryRow> rows = {
      {"P(Frame error)", "",
       {{{1.13e-2, 1e-4}, {1.13e-3, 1e-5}, {1.13e-3, 1e-5}, {1.13e-3, 1e-5}}}},
      {"M(Frame error)", "ms", {{{32, 1}, {320, 1}, {320, 1}, {32, 1}}}},
      {"P(Token loss per rotation)", "",
       {{{7.75e-6, 1e-8}, {7.75e-7, 1e-9}, {7.75e-7, 1e-9}, {7.75e-6, 1e-8}}}},
      {"M(Token loss on an idle ring)", "s",
       {{{229, 1}, {2288, 1}, {229, 1}, {229, 1}}}},
      {"P(FCS not detecting 3 noise events)", "",
       {{{2.74e-24, 1e-26}, {2.74e-27, 1e-29}, {2.74e-25, 1e-27}, {0, 0}}}},
      {"M(FCS not detecting 3 noise events)", "yr",
       {{{4.17e12, 1e10}, {4.17e15, 1e13}, {4.17e13, 1e11}, {kInf, 0}}}},
      {"P(FCS not detecting 4 noise events)", "",
       {{{3.64e-30, 1e-32}, {3.64e-34, 1e-36}, {3.64e-31, 1e-33}, {3.49e-34, 1e-36}}}},
      {"M(FCS not detecting 4 noise events)", "yr",
       {{{3.14e18, 1e16}, {3.14e22, 1e20}, {3.14e19, 1e17}, {3.27e21, 1e19}}}},
      {"P(UE due to false ED)", "",
       {{{4.93e-25, 1e-27}, {4.93e-27, 1e-29}, {4.93e-26, 1e-28}, {4.75e-26, 1e-28}}}},
      {"M(UE due to false ED)", "yr",
       {{{2.31e13, 1e11}, {2.31e15, 1e13}, {2.31e14, 1e12}, {2.40e13, 1e11}}}},
      {"P(UE due to false SD)", "",
       {{{1.53e-24, 1e-26}, {1.53e-26, 1e-28}, {1.53e-25, 1e-27}, {1.47e-25, 1e-27}}}},
      {"M(UE due to false SD)", "yr",
       {{{7.47e12, 1e10}, {7.47e14, 1e12}, {7.47e13, 1e11}, {7.75e12, 1e10}}}},
      // without the enhanced E indicator handling rules
      {"P(UE due to false ED) [baseline]", "",
       {{{3.16e-14, 1e-16}, {3.16e-15, 1e-17}, {3.16e-15, 1e-17}, {3.04e-15, 1e-17}}}},
      {"M(UE due to false ED) [baseline]", "yr",
       {{{362, 1}, {3616, 1}, {3616, 1}, {375, 1}}}},
      {"P(FCS not detecting 3 noise events) [baseline]", "",
       {{{1.37e-18, 1e-20}, {1.37e-21, 1e-23}, {1.37e-21, 1e-23}, {0, 0}}}},
      {"M(FCS not detecting 3 noise events) [baseline]", "yr",
       {{{8.34e6, 1e4}, {8.34e9, 1e7}, {8.34e9, 1e7}, {kInf, 0}}}},
      {"P(FCS not detecting 4 noise events) [baseline]", "",
       {{{1.45e-21, 1e-23}, {1.45e-25, 1e-27}, {1.45e-25, 1e-27}, {1.40e-25, 1e-27}}}},
      {"M(FCS not detecting 4 noise events) [baseline]", "yr",
       {{{7.85e9, 1e7}, {7.85e13, 1e11}, {7.85e13, 1e11}, {8.17e12, 1e10}}}},
      // with the optional A indicator handling rule
      {"P(UE due to false ED) [option A]", "",
       {{{2.32e-35, 1e-37},
         {2.32e-38, 1e-40},
         {2.32e-36, 1e-38},
         {2.30e-36, 1e-38, true}}}},
      {"M(UE due to false ED) [option A]", "yr",
       {{{4.92e23, 1e21},
         {4.92e26, 1e24},
         {4.92e24, 1e22},
         {4.97e23, 1e21, true}}}},
  };
  return rows;
}

// Column parameter sets for the summary grid. Ring latency scales with the
// link count (the published 100-link column is only consistent with that).
struct SummaryColumn {
  std::string_view label;
  double ber;
  double links;
  double frame_code_bits;
  double latency_s;
};
inline constexpr std::array<SummaryColumn, 4> kSummaryColumns = {{
    {"Large ring", 2.5e-10, 1000, 45000, 1.773e-3},
    {"BER=2.5E-11", 2.5e-11, 1000, 45000, 1.773e-3},
    {"100 links", 2.5e-10, 100, 45000, 1.773e-4},
    {"450-octet frames", 2.5e-10, 1000, 4500, 1.773e-3},
}};

}  // namespace fddi::reference
