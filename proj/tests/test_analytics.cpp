#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fddi/analytics.hpp"
#include "fddi/reference.hpp"

using namespace fddi;

namespace {

RingParams large() { return RingParams::large_ring(); }

// printed-precision match: within half a unit of the last printed digit
// (0.51 to absorb the round-half-up cases), either exact or first-order form
bool matches_cell(const SummaryEntry& e, const reference::SummaryCell& cell) {
  double exact = e.display_value(false);
  double fo = e.display_value(true);
  if (std::isinf(cell.value)) return std::isinf(exact);
  if (cell.value == 0) return exact == 0;
  if (cell.known_misprint) {
    return std::abs(fo - cell.value) / cell.value < 0.011 ||
           std::abs(exact - cell.value) / cell.value < 0.011;
  }
  double tol = 0.51 * cell.ulp;
  return std::abs(exact - cell.value) <= tol || std::abs(fo - cell.value) <= tol;
}

}  // namespace

TEST_CASE("frame error rate on the large ring") {
  RateReport r = frame_error(large());
  REQUIRE_THAT(r.probability_first_order, Catch::Matchers::WithinRel(1.125025e-2, 1e-6));
  REQUIRE_THAT(r.probability, Catch::Matchers::WithinRel(1.11870e-2, 1e-4));
  REQUIRE_THAT(r.mean_time_first_order_s, Catch::Matchers::WithinRel(0.032, 1e-9));
  REQUIRE_THAT(r.mean_time_s, Catch::Matchers::WithinAbs(0.0322, 1e-4));
}

TEST_CASE("frame error at BER 2.5E-11") {
  RingParams p = large();
  p.p = 2.5e-11;
  RateReport r = frame_error(p);
  REQUIRE_THAT(r.probability, Catch::Matchers::WithinRel(1.125e-3, 1e-3));
  REQUIRE_THAT(r.mean_time_s * 1e3, Catch::Matchers::WithinAbs(320.0, 0.51));
}

TEST_CASE("frame error vanishes at p=0") {
  RingParams p = large();
  p.p = 0;
  RateReport r = frame_error(p);
  REQUIRE(r.probability == 0.0);
  REQUIRE(std::isinf(r.mean_time_s));
}

TEST_CASE("token loss rate") {
  RateReport r = token_loss(large());
  REQUIRE_THAT(r.probability, Catch::Matchers::WithinRel(7.75e-6, 1e-4));
  REQUIRE_THAT(r.mean_time_s, Catch::Matchers::WithinAbs(229.0, 0.51));

  RingParams low = large();
  low.p = 2.5e-11;
  r = token_loss(low);
  REQUIRE_THAT(r.probability, Catch::Matchers::WithinRel(7.75e-7, 1e-4));
  REQUIRE_THAT(r.mean_time_s, Catch::Matchers::WithinAbs(2288.0, 0.51));

  RingParams zero = large();
  zero.p = 0;
  REQUIRE(token_loss(zero).probability == 0.0);
}

TEST_CASE("undetected errors from a false ending delimiter") {
  RateReport enh = ue_false_ed(large(), ValidityRules::enhanced);
  REQUIRE_THAT(enh.probability, Catch::Matchers::WithinRel(4.93e-25, 1e-3));
  REQUIRE_THAT(enh.mean_time_years(), Catch::Matchers::WithinRel(2.31e13, 5e-3));

  RateReport base = ue_false_ed(large(), ValidityRules::baseline);
  REQUIRE_THAT(base.probability, Catch::Matchers::WithinRel(3.16e-14, 2e-3));
  REQUIRE_THAT(base.mean_time_years(), Catch::Matchers::WithinAbs(362.0, 0.51));

  RateReport opta = ue_false_ed(large(), ValidityRules::option_a);
  REQUIRE_THAT(opta.probability, Catch::Matchers::WithinRel(2.32e-35, 5e-3));
  REQUIRE_THAT(opta.mean_time_first_order_s / kSecondsPerYear,
               Catch::Matchers::WithinRel(4.92e23, 1e-3));
}

TEST_CASE("undetected errors from a false starting delimiter") {
  RateReport r = ue_false_sd(large());
  REQUIRE_THAT(r.probability, Catch::Matchers::WithinRel(1.53e-24, 1e-3));
  REQUIRE_THAT(r.mean_time_years(), Catch::Matchers::WithinRel(7.47e12, 1e-3));

  RingParams small = RingParams::with(1000, 2.5e-10, 450);
  RateReport rs = ue_false_sd(small);
  REQUIRE_THAT(rs.probability, Catch::Matchers::WithinRel(1.47e-25, 5e-3));

  RingParams zero = large();
  zero.p = 0;
  REQUIRE(ue_false_sd(zero).probability == 0.0);
}

TEST_CASE("undetected errors escaping the fcs") {
  RateReport k3 = ue_fcs(large(), 3, true);
  REQUIRE_THAT(k3.probability, Catch::Matchers::WithinRel(2.74e-24, 2e-3));
  RateReport k4 = ue_fcs(large(), 4, true);
  REQUIRE_THAT(k4.probability, Catch::Matchers::WithinRel(3.64e-30, 2e-3));

  // the FCS catches all three events on frames of 1553 octets or shorter
  RingParams short_frames = RingParams::with(1000, 2.5e-10, 1553);
  REQUIRE(ue_fcs(short_frames, 3, true).probability == 0.0);
  RingParams shorter = RingParams::with(1000, 2.5e-10, 450);
  REQUIRE(ue_fcs(shorter, 3, true).probability == 0.0);
  RingParams just_over = RingParams::with(1000, 2.5e-10, 1554);
  REQUIRE(ue_fcs(just_over, 3, true).probability > 0.0);

  // baseline rules lose the single-link guarantee
  RateReport b3 = ue_fcs(large(), 3, false);
  REQUIRE_THAT(b3.probability, Catch::Matchers::WithinRel(1.37e-18, 3e-3));
  RateReport b4 = ue_fcs(large(), 4, false);
  REQUIRE_THAT(b4.probability, Catch::Matchers::WithinRel(1.45e-21, 5e-3));
}

TEST_CASE("per-row triple contributions match the published probabilities within 2%") {
  auto rows = ue_fcs3_rows(large());
  REQUIRE(rows.size() == reference::kUndetectedTriples.size());
  double total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    total += rows[i].probability;
    REQUIRE_THAT(rows[i].probability,
                 Catch::Matchers::WithinRel(
                     reference::kUndetectedTriples[i].probability_large_ring, 0.02));
  }
  REQUIRE_THAT(total, Catch::Matchers::WithinRel(reference::kUndetectedTriplesTotal, 0.02));
}

TEST_CASE("merged frame probability") {
  REQUIRE_THAT(merged_frame_prob(), Catch::Matchers::WithinRel(2.33e-10, 2e-3));
  REQUIRE(1.0 / merged_frame_prob() == 4294967296.0);
  // the published "one in 4.34 billion" rounds 2^32 loosely
  REQUIRE_THAT(1.0 / merged_frame_prob(), Catch::Matchers::WithinRel(4.34e9, 1.1e-2));
}

TEST_CASE("every summary grid cell reproduces at printed precision") {
  const auto& rows = reference::summary_grid();
  for (std::size_t col = 0; col < reference::kSummaryColumns.size(); ++col) {
    const auto& c = reference::kSummaryColumns[col];
    RingParams params;
    params.links = c.links;
    params.p = c.ber;
    params.frame_code_bits = c.frame_code_bits;
    params.latency_s = c.latency_s;
    auto entries = summary_rates(params);
    REQUIRE(entries.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CAPTURE(col, rows[i].quantity, rows[i].cells[col].value,
              entries[i].display_value(false), entries[i].display_value(true));
      REQUIRE(matches_cell(entries[i], rows[i].cells[col]));
    }
  }
}

TEST_CASE("exact and first-order forms agree within 1% when pLF < 1E-3") {
  for (double p : {1e-12, 1e-11}) {
    for (double links : {10.0, 100.0}) {
      RingParams r;
      r.links = links;
      r.p = p;
      r.frame_code_bits = 45000;
      r.latency_s = 1.773e-3;
      REQUIRE(r.p * r.links * r.frame_code_bits < 1e-3);
      auto fe = frame_error(r);
      REQUIRE_THAT(fe.probability,
                   Catch::Matchers::WithinRel(fe.probability_first_order, 0.01));
      auto tl = token_loss(r);
      REQUIRE_THAT(tl.probability,
                   Catch::Matchers::WithinRel(tl.probability_first_order, 0.01));
    }
  }
}

TEST_CASE("probabilities are nondecreasing in p, L and F") {
  auto value = [](double p, double links, double F, auto&& fn) {
    RingParams r;
    r.p = p;
    r.links = links;
    r.frame_code_bits = F;
    r.latency_s = 1.773e-3 * links / 1000;
    return fn(r);
  };
  auto for_each_quantity = [&](auto&& fn) {
    fn([](const RingParams& r) { return frame_error(r).probability; });
    fn([](const RingParams& r) { return token_loss(r).probability; });
    fn([](const RingParams& r) { return ue_fcs(r, 3, true).probability; });
    fn([](const RingParams& r) { return ue_fcs(r, 4, true).probability; });
    fn([](const RingParams& r) {
      return ue_false_ed(r, ValidityRules::enhanced).probability;
    });
    fn([](const RingParams& r) { return ue_false_sd(r).probability; });
  };
  for_each_quantity([&](auto&& q) {
    double base = value(1e-10, 500, 30000, q);
    REQUIRE(value(2e-10, 500, 30000, q) >= base);
    REQUIRE(value(1e-10, 800, 30000, q) >= base);
    REQUIRE(value(1e-10, 500, 42000, q) >= base);
  });
}

TEST_CASE("ring parameter validation") {
  RingParams r;
  r.links = 0;
  REQUIRE_THROWS_AS(frame_error(r), InvalidRingParams);
  r = RingParams{};
  r.frame_code_bits = 100;
  REQUIRE_THROWS_AS(frame_error(r), InvalidRingParams);
  r = RingParams{};
  r.p = 0.5;
  REQUIRE_THROWS_AS(frame_error(r), InvalidRingParams);
  REQUIRE(RingParams::large_ring().small_probability_regime());
}
