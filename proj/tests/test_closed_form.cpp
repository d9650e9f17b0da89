#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qr/closed_form.hpp"
#include "qr/io.hpp"

using namespace qr;

TEST_CASE("spot values") {
  CHECK(std::abs(cf::eq9_gghz_tdtc(0.5) - 1.0) < 1e-15);
  CHECK(std::abs(cf::eq9_gghz_tdtc(0.3) - (2.0 / 3 + 4.0 / 3 * 0.21)) < 1e-15);
  CHECK(std::abs(cf::eq12_gw_tdtc(1.0 / 3, 1.0 / 3) - 8.0 / 9.0) < 1e-15);
  CHECK(std::abs(cf::eq23_gw_single(1.0 / 3, 1.0 / 3) - 22.0 / 27.0) < 1e-15);
  // advantage at the W point: (8/9 - 22/27)/(22/27) = 1/11
  CHECK(std::abs(cf::advantage_percent(1.0 / 3, 1.0 / 3) - 100.0 / 11.0) <
        1e-12);
  CHECK(std::abs(cf::fmax_gw_single(0.2, 0.3) -
                 (2.0 / 3 + 2.0 / 3 * std::sqrt(0.15))) < 1e-15);
}

TEST_CASE("flip-channel cells are symmetric under p <-> 1-p") {
  for (const double p : {0.1, 0.25, 0.4}) {
    CHECK(std::abs(cf::table3_multipath(NoiseModel::PhaseFlip, 0.3, p) -
                   cf::table3_multipath(NoiseModel::PhaseFlip, 0.3, 1 - p)) <
          1e-15);
    CHECK(std::abs(cf::table4_multipath(NoiseModel::BitFlip, 0.2, 0.3, p) -
                   cf::table4_multipath(NoiseModel::BitFlip, 0.2, 0.3, 1 - p)) <
          1e-15);
    CHECK(std::abs(cf::table4_single(NoiseModel::PhaseFlip, 0.2, 0.3, p) -
                   cf::table4_single(NoiseModel::PhaseFlip, 0.2, 0.3, 1 - p)) <
          1e-15);
  }
}

TEST_CASE("noise-free limits reduce to the noiseless formulas") {
  for (const auto n : {NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping})
    CHECK(std::abs(cf::table3_multipath(n, 0.3, 0.0) - cf::eq9_gghz_tdtc(0.3)) <
          1e-15);
  for (const auto n : {NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping})
    CHECK(std::abs(cf::table4_multipath(n, 0.2, 0.3, 0.0) -
                   cf::eq12_gw_tdtc(0.2, 0.3)) < 1e-15);
  for (const auto n : {NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping})
    CHECK(std::abs(cf::table4_single(n, 0.2, 0.3, 0.0) -
                   cf::eq23_gw_single(0.2, 0.3)) < 1e-15);
}

TEST_CASE("multi-block reductions") {
  CHECK(std::abs(cf::eq26_gghz_mblock(0.3, 1) - cf::eq9_gghz_tdtc(0.3)) <
        1e-15);
  CHECK(std::abs(cf::eq28_gw_mblock(0.2, 0.3, 1) - cf::eq12_gw_tdtc(0.2, 0.3)) <
        1e-15);
  // the corrected Eq. 29 reduces to Eq. 23 at m=1; the printed one does not
  CHECK(std::abs(cf::eq29_gw_single_mblock(0.2, 0.3, 1) -
                 cf::eq23_gw_single(0.2, 0.3)) < 1e-15);
  CHECK(std::abs(cf::eq29_gw_single_mblock_printed(0.2, 0.3, 1) -
                 cf::eq23_gw_single(0.2, 0.3)) > 1e-3);
  for (int m = 1; m <= 8; ++m)
    CHECK(cf::eq27_gghz_single_mblock(0.4, m) == cf::eq26_gghz_mblock(0.4, m));
}

TEST_CASE("garbled Table III cell: literal vs reconciled") {
  // the reconciled single-path bit-flip value is p-independent
  CHECK(std::abs(cf::table3_single(NoiseModel::BitFlip, 0.3, 0.1) -
                 cf::table3_single(NoiseModel::BitFlip, 0.3, 0.9)) < 1e-15);
  // the literal transcription is p-dependent (and not reproduced by any run)
  CHECK(std::abs(cf::table3_single_bitflip_literal(0.3, 0.1) -
                 cf::table3_single_bitflip_literal(0.3, 0.9)) > 1e-3);
}

TEST_CASE("serialization helpers") {
  CHECK(io::fmt(2.0 / 3.0) == "0.666666666666667");
  CHECK(io::fmt(2.0 / 3.0, 6) == "0.666667");
  // FNV-1a reference vector
  CHECK(io::content_hash("") == "cbf29ce484222325");
  CHECK(io::content_hash("a") == "af63dc4c8601ec8c");
  io::Table t;
  t.config = {{"seed", "7"}};
  t.columns = {"x"};
  t.rows = {{"1"}};
  CHECK(io::to_csv(t) == io::to_csv(t));
  CHECK(io::to_json(t) == io::to_json(t));
  CHECK(io::to_csv(t).find("content_hash") != std::string::npos);
  CHECK(io::to_csv(t).find("seed=7") != std::string::npos);
}
