#include <doctest.h>

#include "parafact/verify.hpp"

using namespace parafact;

namespace {

VerifyOptions small_options() {
  VerifyOptions o;
  o.bound_2pt = 15;
  o.coprime_d_bound = 1000;
  o.classify_bound = 20;
  o.isometry_box = 100;
  o.markov_max = 200;
  o.product_max = 200;
  o.bound_3pt = 8;
  o.mixed_bound_3pt = 3;
  o.symmetry_depth = 3;
  o.roundtrip_grid = 10;
  o.braid_cases = 50;
  o.cancel_cases = 200;
  o.transpose_cases = 50;
  o.workers = 2;
  return o;
}

}  // namespace

TEST_CASE("reference constants pass every check") {
  const auto report = verify_paper(PaperConstants::reference(), small_options());
  CHECK(report.all_passed());
  CHECK(report.failed_ids().empty());
  REQUIRE(report.checks.size() == check_ids().size());
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    CHECK(report.checks[i].id == check_ids()[i]);
    CHECK_FALSE(report.checks[i].anchor.empty());
    CHECK(report.checks[i].message.empty());
  }
}

TEST_CASE("every constant is read by some check") {
  for (const auto& name : PaperConstants::names()) {
    CHECK_MESSAGE(!checks_using_constant(name).empty(), name);
  }
  CHECK(checks_using_constant("no_such_constant").empty());
}

TEST_CASE("a corrupted constant fails exactly its checks") {
  for (const auto& name : PaperConstants::names()) {
    auto k = PaperConstants::reference();
    k.corrupt(name);
    const auto report = verify_paper(k, small_options());
    CHECK_MESSAGE(report.failed_ids() == checks_using_constant(name), name);
  }
}

TEST_CASE("report JSON") {
  const auto report = verify_paper(PaperConstants::reference(), small_options());
  const Json j = report.to_json();
  CHECK(j["all_passed"] == true);
  REQUIRE(j["checks"].size() == check_ids().size());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("bounds"));
    CHECK(c.contains("witness"));
    CHECK_FALSE(c.contains("seconds"));
  }
  // Timing stays out of the record, so two runs serialize identically.
  CHECK(verify_paper(PaperConstants::reference(), small_options()).to_json().dump() == j.dump());
}

TEST_CASE("witnesses record the bounded searches") {
  const auto report = verify_paper(PaperConstants::reference(), small_options());
  const auto& enumeration = report.checks[1];
  CHECK(enumeration.id == "two-point-enumeration");
  CHECK(enumeration.witness["minus_pairs"] == 0);
  CHECK(enumeration.witness["minus_admissible"] == 0);
  CHECK(enumeration.bounds["coprime_d_box"] == 1000);
  const auto& minus = report.checks[8];
  CHECK(minus.id == "three-point-negative-sign");
  CHECK(minus.witness["minus_triples"] == 0);
  CHECK(minus.witness["plus_triples"].get<int>() > 0);
}
