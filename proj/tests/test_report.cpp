#include "doctest.h"

#include "hbstrata/report.hpp"

using namespace hbstrata;

namespace {

ClassFactor h6() {
  ClassFactor h;
  h.value = 6;
  h.computed = true;
  h.integral = true;
  return h;
}

}  // namespace

TEST_CASE("json round trips") {
  SUBCASE("types") {
    TypesReport rep =
        build_types_report(RamificationProfile({2, 2}), TypeFilter::All);
    Json j = to_json(rep);
    CHECK(types_report_from_json(Json::parse(j.dump())) == rep);
    CHECK(j.at("schema_version") == kSchemaVersion);
  }
  SUBCASE("components") {
    ComponentsReport rep = build_components_report(5, {0, 2});
    Json j = to_json(rep);
    CHECK(components_report_from_json(Json::parse(j.dump())) == rep);
  }
  SUBCASE("count") {
    CountReport rep = build_count_report(RamificationProfile({2}), h6(), 3, 3);
    Json j = to_json(rep);
    CHECK(count_report_from_json(Json::parse(j.dump())) == rep);
    // rationals are {"num","den"} string pairs
    CHECK(j.at("supersingular_component_count").at("num") == "12");
    CHECK(j.at("supersingular_component_count").at("den") == "1");
  }
  SUBCASE("verify") {
    VerifyReport rep;
    rep.seed = 42;
    SuiteResult s;
    s.name = "demo";
    s.checks = 3;
    s.failures = 1;
    s.notes = {"first failure"};
    rep.suites.push_back(s);
    Json j = to_json(rep);
    CHECK(verify_report_from_json(Json::parse(j.dump())) == rep);
    CHECK(j.at("status") == "fail");
  }
}

TEST_CASE("fixed keys stay in order") {
  CountReport rep = build_count_report(RamificationProfile({2}), h6(), 3, 3);
  std::string dump = to_json(rep).dump();
  size_t schema = dump.find("schema_version");
  size_t command = dump.find("command");
  size_t profile = dump.find("profile");
  size_t total = dump.find("total_components");
  CHECK(schema < command);
  CHECK(command < profile);
  CHECK(profile < total);
}

TEST_CASE("rendering is deterministic") {
  CountReport rep = build_count_report(RamificationProfile({2}), h6(), 3, 3);
  for (OutputFormat fmt :
       {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv})
    CHECK(render(rep, fmt) == render(rep, fmt));
  CHECK(render(rep, OutputFormat::Text).find("total irreducible components: 14") !=
        std::string::npos);
  CHECK(render(rep, OutputFormat::Csv).find("total_components,14") !=
        std::string::npos);
}

TEST_CASE("format parsing") {
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("text") == OutputFormat::Text);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("types report content") {
  TypesReport rep =
      build_types_report(RamificationProfile({4}), TypeFilter::Generic);
  CHECK(rep.rows.size() == 7);
  for (const TypeRow& row : rep.rows) {
    CHECK(row.generic);
    CHECK(row.w > 0);
    CHECK(row.lambda.size() == 1);
    CHECK(row.lambda[0].lambda == row.size);
  }
  TypesReport ss =
      build_types_report(RamificationProfile({2, 2}), TypeFilter::GenericSupersingular);
  CHECK(ss.rows.size() == 4);
  for (const TypeRow& row : ss.rows) {
    CHECK(row.supersingular);
    CHECK(row.slope[0].j == Rational(1));  // f/2 on each block of length 2
  }
}
