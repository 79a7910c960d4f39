#include <gtest/gtest.h>

#include "omplab/catalog.hpp"
#include "omplab/iop.hpp"
#include "omplab/report_json.hpp"

using namespace omplab;

TEST(ReportJson, RoundTripsAFailingReport) {
  const OrthoPoset h = make_hexagon();
  const ModelReport r = validate_omp(h);
  ASSERT_FALSE(r.pass());
  const Json j = report_to_json(r, h.names());
  EXPECT_EQ(report_from_json(j), r);
  EXPECT_EQ(report_from_json(Json::parse(j.dump())), r);
  EXPECT_FALSE(j["pass"].get<bool>());
}

TEST(ReportJson, ElementsCarryNames) {
  const OrthoPoset h = make_hexagon();
  const Json j = report_to_json(validate_omp(h), h.names());
  const Json& w = j["items"].back()["witness"];
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0]["name"], "a");
  EXPECT_EQ(w[1]["name"], "b");
}

TEST(ReportJson, KeyOrderIsFixed) {
  ModelReport r{"demo", {}};
  auto& i = r.add("x");
  i.fail({1}, "bad");
  i.values.push_back(NamedSet{"s", ElementSet{0, 2}});
  i.line = 7;
  i.checked = 3;
  EXPECT_EQ(report_to_json(r).dump(),
            R"({"check":"demo","pass":false,"items":[{"label":"x","pass":false,"witness":[{"index":1}],)"
            R"("values":[{"label":"s","members":[{"index":0},{"index":2}]}],"message":"bad","line":7,"checked":3}]})");
}

TEST(ReportJson, OutputIsByteStable) {
  for (const auto& e : catalog()) {
    if (!e.is_omp) continue;
    const auto a = report_to_json(check_axioms(implication_table(e.structure)).to_report()).dump(2);
    const auto b = report_to_json(check_axioms(implication_table(e.structure)).to_report()).dump(2);
    EXPECT_EQ(a, b);
  }
}

TEST(ReportJson, MalformedInputIsAParseError) {
  EXPECT_THROW(report_from_json(Json::parse(R"({"check":"x"})")), ParseError);
  EXPECT_THROW(report_from_json(Json::parse(R"({"check":"x","items":[{"label":1}]})")), ParseError);
}
