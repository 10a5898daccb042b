#include <doctest.h>

#include <json.hpp>

#include "cuspforms/report.hpp"

using namespace cuspforms;

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("ab") != fnv1a64("ba"));
}

TEST_CASE("report digest depends only on kind and parameters") {
  ScanReport a;
  a.kind = "lehmer-scan";
  a.parameters = {{"weight", "12"}, {"limit", "100000"}};
  a.counters["primes"] = 9592;
  a.wall_seconds = 1.25;
  finalize_digest(a);

  ScanReport b;
  b.kind = "lehmer-scan";
  b.parameters = {{"limit", "100000"}, {"weight", "12"}};
  b.wall_seconds = 99.0;
  b.counters["primes"] = 1;
  finalize_digest(b);

  CHECK(a.input_digest == b.input_digest);

  ScanReport c = a;
  c.kind = "residue-density";
  finalize_digest(c);
  CHECK(c.input_digest != a.input_digest);

  ScanReport d = a;
  d.parameters["limit"] = "100001";
  finalize_digest(d);
  CHECK(d.input_digest != a.input_digest);
}

TEST_CASE("render_json emits sorted keys and parses back") {
  ScanReport report;
  report.kind = "sign-stats";
  report.parameters = {{"weight", "12"}, {"x", "7"}};
  report.counters = {{"positive", 2}, {"negative", 2}};
  report.annotations["expected"] = "1.000000";
  report.witnesses.push_back({{"p", "2"}, {"value", "-24"}});
  report.wall_seconds = 0.5;
  finalize_digest(report);

  std::string text = render_json(report);
  auto doc = nlohmann::json::parse(text);
  CHECK(doc["kind"] == "sign-stats");
  CHECK(doc["parameters"]["weight"] == "12");
  CHECK(doc["counters"]["positive"] == 2);
  CHECK(doc["witnesses"][0]["value"] == "-24");
  CHECK(doc["wall_seconds"] == 0.5);
  CHECK(doc.contains("tool_version"));
  CHECK(doc["input_digest"].get<std::string>().size() == 16);

  CHECK(text.find("\"annotations\"") < text.find("\"counters\""));
  CHECK(text.find("\"counters\"") < text.find("\"kind\""));
}

TEST_CASE("render_json without timing is a pure function of content") {
  ScanReport a;
  a.kind = "value-set-count";
  a.parameters["x"] = "8";
  a.counters["distinct"] = 8;
  finalize_digest(a);
  a.wall_seconds = 0.1;

  ScanReport b = a;
  b.wall_seconds = 7.9;

  CHECK(render_json(a, false) == render_json(b, false));
  CHECK(render_json(a, true) != render_json(b, true));
  CHECK(render_json(a, false).find("wall_seconds") == std::string::npos);
}

TEST_CASE("decimal6 rounds exactly, ties away from zero") {
  CHECK(decimal6(Rat(0)) == "0.000000");
  CHECK(decimal6(Rat(2)) == "2.000000");
  CHECK(decimal6(Rat(1, 3)) == "0.333333");
  CHECK(decimal6(Rat(1, 6)) == "0.166667");
  CHECK(decimal6(Rat(-1, 2)) == "-0.500000");
  CHECK(decimal6(Rat(1, 2'000'000)) == "0.000001");
  CHECK(decimal6(Rat(-1, 2'000'000)) == "-0.000001");
  CHECK(decimal6(Rat(1, 3'000'000)) == "0.000000");
  CHECK(decimal6(Rat(-1, 1'000'000'000)) == "0.000000");
  CHECK(decimal6(Rat(1229, 9592)) == "0.128128");
  CHECK(decimal6(Rat(-1472, 1)) == "-1472.000000");
}

TEST_CASE("stopwatch reports nonnegative elapsed time") {
  Stopwatch watch;
  CHECK(watch.seconds() >= 0.0);
}
