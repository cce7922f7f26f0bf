#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "paper_suite.hpp"
#include "scenario.hpp"

using namespace latlip;
using nlohmann::json;

namespace {

json strip_timing(json j) {
  j.erase("timing");
  return j;
}

// Minimal structural validator for the subset of JSON Schema used by the
// shipped schema files: type, required, properties, items, enum.
bool validates(const json& schema, const json& value);

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer();
  if (type == "boolean") return value.is_boolean();
  return false;
}

bool validates(const json& schema, const json& value) {
  if (schema.contains("enum")) {
    bool any = false;
    for (const auto& option : schema.at("enum")) any = any || option == value;
    if (!any) return false;
  }
  if (schema.contains("type")) {
    const json& t = schema.at("type");
    if (t.is_string()) {
      if (!type_matches(t.get<std::string>(), value)) return false;
    } else {
      bool any = false;
      for (const auto& option : t)
        any = any || type_matches(option.get<std::string>(), value);
      if (!any) return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema.at("required"))
        if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties"))
      for (const auto& [key, sub] : schema.at("properties").items())
        if (value.contains(key) && !validates(sub, value.at(key))) return false;
  }
  if (value.is_array() && schema.contains("items"))
    for (const auto& item : value)
      if (!validates(schema.at("items"), item)) return false;
  return true;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

const char* kVerifyScenario = R"({
  "$schema": "latlip-scenario/v1",
  "seed": 7,
  "space": {"type": "grid", "n": 8},
  "domain": {"kind": "Lp", "p": 2},
  "codomain": {"kind": "Lp", "p": 2},
  "field": {"type": "constant", "fn": {"type": "identity"}},
  "tasks": [{"task": "verify", "K": "lip_profile", "samples": 100, "tol": 1e-9}]
})";

}  // namespace

TEST_CASE("verify scenario passes for the profile bound") {
  RunResult result = run_scenario_text(kVerifyScenario);
  CHECK(result.status == RunStatus::ok);
  CHECK(result.report.at("passed") == true);
  CHECK(result.report.at("tasks").size() == 1);
  CHECK(result.report.at("tasks")[0].at("task") == "verify");
  CHECK(result.report.at("tasks")[0].at("passed") == true);
}

TEST_CASE("undersized bound yields a violation with witness") {
  json doc = json::parse(kVerifyScenario);
  doc["tasks"][0]["K"] = 0.5;  // below the identity profile
  RunResult result = run_scenario_text(doc.dump());
  CHECK(result.status == RunStatus::violation);
  CHECK(result.report.at("passed") == false);
  CHECK(result.report.at("tasks")[0].contains("witness"));
  CHECK(result.report.at("tasks")[0].at("witness").contains("atom"));
}

TEST_CASE("malformed descriptors are config errors") {
  json doc = json::parse(kVerifyScenario);
  doc["field"] = {{"type", "no_such_field"}};
  RunResult result = run_scenario_text(doc.dump());
  CHECK(result.status == RunStatus::config_error);
  CHECK_FALSE(result.error.empty());

  RunResult bad_json = run_scenario_text("{not json");
  CHECK(bad_json.status == RunStatus::config_error);

  RunResult missing = run_scenario_file("/nonexistent/scenario.json");
  CHECK(missing.status == RunStatus::config_error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  RunResult a = run_scenario_text(kVerifyScenario);
  RunResult b = run_scenario_text(kVerifyScenario);
  CHECK(strip_timing(a.report).dump() == strip_timing(b.report).dump());

  json doc = json::parse(kVerifyScenario);
  doc["seed"] = 8;
  RunResult c = run_scenario_text(doc.dump());
  CHECK(strip_timing(a.report).at("provenance").at("seed") !=
        strip_timing(c.report).at("provenance").at("seed"));
}

TEST_CASE("shifted bounded field verifies against the constant bound") {
  // T(f) = 1/(1+|f|): affine-shifted, contraction with bound 1.
  json doc = json::parse(kVerifyScenario);
  doc["field"] = {{"type", "constant"}, {"fn", {{"type", "inv_one_plus_abs"}}}};
  doc["tasks"][0]["K"] = 1.0;
  RunResult result = run_scenario_text(doc.dump());
  CHECK(result.status == RunStatus::ok);

  // The same operator does not vanish at 0, so recovery refuses it.
  doc["tasks"] = json::array(
      {json{{"task", "recover"}, {"grid", "-1:0.5:1"}, {"K", 1.0}}});
  RunResult refused = run_scenario_text(doc.dump());
  CHECK(refused.status == RunStatus::violation);
  CHECK(refused.report.at("tasks")[0].at("error") == "NonzeroAtZero");
}

TEST_CASE("bound function given as a scalar descriptor of the atom") {
  // K(w) = 2 - w dominates the per-atom slopes 2 - atom(w) exactly.
  json doc = json::parse(kVerifyScenario);
  doc["space"] = {{"type", "atoms"}, {"weights", {0.5, 0.5}}};
  doc["field"] = {
      {"type", "per_atom"},
      {"fns", json::array({json{{"type", "scale"}, {"c", 2.0}},
                           json{{"type", "scale"}, {"c", 1.0}}})}};
  doc["tasks"][0]["K"] = {{"type", "pl"},
                          {"points", {{0.0, 2.0}, {1.0, 1.0}}},
                          {"left_slope", 0.0},
                          {"right_slope", 0.0}};
  CHECK(run_scenario_text(doc.dump()).status == RunStatus::ok);

  doc["tasks"][0]["K"] = {{"type", "pl"},
                          {"points", {{0.0, 1.9}, {1.0, 0.9}}},
                          {"left_slope", 0.0},
                          {"right_slope", 0.0}};
  CHECK(run_scenario_text(doc.dump()).status == RunStatus::violation);
}

TEST_CASE("norm task reports both routes and r") {
  json doc = json::parse(kVerifyScenario);
  doc["tasks"] = json::array({json{{"task", "norm"}, {"p", 2.0}, {"q", 1.0}}});
  RunResult result = run_scenario_text(doc.dump());
  REQUIRE(result.status == RunStatus::ok);
  const json& task = result.report.at("tasks")[0];
  CHECK(task.at("r") == 2.0);
  CHECK(task.at("sll_norm").get<double>() == doctest::Approx(1.0));
  CHECK(task.at("sll_norm") == task.at("kb_norm_r"));
}

TEST_CASE("recover task reproduces probes exactly") {
  json doc = json::parse(kVerifyScenario);
  doc["tasks"] = json::array(
      {json{{"task", "recover"}, {"grid", "-2:0.5:2"}, {"K", "lip_profile"}}});
  RunResult result = run_scenario_text(doc.dump());
  REQUIRE(result.status == RunStatus::ok);
  const json& task = result.report.at("tasks")[0];
  CHECK(task.at("grid_error_max") == 0.0);
  CHECK(task.at("extension") == "mcshane-upper");
  CHECK(task.at("field").at("type") == "per_atom");
}

TEST_CASE("tensor and demo tasks") {
  json doc = json::parse(kVerifyScenario);
  doc["space"] = {{"type", "grid"}, {"n", 6}};
  doc.erase("field");
  doc["tasks"] = json::array(
      {json{{"task", "tensor"},
            {"terms", json::array({json{{"fn", {{"type", "identity"}}},
                                        {"atoms", {0, 1, 2}}},
                                   json{{"fn", {{"type", "scale"}, {"c", 2.0}}},
                                        {"atoms", {3, 4}}}})},
            {"samples", 50}},
       json{{"task", "demo"},
            {"name", "nonlipschitz"},
            {"n_values", {2, 3}},
            {"grid_size", 400}}});
  RunResult result = run_scenario_text(doc.dump());
  REQUIRE(result.status == RunStatus::ok);
  CHECK(result.report.at("tasks")[0].at("blocks") >= 2);
  CHECK(result.report.at("tasks")[1].at("passed") == true);
}

TEST_CASE("descriptor round trips") {
  auto space = parse_space(json{{"type", "atoms"}, {"weights", {0.5, 0.5}}});
  CHECK(space->size() == 2);

  SpaceSpec linf = parse_space_spec(json{{"kind", "Linf"}});
  CHECK(linf.is_inf);

  ScalarLip fs = parse_scalar_fn(json{{"type", "dist_set"}, {"S", {2}}, {"cap", 0.25}});
  CHECK(fs.eval(2.0) == 0.0);

  LipField field = parse_field(
      json{{"type", "simple"},
           {"blocks", json::array({json{{"atoms", {0}}, {"fn", {{"type", "identity"}}}},
                                   json{{"atoms", {1}},
                                        {"fn", {{"type", "scale"}, {"c", 3.0}}}}})}},
      space);
  CHECK(lip_profile(field).values() == std::vector<double>{1.0, 3.0});

  json dumped = field_to_json(field);
  LipField reparsed = parse_field(dumped, space);
  CHECK(lip_profile(reparsed).values() == lip_profile(field).values());

  // Affine-shifted fields keep their shifts across a dump/parse cycle.
  LipField shifted(space, {ScalarLip::identity(), ScalarLip::identity()},
                   {1.0, -2.0});
  LipField shifted_back = parse_field(field_to_json(shifted), space);
  CHECK(shifted_back.affine_shifted());
  CHECK(shifted_back.eval(0, 0.0) == 1.0);
  CHECK(shifted_back.eval(1, 3.0) == 1.0);

  std::vector<double> grid = parse_grid(json("-1:0.5:1"));
  CHECK(grid == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK(parse_grid(json{{"from", 0.0}, {"step", 1.0}, {"to", 2.0}}) ==
        std::vector<double>{0.0, 1.0, 2.0});

  Molecule m = parse_molecule(json{{"support", {1.0, 2.0}}, {"coeffs", {1.0, -1.0}}});
  CHECK(m.size() == 2);
}

TEST_CASE("emitted reports validate against the shipped schema") {
  json schema = load_json_file(std::string(LATLIP_SOURCE_DIR) +
                               "/schemas/report.schema.json");
  RunResult scenario_run = run_scenario_text(kVerifyScenario);
  CHECK(validates(schema, scenario_run.report));

  PaperSuiteOptions options;
  options.only = "free-isometry";
  options.seed = 5;
  RunResult suite_run = paper_suite(options);
  CHECK(suite_run.status == RunStatus::ok);
  CHECK(validates(schema, suite_run.report));

  json scenario_schema = load_json_file(std::string(LATLIP_SOURCE_DIR) +
                                        "/schemas/scenario.schema.json");
  CHECK(validates(scenario_schema, json::parse(kVerifyScenario)));
}

TEST_CASE("paper suite filters anchors and stays deterministic") {
  PaperSuiteOptions options;
  options.only = "remark-3.6";
  options.seed = 11;
  RunResult a = paper_suite(options);
  REQUIRE(a.status == RunStatus::ok);
  REQUIRE(a.report.at("anchors").size() == 1);
  CHECK(a.report.at("anchors")[0].at("name") == "remark-3.6");

  RunResult b = paper_suite(options);
  CHECK(strip_timing(a.report).dump() == strip_timing(b.report).dump());

  PaperSuiteOptions bad;
  bad.only = "no-such-anchor";
  CHECK(paper_suite(bad).status == RunStatus::config_error);
}
