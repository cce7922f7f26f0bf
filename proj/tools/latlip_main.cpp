// Copyright 2026 The latlip authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latlip/latlip.h"

namespace {

using nlohmann::json;

int exit_code_of(latlip_status status) {
  if (status == LATLIP_OK) return 0;
  if (status == LATLIP_CONFIG_ERROR) return 2;
  return 1;
}

void emit_report(const char* report, const std::string& out_path) {
  if (!report) return;
  if (out_path.empty()) {
    std::cout << report << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  out << report << "\n";
}

int report_failure(latlip_status status) {
  if (status != LATLIP_OK) {
    const char* message = latlip_last_error();
    if (message && *message) std::cerr << "latlip: " << message << "\n";
  }
  return exit_code_of(status);
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  ok = static_cast<bool>(in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice Lipschitz operator laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("latlip ") + latlip_version());

  std::string scenario_path, out_path;
  auto* run = app.add_subcommand("run", "run a scenario file and emit a report");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--out", out_path, "write the report here instead of stdout");

  std::string only, csv_dir, suite_out;
  std::uint64_t suite_seed = 42;
  auto* suite = app.add_subcommand(
      "paper-suite", "run the bundled reproduction suite");
  suite->add_option("--only", only, "run a single anchor by name");
  suite->add_option("--csv", csv_dir, "emit convergence CSV tables into a directory");
  suite->add_option("--out", suite_out, "write the report here instead of stdout");
  suite->add_option("--seed", suite_seed, "suite seed (LATLIP_SEED overrides)");

  std::string field_path;
  double norm_p = 2.0, norm_q = 2.0;
  auto* norm = app.add_subcommand(
      "norm", "operator norm of the field in a file {space:..., field:...}");
  norm->add_option("--field", field_path, "field JSON file")->required();
  norm->add_option("--p", norm_p, "source exponent")->required();
  norm->add_option("--q", norm_q, "target exponent")->required();

  std::string op_path, grid_spec, k_spec = "lip_profile", recover_out;
  auto* recover = app.add_subcommand(
      "recover", "rebuild a field from constant probes of an operator");
  recover->add_option("--op", op_path, "operator JSON file {space:..., operator:...}")
      ->required();
  recover->add_option("--grid", grid_spec, "probe grid 'from:step:to'")->required();
  recover->add_option("--K", k_spec, "bound function: lip_profile or a number");
  recover->add_option("--out", recover_out, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    char* report = nullptr;
    latlip_status status = latlip_run_scenario_file(scenario_path.c_str(), &report);
    emit_report(report, out_path);
    latlip_string_free(report);
    return report_failure(status);
  }

  if (suite->parsed()) {
    json options{{"seed", suite_seed}};
    if (!only.empty()) options["only"] = only;
    if (!csv_dir.empty()) options["csv_dir"] = csv_dir;
    char* report = nullptr;
    latlip_status status =
        latlip_paper_suite(options.dump().c_str(), &report);
    emit_report(report, suite_out);
    latlip_string_free(report);
    return report_failure(status);
  }

  if (norm->parsed()) {
    bool ok = false;
    std::string text = read_file(field_path, ok);
    if (!ok) {
      std::cerr << "latlip: cannot read " << field_path << "\n";
      return 2;
    }
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.contains("space") || !doc.contains("field")) {
      std::cerr << "latlip: " << field_path
                << " must hold {\"space\":{...},\"field\":{...}}\n";
      return 2;
    }

    latlip_space* space = nullptr;
    latlip_status status = latlip_space_parse(doc.at("space").dump().c_str(), &space);
    if (status != LATLIP_OK) return report_failure(status);
    latlip_field* field = nullptr;
    status = latlip_field_parse(space, doc.at("field").dump().c_str(), &field);
    if (status != LATLIP_OK) {
      latlip_space_free(space);
      return report_failure(status);
    }

    double sll = 0.0, r = 0.0, kb = 0.0;
    int r_is_inf = 0;
    status = latlip_field_sll_norm(field, norm_p, norm_q, &sll);
    if (status == LATLIP_OK)
      status = latlip_multiplier_exponent(norm_p, norm_q, &r, &r_is_inf);
    if (status == LATLIP_OK) {
      json spec = r_is_inf ? json{{"kind", "Linf"}} : json{{"kind", "Lp"}, {"p", r}};
      status = latlip_field_kb_norm(field, spec.dump().c_str(), &kb);
    }
    latlip_field_free(field);
    latlip_space_free(space);
    if (status != LATLIP_OK) return report_failure(status);

    json report{{"p", norm_p},
                {"q", norm_q},
                {"r", r_is_inf ? json("inf") : json(r)},
                {"sll_norm", sll},
                {"kb_norm_r", kb}};
    std::cout << report.dump(2) << "\n";
    return 0;
  }

  if (recover->parsed()) {
    bool ok = false;
    std::string text = read_file(op_path, ok);
    if (!ok) {
      std::cerr << "latlip: cannot read " << op_path << "\n";
      return 2;
    }
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.contains("space") || !doc.contains("operator")) {
      std::cerr << "latlip: " << op_path
                << " must hold {\"space\":{...},\"operator\":{...}}\n";
      return 2;
    }
    json request{{"space", doc.at("space")},
                 {"operator", doc.at("operator")},
                 {"grid", grid_spec}};
    if (k_spec == "lip_profile") {
      request["K"] = "lip_profile";
    } else {
      json value = json::parse(k_spec, nullptr, false);
      if (value.is_discarded() || !value.is_number()) {
        std::cerr << "latlip: --K expects lip_profile or a number\n";
        return 2;
      }
      request["K"] = value;
    }
    char* report = nullptr;
    latlip_status status = latlip_recover_task(request.dump().c_str(), &report);
    emit_report(report, recover_out);
    latlip_string_free(report);
    return report_failure(status);
  }

  return 2;
}
