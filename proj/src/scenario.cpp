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

#include "scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace latlip {

using nlohmann::json;

namespace {

[[noreturn]] void config_fail(const std::string& where, const std::string& what) {
  fail(ErrorCode::config_error, "at " + where + ": " + what);
}

const json& require_field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    config_fail(where, std::string("missing required field '") + key + "'");
  return j.at(key);
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) config_fail(where, "expected a number");
  return j.get<double>();
}

std::vector<double> as_number_list(const json& j, const std::string& where) {
  if (!j.is_array()) config_fail(where, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_number(v, where));
  return out;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) config_fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::size_t> as_index_list(const json& j, const std::string& where) {
  if (!j.is_array()) config_fail(where, "expected an array of atom indices");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      config_fail(where, "atom indices must be non-negative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

SpacePtr parse_space(const json& j) {
  const std::string where = "space";
  std::string type = as_string(require_field(j, "type", where), where + ".type");
  if (type == "grid") {
    double n = as_number(require_field(j, "n", where), where + ".n");
    if (n < 1 || n != std::floor(n)) config_fail(where + ".n", "need a positive integer");
    return unit_grid(static_cast<std::size_t>(n));
  }
  if (type == "atoms") {
    auto weights = as_number_list(require_field(j, "weights", where), where + ".weights");
    return make_space(weights);
  }
  config_fail(where + ".type", "unknown space type '" + type + "'");
}

SpaceSpec parse_space_spec(const json& j) {
  const std::string where = "space spec";
  std::string kind = as_string(require_field(j, "kind", where), where + ".kind");
  if (kind == "Linf") return SpaceSpec::linf();
  if (kind == "Lp") {
    double p = as_number(require_field(j, "p", where), where + ".p");
    if (!(p >= 1.0)) config_fail(where + ".p", "need p >= 1");
    return SpaceSpec::lp(p);
  }
  config_fail(where + ".kind", "unknown kind '" + kind + "'");
}

ScalarLip parse_scalar_fn(const json& j) {
  const std::string where = "fn";
  std::string type = as_string(require_field(j, "type", where), where + ".type");
  if (type == "identity") return ScalarLip::identity();
  if (type == "inv_one_plus_abs") return ScalarLip::inv_one_plus_abs();
  if (type == "scale") {
    double c = as_number(require_field(j, "c", where), where + ".c");
    return ScalarLip(PwLinear::scale_map(c));
  }
  if (type == "constant") {
    double c = as_number(require_field(j, "c", where), where + ".c");
    return ScalarLip::constant(c);
  }
  if (type == "dist_set") {
    const json& sj = require_field(j, "S", where);
    if (!sj.is_array()) config_fail(where + ".S", "expected an array of integers");
    std::set<int> s;
    for (const auto& v : sj) {
      if (!v.is_number_integer() || v.get<int>() < 1)
        config_fail(where + ".S", "entries must be positive integers");
      s.insert(v.get<int>());
    }
    double cap = j.contains("cap") ? as_number(j.at("cap"), where + ".cap") : 0.25;
    return ScalarLip(dist_set_fn(s, cap));
  }
  if (type == "pl") {
    const json& pts = require_field(j, "points", where);
    if (!pts.is_array() || pts.empty())
      config_fail(where + ".points", "expected a non-empty array of [x,y] pairs");
    std::vector<double> xs, ys;
    for (const auto& p : pts) {
      if (!p.is_array() || p.size() != 2)
        config_fail(where + ".points", "each point must be [x,y]");
      xs.push_back(as_number(p.at(0), where + ".points"));
      ys.push_back(as_number(p.at(1), where + ".points"));
    }
    double ls = j.contains("left_slope")
                    ? as_number(j.at("left_slope"), where + ".left_slope")
                    : 0.0;
    double rs = j.contains("right_slope")
                    ? as_number(j.at("right_slope"), where + ".right_slope")
                    : 0.0;
    try {
      return ScalarLip(PwLinear(std::move(xs), std::move(ys), ls, rs));
    } catch (const Error& e) {
      config_fail(where + ".points", e.what());
    }
  }
  config_fail(where + ".type", "unknown scalar function type '" + type + "'");
}

LipField parse_field(const json& j, const SpacePtr& space) {
  const std::string where = "field";
  std::string type = as_string(require_field(j, "type", where), where + ".type");
  if (type == "constant")
    return LipField::constant(space, parse_scalar_fn(require_field(j, "fn", where)));
  if (type == "binary_digit") {
    double depth = j.contains("depth") ? as_number(j.at("depth"), where + ".depth") : 30;
    if (depth < 1 || depth != std::floor(depth))
      config_fail(where + ".depth", "need a positive integer");
    return binary_digit_field(space, static_cast<int>(depth));
  }
  if (type == "per_atom") {
    const json& fns = require_field(j, "fns", where);
    if (!fns.is_array() || fns.size() != space->size())
      config_fail(where + ".fns", "need exactly one function per atom");
    std::vector<ScalarLip> parsed;
    parsed.reserve(fns.size());
    for (const auto& fj : fns) parsed.push_back(parse_scalar_fn(fj));
    if (j.contains("shifts")) {
      auto shifts = as_number_list(j.at("shifts"), where + ".shifts");
      if (shifts.size() != space->size())
        config_fail(where + ".shifts", "need one shift per atom");
      return LipField(space, std::move(parsed), std::move(shifts));
    }
    return LipField(space, std::move(parsed));
  }
  if (type == "simple") {
    const json& blocks = require_field(j, "blocks", where);
    if (!blocks.is_array()) config_fail(where + ".blocks", "expected an array");
    SimpleField sf;
    sf.space = space;
    for (const auto& bj : blocks) {
      auto atoms = as_index_list(require_field(bj, "atoms", where + ".blocks"),
                                 where + ".blocks.atoms");
      sf.blocks.emplace_back(std::move(atoms),
                             parse_scalar_fn(require_field(bj, "fn", where + ".blocks")));
    }
    try {
      return sf.to_field();
    } catch (const Error& e) {
      config_fail(where + ".blocks", e.what());
    }
  }
  config_fail(where + ".type", "unknown field type '" + type + "'");
}

SuperOp parse_operator(const json& j, const SpacePtr& space) {
  const std::string where = "operator";
  std::string type = as_string(require_field(j, "type", where), where + ".type");
  if (type == "field")
    return SuperOp::from_field(parse_field(require_field(j, "field", where), space));
  if (type == "matrix") {
    const json& rows = require_field(j, "rows", where);
    if (!rows.is_array() || rows.size() != space->size())
      config_fail(where + ".rows", "matrix must be square over the atoms");
    std::vector<std::vector<double>> matrix;
    for (const auto& row : rows) {
      matrix.push_back(as_number_list(row, where + ".rows"));
      if (matrix.back().size() != space->size())
        config_fail(where + ".rows", "matrix must be square over the atoms");
    }
    return SuperOp::opaque(
        space,
        [space, matrix](const MeasurableFn& f) {
          std::vector<double> out(f.size(), 0.0);
          for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t k = 0; k < f.size(); ++k)
              out[i] += matrix[i][k] * f[k];
          return MeasurableFn(space, std::move(out));
        },
        /*claims_zero_at_zero=*/true);
  }
  if (type == "builtin") {
    std::string name = as_string(require_field(j, "name", where), where + ".name");
    if (name == "inf_f2_invsqrt") return make_inf_square_invsqrt(space);
    config_fail(where + ".name", "unknown builtin operator '" + name + "'");
  }
  config_fail(where + ".type", "unknown operator type '" + type + "'");
}

Molecule parse_molecule(const json& j) {
  const std::string where = "molecule";
  auto support = as_number_list(require_field(j, "support", where), where + ".support");
  auto coeffs = as_number_list(require_field(j, "coeffs", where), where + ".coeffs");
  if (support.size() != coeffs.size())
    config_fail(where, "support and coeffs must have equal length");
  return Molecule(std::move(support), std::move(coeffs));
}

std::vector<double> parse_grid(const json& j) {
  const std::string where = "grid";
  if (j.is_array()) return as_number_list(j, where);
  double from = 0, step = 0, to = 0;
  if (j.is_string()) {
    std::string text = j.get<std::string>();
    std::replace(text.begin(), text.end(), ':', ' ');
    std::istringstream in(text);
    if (!(in >> from >> step >> to)) config_fail(where, "expected 'from:step:to'");
  } else if (j.is_object()) {
    from = as_number(require_field(j, "from", where), where + ".from");
    step = as_number(require_field(j, "step", where), where + ".step");
    to = as_number(require_field(j, "to", where), where + ".to");
  } else {
    config_fail(where, "expected a string, object or array");
  }
  if (!(step > 0.0) || !(from < to)) config_fail(where, "need from < to and step > 0");
  // Multiples of the step keep 0 exact when from is a multiple of step.
  long long count = std::llround((to - from) / step);
  std::vector<double> grid;
  long long base = std::llround(from / step);
  bool aligned = std::abs(base * step - from) < 1e-12;
  for (long long i = 0; i <= count; ++i)
    grid.push_back(aligned ? (base + i) * step : from + static_cast<double>(i) * step);
  return grid;
}

json pl_to_json(const PwLinear& pl) {
  json points = json::array();
  for (std::size_t i = 0; i < pl.size(); ++i)
    points.push_back({pl.breakpoints()[i], pl.values()[i]});
  return json{{"type", "pl"},
              {"points", points},
              {"left_slope", pl.left_slope()},
              {"right_slope", pl.right_slope()}};
}

json scalar_fn_to_json(const ScalarLip& fn) {
  if (fn.is_pl()) return pl_to_json(fn.pl());
  return json{{"type", "inv_one_plus_abs"}, {"shifted_by", fn.eval(0.0) - 1.0}};
}

json field_to_json(const LipField& field) {
  json fns = json::array();
  for (std::size_t i = 0; i < field.size(); ++i)
    fns.push_back(scalar_fn_to_json(field.fn(i)));
  json out{{"type", "per_atom"}, {"fns", fns}};
  if (field.affine_shifted()) {
    json shifts = json::array();
    for (std::size_t i = 0; i < field.size(); ++i) shifts.push_back(field.shift(i));
    out["shifts"] = shifts;
  }
  return out;
}

std::uint64_t effective_seed(std::uint64_t scenario_seed, std::string* source) {
  if (const char* env = std::getenv("LATLIP_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') {
      if (source) *source = "env";
      return static_cast<std::uint64_t>(v);
    }
  }
  if (source) *source = "scenario";
  return scenario_seed;
}

namespace {

struct ScenarioContext {
  SpacePtr space;
  SpaceSpec domain = SpaceSpec::lp(2.0);
  SpaceSpec codomain = SpaceSpec::lp(2.0);
  bool has_domain = false;
  bool has_codomain = false;
  std::optional<LipField> field;
  std::optional<SuperOp> op;
  double default_tol = 1e-9;
};

MeasurableFn parse_bound_fn(const json& j, const ScenarioContext& ctx,
                            const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "lip_profile") {
      if (ctx.field) return lip_profile(*ctx.field);
      if (ctx.op && ctx.op->is_field()) return lip_profile(ctx.op->field());
      config_fail(where, "'lip_profile' needs a field-backed operator");
    }
    config_fail(where, "unknown bound function '" + j.get<std::string>() + "'");
  }
  if (j.is_number())
    return MeasurableFn::constant(ctx.space, j.get<double>());
  if (j.is_object() && j.contains("values")) {
    auto values = as_number_list(j.at("values"), where + ".values");
    if (values.size() != ctx.space->size())
      config_fail(where + ".values", "need one value per atom");
    return MeasurableFn(ctx.space, std::move(values));
  }
  if (j.is_object() && j.contains("type")) {
    // Scalar descriptor evaluated at the atom coordinates.
    ScalarLip fn = parse_scalar_fn(j);
    std::vector<double> values(ctx.space->size());
    for (std::size_t i = 0; i < values.size(); ++i)
      values[i] = fn.eval(ctx.space->atom(i));
    return MeasurableFn(ctx.space, std::move(values));
  }
  config_fail(where, "expected 'lip_profile', a number, {values:[..]} or a scalar descriptor");
}

const SuperOp& require_operator(const ScenarioContext& ctx, const std::string& where) {
  if (ctx.op) return *ctx.op;
  config_fail(where, "scenario has no operator (and no field to induce one)");
}

json witness_to_json(const Witness& w) {
  return json{{"atom", w.atom}, {"f", w.f.values()}, {"g", w.g.values()}};
}

json run_verify_task(const json& task, ScenarioContext& ctx, std::uint64_t seed) {
  const SuperOp& op = require_operator(ctx, "tasks.verify");
  MeasurableFn k = parse_bound_fn(require_field(task, "K", "tasks.verify"), ctx,
                                  "tasks.verify.K");
  SamplerConfig config;
  config.seed = seed;
  if (task.contains("samples"))
    config.samples = static_cast<int>(as_number(task.at("samples"), "tasks.verify.samples"));
  if (task.contains("amplitude"))
    config.amplitude = as_number(task.at("amplitude"), "tasks.verify.amplitude");
  double tol = task.contains("tol") ? as_number(task.at("tol"), "tasks.verify.tol")
                                    : ctx.default_tol;
  VerifyReport report = check_lattice_lipschitz(op, k, config, tol);
  json out{{"task", "verify"},
           {"passed", report.passed},
           {"worst_margin", report.worst_margin},
           {"samples_used", report.samples_used},
           {"tol", tol}};
  if (report.witness) out["witness"] = witness_to_json(*report.witness);
  return out;
}

json run_norm_task(const json& task, ScenarioContext& ctx) {
  if (!ctx.field) config_fail("tasks.norm", "scenario has no field");
  double p, q;
  if (task.contains("p")) {
    p = as_number(task.at("p"), "tasks.norm.p");
  } else if (ctx.has_domain && !ctx.domain.is_inf) {
    p = ctx.domain.p;
  } else {
    config_fail("tasks.norm.p", "no exponent given and no finite domain spec");
  }
  if (task.contains("q")) {
    q = as_number(task.at("q"), "tasks.norm.q");
  } else if (ctx.has_codomain && !ctx.codomain.is_inf) {
    q = ctx.codomain.p;
  } else {
    config_fail("tasks.norm.q", "no exponent given and no finite codomain spec");
  }
  MultiplierSpec spec = MultiplierSpec::make(p, q);
  double sll = sll_norm(*ctx.field, spec);
  double kb = kb_norm(*ctx.field, spec.r);
  json out{{"task", "norm"},
           {"p", p},
           {"q", q},
           {"r", spec.r.is_inf ? json("inf") : json(spec.r.p)},
           {"sll_norm", sll},
           {"kb_norm_r", kb},
           {"passed", true}};
  return out;
}

json run_recover_task(const json& task, ScenarioContext& ctx) {
  const SuperOp& op = require_operator(ctx, "tasks.recover");
  std::vector<double> grid = parse_grid(require_field(task, "grid", "tasks.recover"));
  MeasurableFn k = parse_bound_fn(require_field(task, "K", "tasks.recover"), ctx,
                                  "tasks.recover.K");
  double zero_tol = task.contains("zero_tol")
                        ? as_number(task.at("zero_tol"), "tasks.recover.zero_tol")
                        : ctx.default_tol;
  LipField recovered = recover_field(op, grid, k, zero_tol);

  // Reproduction error at the probe levels and the Lipschitz certificate.
  SuperOp rec_op = SuperOp::from_field(recovered);
  double grid_error = 0.0;
  for (double lambda : grid) {
    MeasurableFn probe = MeasurableFn::constant(ctx.space, lambda);
    grid_error = std::max(grid_error,
                          max_abs(sub(rec_op.apply(probe), op.apply(probe))));
  }
  double lip_excess = 0.0;
  MeasurableFn profile = lip_profile(recovered);
  for (std::size_t i = 0; i < profile.size(); ++i)
    lip_excess = std::max(lip_excess, profile[i] - k[i] * (1.0 + 1e-9));
  json out{{"task", "recover"},
           {"passed", grid_error == 0.0 && lip_excess <= 0.0},
           {"extension", "mcshane-upper"},
           {"grid_points", grid.size()},
           {"grid_error_max", grid_error},
           {"lip_excess", lip_excess}};
  if (!task.contains("include_field") || task.at("include_field").get<bool>())
    out["field"] = field_to_json(recovered);
  return out;
}

json run_tensor_task(const json& task, ScenarioContext& ctx, std::uint64_t seed) {
  const json& terms = require_field(task, "terms", "tasks.tensor");
  if (!terms.is_array() ) config_fail("tasks.tensor.terms", "expected an array");
  SimpleTensor tensor;
  for (const auto& tj : terms) {
    auto atoms = as_index_list(require_field(tj, "atoms", "tasks.tensor.terms"),
                               "tasks.tensor.terms.atoms");
    tensor.terms.emplace_back(
        parse_scalar_fn(require_field(tj, "fn", "tasks.tensor.terms")),
        MeasurableFn::indicator(ctx.space, atoms));
  }
  SimpleField canonical = tensor_canonicalize(tensor, ctx.space);
  SuperOp field_op = SuperOp::from_field(canonical.to_field());
  int samples = task.contains("samples")
                    ? static_cast<int>(as_number(task.at("samples"), "tasks.tensor.samples"))
                    : 100;
  Rng rng(seed);
  double max_dev = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> values(ctx.space->size());
    for (double& v : values) v = rng.uniform(-3.0, 3.0);
    MeasurableFn f(ctx.space, std::move(values));
    max_dev = std::max(max_dev,
                       max_abs(sub(tensor_apply(tensor, f), field_op.apply(f))));
  }
  return json{{"task", "tensor"},
              {"passed", max_dev <= 1e-12},
              {"max_dev", max_dev},
              {"blocks", canonical.blocks.size()},
              {"samples", samples}};
}

json run_demo_task(const json& task) {
  std::string name = as_string(require_field(task, "name", "tasks.demo"),
                               "tasks.demo.name");
  if (name != "nonlipschitz")
    config_fail("tasks.demo.name", "unknown demo '" + name + "'");
  std::vector<int> n_values;
  if (task.contains("n_values")) {
    for (double v : as_number_list(task.at("n_values"), "tasks.demo.n_values"))
      n_values.push_back(static_cast<int>(v));
  } else {
    n_values = {2, 3, 4, 5};
  }
  int max_n = 1;
  for (int n : n_values) max_n = std::max(max_n, n);
  std::size_t grid_size =
      task.contains("grid_size")
          ? static_cast<std::size_t>(as_number(task.at("grid_size"), "tasks.demo.grid_size"))
          : static_cast<std::size_t>(4) * static_cast<std::size_t>(max_n) * max_n * max_n * max_n;
  double tolerance = task.contains("tolerance")
                         ? as_number(task.at("tolerance"), "tasks.demo.tolerance")
                         : 0.05;
  auto rows = nonlipschitz_demo(n_values, grid_size);
  bool passed = true;
  json table = json::array();
  double prev = -1.0;
  for (const auto& row : rows) {
    table.push_back({row.n, row.ratio});
    if (std::abs(row.ratio - row.n) > tolerance * row.n) passed = false;
    if (row.ratio <= prev) passed = false;
    prev = row.ratio;
  }
  return json{{"task", "demo"},
              {"name", "nonlipschitz"},
              {"passed", passed},
              {"grid_size", grid_size},
              {"ratios", table}};
}

RunResult run_scenario_json(const json& doc, std::uint64_t scenario_hash) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  json report;

  if (doc.contains("$schema") && doc.at("$schema") != "latlip-scenario/v1")
    config_fail("$schema", "unsupported scenario schema version");

  ScenarioContext ctx;
  std::uint64_t scenario_seed = 0;
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_integer())
      config_fail("seed", "expected an integer");
    scenario_seed = doc.at("seed").get<std::uint64_t>();
  }
  std::string seed_source;
  std::uint64_t seed = effective_seed(scenario_seed, &seed_source);

  ctx.space = parse_space(require_field(doc, "space", "scenario"));
  if (doc.contains("domain")) {
    ctx.domain = parse_space_spec(doc.at("domain"));
    ctx.has_domain = true;
  }
  if (doc.contains("codomain")) {
    ctx.codomain = parse_space_spec(doc.at("codomain"));
    ctx.has_codomain = true;
  }
  if (doc.contains("tolerances") && doc.at("tolerances").contains("verify"))
    ctx.default_tol = as_number(doc.at("tolerances").at("verify"), "tolerances.verify");
  if (doc.contains("field")) ctx.field = parse_field(doc.at("field"), ctx.space);
  if (doc.contains("operator")) {
    ctx.op = parse_operator(doc.at("operator"), ctx.space);
  } else if (ctx.field) {
    ctx.op = SuperOp::from_field(*ctx.field);
  }

  const json& tasks = require_field(doc, "tasks", "scenario");
  if (!tasks.is_array()) config_fail("tasks", "expected an array");

  char hash_hex[17];
  std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                static_cast<unsigned long long>(scenario_hash));
  report["$schema"] = "latlip-report/v1";
  report["provenance"] = {{"tool", "latlip"},
                          {"version", kVersion},
                          {"seed", seed},
                          {"seed_source", seed_source},
                          {"scenario_hash", std::string(hash_hex)}};

  bool all_passed = true;
  json task_results = json::array();
  std::uint64_t seed_state = seed;
  for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
    const json& task = tasks[idx];
    std::uint64_t task_seed = splitmix64(seed_state);
    std::string kind =
        as_string(require_field(task, "task", "tasks[" + std::to_string(idx) + "]"),
                  "tasks[" + std::to_string(idx) + "].task");
    json task_result;
    try {
      if (kind == "verify") {
        task_result = run_verify_task(task, ctx, task_seed);
      } else if (kind == "norm") {
        task_result = run_norm_task(task, ctx);
      } else if (kind == "recover") {
        task_result = run_recover_task(task, ctx);
      } else if (kind == "tensor") {
        task_result = run_tensor_task(task, ctx, task_seed);
      } else if (kind == "demo") {
        task_result = run_demo_task(task);
      } else {
        config_fail("tasks[" + std::to_string(idx) + "].task",
                    "unknown task '" + kind + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::config_error) throw;
      // Mathematical failures are verdicts, not configuration problems.
      task_result = json{{"task", kind},
                         {"passed", false},
                         {"error", std::string(error_code_name(e.code()))},
                         {"detail", e.what()}};
    }
    task_result["seed"] = task_seed;
    if (!task_result.value("passed", true)) all_passed = false;
    task_results.push_back(std::move(task_result));
  }

  report["tasks"] = std::move(task_results);
  report["passed"] = all_passed;
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report["timing"] = {
      {"total_ms",
       std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed)
           .count()}};

  result.report = std::move(report);
  result.status = all_passed ? RunStatus::ok : RunStatus::violation;
  return result;
}

}  // namespace

RunResult run_scenario_text(const std::string& text, const std::string& source_name) {
  RunResult result;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    result.status = RunStatus::config_error;
    result.error = "invalid JSON in " + source_name + ": " + e.what();
    result.report = json{{"$schema", "latlip-report/v1"}, {"error", result.error}};
    return result;
  }
  try {
    return run_scenario_json(doc, fnv1a64(text));
  } catch (const Error& e) {
    result.status = RunStatus::config_error;
    result.error = std::string(e.what()) + " (" + source_name + ")";
    result.report = json{{"$schema", "latlip-report/v1"}, {"error", result.error}};
    return result;
  }
}

RunResult run_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    RunResult result;
    result.status = RunStatus::config_error;
    result.error = "cannot read scenario file: " + path;
    result.report = json{{"$schema", "latlip-report/v1"}, {"error", result.error}};
    return result;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return run_scenario_text(buffer.str(), path);
}

}  // namespace latlip
