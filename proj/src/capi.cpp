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

#include "latlip/latlip.h"

#include <cstring>
#include <new>
#include <string>

#include "paper_suite.hpp"
#include "scenario.hpp"

using nlohmann::json;

struct latlip_space {
  latlip::SpacePtr impl;
};

struct latlip_field {
  latlip::LipField impl;
};

namespace {

thread_local std::string g_last_error;

latlip_status map_code(latlip::ErrorCode code) {
  using latlip::ErrorCode;
  switch (code) {
    case ErrorCode::empty_space: return LATLIP_ERR_EMPTY_SPACE;
    case ErrorCode::nonpositive_weight: return LATLIP_ERR_NONPOSITIVE_WEIGHT;
    case ErrorCode::space_mismatch: return LATLIP_ERR_SPACE_MISMATCH;
    case ErrorCode::empty_list: return LATLIP_ERR_EMPTY_LIST;
    case ErrorCode::not_piecewise_linear: return LATLIP_ERR_NOT_PIECEWISE_LINEAR;
    case ErrorCode::incompatible_samples: return LATLIP_ERR_INCOMPATIBLE_SAMPLES;
    case ErrorCode::empty_samples: return LATLIP_ERR_EMPTY_SAMPLES;
    case ErrorCode::support_too_large: return LATLIP_ERR_SUPPORT_TOO_LARGE;
    case ErrorCode::exponent_order: return LATLIP_ERR_EXPONENT_ORDER;
    case ErrorCode::zero_multiplier: return LATLIP_ERR_ZERO_MULTIPLIER;
    case ErrorCode::depth_overflow: return LATLIP_ERR_DEPTH_OVERFLOW;
    case ErrorCode::s_out_of_range: return LATLIP_ERR_S_OUT_OF_RANGE;
    case ErrorCode::nonzero_at_zero: return LATLIP_ERR_NONZERO_AT_ZERO;
    case ErrorCode::degenerate_grid: return LATLIP_ERR_DEGENERATE_GRID;
    case ErrorCode::not_indicator: return LATLIP_ERR_NOT_INDICATOR;
    case ErrorCode::grid_too_coarse: return LATLIP_ERR_GRID_TOO_COARSE;
    case ErrorCode::config_error: return LATLIP_CONFIG_ERROR;
    case ErrorCode::invalid_argument: return LATLIP_ERR_INVALID_ARGUMENT;
  }
  return LATLIP_ERR_INTERNAL;
}

template <typename Fn>
latlip_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const latlip::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return LATLIP_CONFIG_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LATLIP_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = new (std::nothrow) char[text.size() + 1];
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

latlip_status status_of(latlip::RunStatus status) {
  switch (status) {
    case latlip::RunStatus::ok: return LATLIP_OK;
    case latlip::RunStatus::violation: return LATLIP_VIOLATION;
    case latlip::RunStatus::config_error: return LATLIP_CONFIG_ERROR;
  }
  return LATLIP_ERR_INTERNAL;
}

latlip_status finish_run(const latlip::RunResult& result, char** report_json) {
  if (report_json) *report_json = copy_string(result.report.dump(2));
  if (!result.error.empty()) g_last_error = result.error;
  return status_of(result.status);
}

}  // namespace

extern "C" {

const char* latlip_version(void) { return latlip::kVersion; }

const char* latlip_status_name(latlip_status status) {
  switch (status) {
    case LATLIP_OK: return "ok";
    case LATLIP_VIOLATION: return "violation";
    case LATLIP_CONFIG_ERROR: return "config-error";
    default: break;
  }
  return "error";
}

const char* latlip_last_error(void) { return g_last_error.c_str(); }

void latlip_string_free(char* text) { delete[] text; }

latlip_status latlip_space_grid(size_t n, latlip_space** out) {
  if (!out) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new latlip_space{latlip::unit_grid(n)};
    return LATLIP_OK;
  });
}

latlip_status latlip_space_atoms(const double* weights, size_t n,
                                 latlip_space** out) {
  if (!out || (!weights && n > 0)) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new latlip_space{
        latlip::make_space(std::vector<double>(weights, weights + n))};
    return LATLIP_OK;
  });
}

latlip_status latlip_space_parse(const char* json_text, latlip_space** out) {
  if (!out || !json_text) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new latlip_space{latlip::parse_space(json::parse(json_text))};
    return LATLIP_OK;
  });
}

void latlip_space_free(latlip_space* space) { delete space; }

size_t latlip_space_size(const latlip_space* space) {
  return space && space->impl ? space->impl->size() : 0;
}

latlip_status latlip_space_total_mass(const latlip_space* space, double* out) {
  if (!space || !space->impl || !out) return LATLIP_ERR_INVALID_ARGUMENT;
  *out = space->impl->total_mass();
  return LATLIP_OK;
}

latlip_status latlip_field_parse(const latlip_space* space, const char* json_text,
                                 latlip_field** out) {
  if (!space || !space->impl || !json_text || !out)
    return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new latlip_field{
        latlip::parse_field(json::parse(json_text), space->impl)};
    return LATLIP_OK;
  });
}

void latlip_field_free(latlip_field* field) { delete field; }

latlip_status latlip_field_lip_profile(const latlip_field* field, double* out,
                                       size_t cap) {
  if (!field || !out) return LATLIP_ERR_INVALID_ARGUMENT;
  if (cap < field->impl.size()) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    latlip::MeasurableFn profile = latlip::lip_profile(field->impl);
    for (std::size_t i = 0; i < profile.size(); ++i) out[i] = profile[i];
    return LATLIP_OK;
  });
}

latlip_status latlip_field_sll_norm(const latlip_field* field, double p, double q,
                                    double* out) {
  if (!field || !out) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = latlip::sll_norm(field->impl, p, q);
    return LATLIP_OK;
  });
}

latlip_status latlip_field_kb_norm(const latlip_field* field,
                                   const char* spec_json, double* out) {
  if (!field || !spec_json || !out) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = latlip::kb_norm(field->impl,
                           latlip::parse_space_spec(json::parse(spec_json)));
    return LATLIP_OK;
  });
}

latlip_status latlip_multiplier_exponent(double p, double q, double* r,
                                         int* r_is_inf) {
  if (!r || !r_is_inf) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    latlip::MultiplierSpec spec = latlip::MultiplierSpec::make(p, q);
    *r_is_inf = spec.r.is_inf ? 1 : 0;
    *r = spec.r.is_inf ? 0.0 : spec.r.p;
    return LATLIP_OK;
  });
}

latlip_status latlip_run_scenario(const char* scenario_json, char** report_json) {
  if (!scenario_json) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    return finish_run(latlip::run_scenario_text(scenario_json), report_json);
  });
}

latlip_status latlip_run_scenario_file(const char* path, char** report_json) {
  if (!path) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    return finish_run(latlip::run_scenario_file(path), report_json);
  });
}

latlip_status latlip_paper_suite(const char* options_json, char** report_json) {
  return guarded([&] {
    latlip::PaperSuiteOptions options;
    if (options_json && *options_json) {
      json doc = json::parse(options_json);
      if (doc.contains("seed")) options.seed = doc.at("seed").get<std::uint64_t>();
      if (doc.contains("only")) options.only = doc.at("only").get<std::string>();
      if (doc.contains("csv_dir"))
        options.csv_dir = doc.at("csv_dir").get<std::string>();
    }
    return finish_run(latlip::paper_suite(options), report_json);
  });
}

latlip_status latlip_recover_task(const char* request_json, char** report_json) {
  if (!request_json) return LATLIP_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    json doc = json::parse(request_json);
    latlip::SpacePtr space = latlip::parse_space(doc.at("space"));
    latlip::SuperOp op = latlip::parse_operator(doc.at("operator"), space);
    std::vector<double> grid = latlip::parse_grid(doc.at("grid"));

    latlip::MeasurableFn k = [&]() -> latlip::MeasurableFn {
      const json& kj = doc.at("K");
      if (kj.is_string() && kj.get<std::string>() == "lip_profile")
        return latlip::lip_profile(op.field());
      if (kj.is_number())
        return latlip::MeasurableFn::constant(space, kj.get<double>());
      if (kj.is_object() && kj.contains("values"))
        return latlip::MeasurableFn(space,
                                    kj.at("values").get<std::vector<double>>());
      latlip::fail(latlip::ErrorCode::config_error,
                   "at K: expected 'lip_profile', a number or {values:[..]}");
    }();
    double zero_tol = doc.value("zero_tol", 1e-9);
    latlip::LipField recovered = latlip::recover_field(op, grid, k, zero_tol);
    json report{{"$schema", "latlip-report/v1"},
                {"task", "recover"},
                {"extension", "mcshane-upper"},
                {"field", latlip::field_to_json(recovered)}};
    if (report_json) *report_json = copy_string(report.dump(2));
    return LATLIP_OK;
  });
}

}  // extern "C"
