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

#ifndef LATLIP_PAPER_SUITE_HPP
#define LATLIP_PAPER_SUITE_HPP

#include <string>
#include <vector>

#include "scenario.hpp"

namespace latlip {

// Reproduction suite bundling the library's flagship checks, one anchor per
// block: multiplier norms against the search oracle, the free-space isometry,
// the separated 1-Lipschitz family, dyadic preimages of the digit field,
// the bounded-but-not-Lipschitz ratio blowup, diagonal detection for linear
// maps, field recovery from constant probes, truncation limits, and the
// tensor/field identification.
struct PaperSuiteOptions {
  std::uint64_t seed = 42;
  std::string only;     // run a single anchor when non-empty
  std::string csv_dir;  // emit convergence CSVs when non-empty
};

std::vector<std::string> paper_suite_anchor_names();

// Runs the selected anchors and reports one entry per anchor. Violations set
// the run status; unknown anchor names are configuration errors.
RunResult paper_suite(const PaperSuiteOptions& options);

}  // namespace latlip

#endif  // LATLIP_PAPER_SUITE_HPP
