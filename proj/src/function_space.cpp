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

#include "function_space.hpp"

#include <algorithm>
#include <cmath>

namespace latlip {

SpaceSpec SpaceSpec::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    fail(ErrorCode::invalid_argument, "Lp exponent must satisfy 1 <= p < inf");
  return SpaceSpec{false, p};
}

SpaceSpec SpaceSpec::linf() { return SpaceSpec{true, 0.0}; }

MeasurableFn::MeasurableFn(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) fail(ErrorCode::invalid_argument, "null space");
  if (values_.size() != space_->size())
    fail(ErrorCode::space_mismatch, "value vector length != atom count");
  for (double v : values_)
    if (!std::isfinite(v))
      fail(ErrorCode::invalid_argument, "non-finite function value");
}

MeasurableFn::MeasurableFn(SpacePtr space)
    : MeasurableFn(space, std::vector<double>(space ? space->size() : 0, 0.0)) {}

MeasurableFn MeasurableFn::constant(SpacePtr space, double value) {
  return MeasurableFn(space,
                      std::vector<double>(space ? space->size() : 0, value));
}

MeasurableFn MeasurableFn::indicator(SpacePtr space,
                                     const std::vector<std::size_t>& atoms) {
  MeasurableFn f(space);
  for (std::size_t i : atoms) {
    if (i >= f.size()) fail(ErrorCode::invalid_argument, "atom index out of range");
    f[i] = 1.0;
  }
  return f;
}

double bfs_norm(const SpaceSpec& spec, const MeasurableFn& f) {
  if (spec.is_inf) return max_abs(f);
  const auto& space = *f.space();
  double acc = 0.0;
  if (spec.p == 1.0) {
    for (std::size_t i = 0; i < f.size(); ++i)
      acc += std::abs(f[i]) * space.weight(i);
    return acc;
  }
  if (spec.p == 2.0) {
    for (std::size_t i = 0; i < f.size(); ++i)
      acc += f[i] * f[i] * space.weight(i);
    return std::sqrt(acc);
  }
  for (std::size_t i = 0; i < f.size(); ++i)
    acc += std::pow(std::abs(f[i]), spec.p) * space.weight(i);
  return std::pow(acc, 1.0 / spec.p);
}

namespace {
template <typename Op>
MeasurableFn zip(const MeasurableFn& f, const MeasurableFn& g, Op op) {
  require_same_space(f.space(), g.space());
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = op(f[i], g[i]);
  return MeasurableFn(f.space(), std::move(out));
}
}  // namespace

MeasurableFn abs(const MeasurableFn& f) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return MeasurableFn(f.space(), std::move(out));
}

MeasurableFn pointwise_min(const MeasurableFn& f, const MeasurableFn& g) {
  return zip(f, g, [](double a, double b) { return std::min(a, b); });
}

MeasurableFn pointwise_max(const MeasurableFn& f, const MeasurableFn& g) {
  return zip(f, g, [](double a, double b) { return std::max(a, b); });
}

MeasurableFn pointwise_product(const MeasurableFn& f, const MeasurableFn& g) {
  return zip(f, g, [](double a, double b) { return a * b; });
}

MeasurableFn add(const MeasurableFn& f, const MeasurableFn& g) {
  return zip(f, g, [](double a, double b) { return a + b; });
}

MeasurableFn sub(const MeasurableFn& f, const MeasurableFn& g) {
  return zip(f, g, [](double a, double b) { return a - b; });
}

MeasurableFn scale(const MeasurableFn& f, double c) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = c * f[i];
  return MeasurableFn(f.space(), std::move(out));
}

MeasurableFn restrict(const MeasurableFn& f,
                      const std::vector<std::size_t>& atoms) {
  MeasurableFn out(f.space());
  for (std::size_t i : atoms) {
    if (i >= f.size()) fail(ErrorCode::invalid_argument, "atom index out of range");
    out[i] = f[i];
  }
  return out;
}

MeasurableFn seq_inf(const std::vector<MeasurableFn>& fs) {
  if (fs.empty()) fail(ErrorCode::empty_list, "seq_inf of empty family");
  MeasurableFn out = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) out = pointwise_min(out, fs[k]);
  return out;
}

double max_abs(const MeasurableFn& f) {
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
  return m;
}

}  // namespace latlip
