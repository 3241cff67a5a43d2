// Copyright 2026 The satloc Authors
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

#pragma once

#include <vector>

#include "satloc/model.hpp"

namespace satloc {

struct OptResult {
  Rational location;
  Rational value;
  Objective objective;
  std::size_t candidates_examined = 0;
};

/// The finite candidate set that provably contains an optimum, sorted and
/// deduplicated: {0, 1}, every breakpoint of every agent's satisfaction
/// (her location coordinates under the sum variant, her midpoint under the
/// max variant), and — for the MS objective — every intersection of the
/// linear pieces of any two agents' satisfaction functions. Each agent's
/// satisfaction is piecewise linear between consecutive candidates, so for
/// SS the (concave or convex) sum and for MS the pointwise minimum are both
/// extremized on this set.
std::vector<Rational> candidate_points(const Instance& instance,
                                       Objective objective);

/// Maximizes SS over [0,1]; ties broken toward the smaller location.
/// For obnoxious instances the result is always an endpoint.
OptResult solve_ss(const Instance& instance);

/// Maximizes MS over [0,1]; ties broken toward the smaller location.
OptResult solve_ms(const Instance& instance);

OptResult solve(const Instance& instance, Objective objective);

/// All candidate points attaining the optimum, for tie reporting.
std::vector<Rational> argmax_set(const Instance& instance,
                                 Objective objective);

/// Brute-force oracle: evaluates the objective at every k/grid_denominator
/// and keeps the first maximizer. Used by tests and for derived expected
/// values; intentionally independent of the candidate-set path.
OptResult grid_oracle(const Instance& instance, Objective objective,
                      long grid_denominator);

}  // namespace satloc
