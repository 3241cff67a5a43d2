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

#include <optional>
#include <vector>

#include "satloc/mechanisms.hpp"

namespace satloc {

/// A (joint) misreport together with what it did: the deviating agents in
/// ascending order, their reported profiles, the resulting outcome, and each
/// deviator's expected satisfaction before and after.
struct Misreport {
  std::vector<std::size_t> coalition;
  std::vector<AgentProfile> reported;
  Outcome outcome;
  std::vector<Rational> truthful_satisfaction;
  std::vector<Rational> deviated_satisfaction;
};

enum class Verdict { sp_holds, violated };

struct SPReport {
  Verdict verdict = Verdict::sp_holds;
  std::optional<Misreport> witness;
  std::size_t candidates_tried = 0;
  /// Set when the joint-deviation budget ran out before the search finished;
  /// an sp_holds verdict is then only partial.
  bool inconclusive = false;
};

/// Candidate reports for one agent: constant profiles (v,...,v) of her true
/// length, where v runs over the other agents' medians and midpoints, the
/// mechanism thresholds {0, 1/5, 1/2, 4/5, 1}, the grid k/grid_denominator,
/// and the midpoints between consecutive values of that union. A constant
/// profile has median = midpoint = v, so the set realizes every ordering of
/// the deviator's statistic against all pivotal thresholds — enough to reach
/// every output the registry mechanisms can produce.
std::vector<AgentProfile> misreport_candidates(MechanismId id,
                                               const Instance& instance,
                                               std::size_t agent,
                                               long grid_denominator);

/// Single-agent strategy-proofness over the candidate misreports; exact
/// rational comparison, first witness in deterministic order.
SPReport check_sp(MechanismId id, const Instance& instance,
                  long grid_denominator);

/// Group strategy-proofness over coalitions up to max_coalition_size; a
/// violation requires every member to strictly improve. Joint deviations
/// come from the per-agent candidate sets, capped by budget.
SPReport check_gsp(MechanismId id, const Instance& instance,
                   std::size_t max_coalition_size, long grid_denominator,
                   std::size_t budget = 200000);

}  // namespace satloc
