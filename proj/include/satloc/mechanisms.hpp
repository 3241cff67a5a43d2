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
#include <string>
#include <vector>

#include "satloc/model.hpp"

namespace satloc {

/// M1..M7 are the registry mechanisms. `mean` is a deliberately manipulable
/// strawman (average of all reported coordinates) kept around as the
/// negative control for the truthfulness checker.
enum class MechanismId { m1, m2, m3, m4, m5, m6, m7, mean };

std::string to_string(MechanismId id);
std::optional<MechanismId> mechanism_from_string(std::string_view text);

struct MechanismDescriptor {
  MechanismId id;
  std::string name;
  Setting intended_setting;
  std::vector<Variant> intended_variants;
  Objective intended_objective;
  /// Worst-case ratio guaranteed on-label; unset for the strawman.
  std::optional<Rational> proven_ratio;
  bool randomized;
  bool group_strategy_proof;
};

/// The seven registry mechanisms, in id order.
const std::vector<MechanismDescriptor>& mechanism_registry();

/// Descriptor lookup; also covers the strawman.
const MechanismDescriptor& descriptor(MechanismId id);

/// Agent counts for the two partition families: N1/N2 split agents by which
/// endpoint is farther in total distance (ties prefer 0), S1/S2 split them
/// by midpoint at most 1/2 versus above.
struct PartitionStats {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
};

PartitionStats partition_stats(const Instance& instance);

/// Left median of the agents' left medians.
Outcome mech1_median_of_medians(const Instance& instance);

/// The constant 1/2.
Outcome mech2_half(const Instance& instance);

/// Median midpoint clamped to [1/5, 4/5].
Outcome mech3_clamped_median_midpoint(const Instance& instance);

/// 0 if at least half the agents prefer 0 (n1 >= n2), else 1.
Outcome mech4_majority_endpoint(const Instance& instance);

/// Lottery: 0 with probability n1/n, 1 with probability n2/n.
Outcome mech5_proportional_lottery(const Instance& instance);

/// 1 if s1 >= s2, else 0.
Outcome mech6_midpoint_majority(const Instance& instance);

/// Lottery: 1 with probability s1/n, 0 with probability s2/n.
Outcome mech7_midpoint_lottery(const Instance& instance);

/// Strawman: arithmetic mean of every reported coordinate. Not
/// strategy-proof; see the truthfulness tests.
Outcome mean_of_coordinates(const Instance& instance);

/// True when the instance's (setting, variant) matches the mechanism's
/// intended pairing. Ratio guarantees only apply on-label.
bool on_label(MechanismId id, const Instance& instance);

struct MechanismRun {
  Outcome outcome;
  bool off_label;
};

/// Dispatches to the mechanism. Off-label instances still run, but the
/// result is flagged so callers do not read guarantees into it.
MechanismRun run_mechanism(MechanismId id, const Instance& instance);

/// Convenience: the bare outcome.
Outcome apply_mechanism(MechanismId id, const Instance& instance);

}  // namespace satloc
