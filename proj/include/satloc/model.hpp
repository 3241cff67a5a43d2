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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satloc/rational.hpp"

namespace satloc {

/// Whether agents want the facility close (desirable) or far (obnoxious).
enum class Setting { desirable, obnoxious };

/// Which distance drives an agent's satisfaction: the total distance to all
/// of her locations (sum) or the distance to the farthest one (max).
enum class Variant { sum, max };

/// Social objective: total satisfaction (ss) or minimum satisfaction (ms).
enum class Objective { ss, ms };

std::string to_string(Setting s);
std::string to_string(Variant v);
std::string to_string(Objective o);
std::optional<Setting> setting_from_string(std::string_view text);
std::optional<Variant> variant_from_string(std::string_view text);
std::optional<Objective> objective_from_string(std::string_view text);

/// The locations controlled by one agent, sorted non-decreasing, all in
/// [0,1]. Duplicates are allowed; the count is the agent's weight.
class AgentProfile {
 public:
  /// Sorts the locations; throws std::invalid_argument on an empty list or
  /// a location outside [0,1].
  explicit AgentProfile(std::vector<Rational> locations);

  std::size_t count() const { return locations_.size(); }
  const std::vector<Rational>& locations() const { return locations_; }
  const Rational& first() const { return locations_.front(); }
  const Rational& last() const { return locations_.back(); }

  bool operator==(const AgentProfile&) const = default;

 private:
  std::vector<Rational> locations_;
};

/// A full game instance: the setting, the distance variant, and one profile
/// per agent (at least one agent).
struct Instance {
  Setting setting;
  Variant variant;
  std::vector<AgentProfile> agents;

  Instance(Setting s, Variant v, std::vector<AgentProfile> a);

  std::size_t n() const { return agents.size(); }
  std::size_t total_locations() const;

  bool operator==(const Instance&) const = default;
};

/// A deterministic facility point or a finite lottery over points. Stored as
/// a support list sorted by point, with distinct points, strictly positive
/// probabilities, and probabilities summing to exactly 1. A point outcome is
/// the singleton lottery.
class Outcome {
 public:
  static Outcome point(Rational y);

  /// Merges duplicate points, drops zero-probability entries, and validates
  /// range and total mass; throws std::invalid_argument on violation.
  static Outcome lottery(std::vector<std::pair<Rational, Rational>> support);

  bool is_point() const { return support_.size() == 1; }
  const Rational& point_value() const;
  /// (point, probability) pairs, sorted by point.
  const std::vector<std::pair<Rational, Rational>>& support() const {
    return support_;
  }

  bool operator==(const Outcome&) const = default;

 private:
  explicit Outcome(std::vector<std::pair<Rational, Rational>> support)
      : support_(std::move(support)) {}

  std::vector<std::pair<Rational, Rational>> support_;
};

std::string to_string(const Outcome& outcome);

/// Per-agent (expected) satisfactions together with the two aggregates.
struct SatisfactionProfile {
  std::vector<Rational> per_agent;  // each in [0,1]
  Rational ss;                      // sum of per_agent
  Rational ms;                      // min of per_agent
};

/// Total distance from y to every location of the profile.
Rational d1(const Rational& y, const AgentProfile& profile);

/// Distance from y to the farthest location of the profile. Equals
/// |y - midpoint| + (last - first)/2.
Rational d2(const Rational& y, const AgentProfile& profile);

/// (first + last) / 2: the profile's best point under the max variant.
Rational midpoint(const AgentProfile& profile);

/// The left median of the sorted locations: the profile's best point under
/// the sum variant.
Rational left_median(const AgentProfile& profile);

struct DistanceExtremes {
  Rational min_distance;  // over facility points in [0,1]
  Rational max_distance;
};

DistanceExtremes distance_extremes(const AgentProfile& profile,
                                   Variant variant);

/// True when the profile's distance is constant over [0,1]; only possible
/// under the sum variant, for equal numbers of 0s and 1s.
bool degenerate(const AgentProfile& profile, Variant variant);

/// Indices of degenerate agents; whenever non-empty, reports should say so,
/// because those agents score 1 everywhere by convention.
std::vector<std::size_t> degenerate_agents(const Instance& instance);

/// Normalized score in [0,1]: 1 at the agent's best achievable distance and
/// 0 at her worst (desirable), or the reverse (obnoxious). A degenerate
/// profile scores 1 in both settings. Throws std::domain_error for y
/// outside [0,1].
Rational satisfaction(const Rational& y, const AgentProfile& profile,
                      Setting setting, Variant variant);

/// Expected satisfaction of one profile under an outcome.
Rational expected_satisfaction(const Outcome& outcome,
                               const AgentProfile& profile, Setting setting,
                               Variant variant);

/// Per-agent expected satisfactions plus SS (their sum) and MS (their min).
SatisfactionProfile evaluate(const Outcome& outcome, const Instance& instance);

}  // namespace satloc
