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

#include "satloc/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace satloc {

std::string to_string(Setting s) {
  return s == Setting::desirable ? "desirable" : "obnoxious";
}

std::string to_string(Variant v) { return v == Variant::sum ? "sum" : "max"; }

std::string to_string(Objective o) { return o == Objective::ss ? "ss" : "ms"; }

std::optional<Setting> setting_from_string(std::string_view text) {
  if (text == "desirable") return Setting::desirable;
  if (text == "obnoxious") return Setting::obnoxious;
  return std::nullopt;
}

std::optional<Variant> variant_from_string(std::string_view text) {
  if (text == "sum") return Variant::sum;
  if (text == "max") return Variant::max;
  return std::nullopt;
}

std::optional<Objective> objective_from_string(std::string_view text) {
  if (text == "ss") return Objective::ss;
  if (text == "ms") return Objective::ms;
  return std::nullopt;
}

AgentProfile::AgentProfile(std::vector<Rational> locations)
    : locations_(std::move(locations)) {
  if (locations_.empty()) {
    throw std::invalid_argument("agent profile must contain a location");
  }
  for (const Rational& x : locations_) {
    if (!in_unit_interval(x)) {
      throw std::invalid_argument("agent location outside [0,1]: " +
                                  to_string(x));
    }
  }
  std::sort(locations_.begin(), locations_.end());
}

Instance::Instance(Setting s, Variant v, std::vector<AgentProfile> a)
    : setting(s), variant(v), agents(std::move(a)) {
  if (agents.empty()) {
    throw std::invalid_argument("instance must contain an agent");
  }
}

std::size_t Instance::total_locations() const {
  std::size_t total = 0;
  for (const AgentProfile& agent : agents) total += agent.count();
  return total;
}

Outcome Outcome::point(Rational y) {
  return Outcome::lottery({{std::move(y), Rational(1)}});
}

Outcome Outcome::lottery(std::vector<std::pair<Rational, Rational>> support) {
  std::sort(support.begin(), support.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Rational, Rational>> merged;
  Rational total = 0;
  for (auto& [point, prob] : support) {
    if (!in_unit_interval(point)) {
      throw std::invalid_argument("lottery point outside [0,1]: " +
                                  to_string(point));
    }
    if (prob < 0) {
      throw std::invalid_argument("negative lottery probability: " +
                                  to_string(prob));
    }
    total += prob;
    if (prob == 0) continue;
    if (!merged.empty() && merged.back().first == point) {
      merged.back().second += prob;
    } else {
      merged.emplace_back(std::move(point), std::move(prob));
    }
  }
  if (total != 1) {
    throw std::invalid_argument("lottery probabilities sum to " +
                                to_string(total) + ", not 1");
  }
  return Outcome(std::move(merged));
}

const Rational& Outcome::point_value() const {
  if (!is_point()) {
    throw std::logic_error("outcome is a non-degenerate lottery");
  }
  return support_.front().first;
}

std::string to_string(const Outcome& outcome) {
  if (outcome.is_point()) {
    return "point " + to_string(outcome.point_value());
  }
  std::string text = "lottery {";
  bool first = true;
  for (const auto& [point, prob] : outcome.support()) {
    if (!first) text += ", ";
    text += to_string(point) + ": " + to_string(prob);
    first = false;
  }
  return text + "}";
}

Rational d1(const Rational& y, const AgentProfile& profile) {
  if (!in_unit_interval(y)) {
    throw std::domain_error("facility location outside [0,1]: " +
                            to_string(y));
  }
  Rational total = 0;
  for (const Rational& x : profile.locations()) {
    total += y >= x ? y - x : x - y;
  }
  return total;
}

Rational d2(const Rational& y, const AgentProfile& profile) {
  if (!in_unit_interval(y)) {
    throw std::domain_error("facility location outside [0,1]: " +
                            to_string(y));
  }
  // The farthest location is one of the two extremes.
  Rational to_first = y >= profile.first() ? y - profile.first()
                                           : profile.first() - y;
  Rational to_last = y >= profile.last() ? y - profile.last()
                                         : profile.last() - y;
  return std::max(to_first, to_last);
}

Rational midpoint(const AgentProfile& profile) {
  return (profile.first() + profile.last()) / 2;
}

Rational left_median(const AgentProfile& profile) {
  // x_{ceil(omega/2)} in 1-based indexing.
  return profile.locations()[(profile.count() - 1) / 2];
}

DistanceExtremes distance_extremes(const AgentProfile& profile,
                                   Variant variant) {
  if (variant == Variant::sum) {
    // d1 is convex piecewise linear: minimized at the median, maximized at
    // an endpoint of [0,1].
    Rational at_zero = 0;
    Rational at_one = 0;
    for (const Rational& x : profile.locations()) {
      at_zero += x;
      at_one += 1 - x;
    }
    return {d1(left_median(profile), profile), std::max(at_zero, at_one)};
  }
  Rational spread_half = (profile.last() - profile.first()) / 2;
  Rational center = midpoint(profile);
  return {spread_half, std::max(center, 1 - center) + spread_half};
}

bool degenerate(const AgentProfile& profile, Variant variant) {
  DistanceExtremes extremes = distance_extremes(profile, variant);
  return extremes.min_distance == extremes.max_distance;
}

std::vector<std::size_t> degenerate_agents(const Instance& instance) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < instance.n(); ++i) {
    if (degenerate(instance.agents[i], instance.variant)) indices.push_back(i);
  }
  return indices;
}

Rational satisfaction(const Rational& y, const AgentProfile& profile,
                      Setting setting, Variant variant) {
  Rational distance =
      variant == Variant::sum ? d1(y, profile) : d2(y, profile);
  DistanceExtremes extremes = distance_extremes(profile, variant);
  if (extremes.min_distance == extremes.max_distance) {
    return Rational(1);  // degenerate profile: fully satisfied everywhere
  }
  Rational normalized = (distance - extremes.min_distance) /
                        (extremes.max_distance - extremes.min_distance);
  return setting == Setting::obnoxious ? normalized : 1 - normalized;
}

Rational expected_satisfaction(const Outcome& outcome,
                               const AgentProfile& profile, Setting setting,
                               Variant variant) {
  Rational expectation = 0;
  for (const auto& [point, prob] : outcome.support()) {
    expectation += prob * satisfaction(point, profile, setting, variant);
  }
  return expectation;
}

SatisfactionProfile evaluate(const Outcome& outcome,
                             const Instance& instance) {
  SatisfactionProfile result;
  result.per_agent.reserve(instance.n());
  for (const AgentProfile& agent : instance.agents) {
    result.per_agent.push_back(expected_satisfaction(
        outcome, agent, instance.setting, instance.variant));
  }
  result.ss = 0;
  result.ms = result.per_agent.front();
  for (const Rational& s : result.per_agent) {
    result.ss += s;
    result.ms = std::min(result.ms, s);
  }
  return result;
}

}  // namespace satloc
