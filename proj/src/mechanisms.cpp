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

#include "satloc/mechanisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace satloc {

std::string to_string(MechanismId id) {
  switch (id) {
    case MechanismId::m1: return "M1";
    case MechanismId::m2: return "M2";
    case MechanismId::m3: return "M3";
    case MechanismId::m4: return "M4";
    case MechanismId::m5: return "M5";
    case MechanismId::m6: return "M6";
    case MechanismId::m7: return "M7";
    case MechanismId::mean: return "MEAN";
  }
  throw std::logic_error("unknown mechanism id");
}

std::optional<MechanismId> mechanism_from_string(std::string_view text) {
  if (text == "M1" || text == "m1") return MechanismId::m1;
  if (text == "M2" || text == "m2") return MechanismId::m2;
  if (text == "M3" || text == "m3") return MechanismId::m3;
  if (text == "M4" || text == "m4") return MechanismId::m4;
  if (text == "M5" || text == "m5") return MechanismId::m5;
  if (text == "M6" || text == "m6") return MechanismId::m6;
  if (text == "M7" || text == "m7") return MechanismId::m7;
  if (text == "MEAN" || text == "mean") return MechanismId::mean;
  return std::nullopt;
}

const std::vector<MechanismDescriptor>& mechanism_registry() {
  static const std::vector<MechanismDescriptor> registry = {
      {MechanismId::m1, "median of medians", Setting::desirable,
       {Variant::sum}, Objective::ss, rat(2), false, true},
      {MechanismId::m2, "constant half", Setting::desirable,
       {Variant::sum, Variant::max}, Objective::ms, rat(2), false, true},
      {MechanismId::m3, "clamped median midpoint", Setting::desirable,
       {Variant::max}, Objective::ss, rat(5, 4), false, true},
      {MechanismId::m4, "majority endpoint", Setting::obnoxious,
       {Variant::sum}, Objective::ss, rat(2), false, true},
      {MechanismId::m5, "proportional endpoint lottery", Setting::obnoxious,
       {Variant::sum}, Objective::ss, rat(4, 3), true, true},
      {MechanismId::m6, "midpoint majority", Setting::obnoxious,
       {Variant::max}, Objective::ss, rat(2), false, true},
      {MechanismId::m7, "midpoint lottery", Setting::obnoxious,
       {Variant::max}, Objective::ss, rat(4, 3), true, true},
  };
  return registry;
}

const MechanismDescriptor& descriptor(MechanismId id) {
  if (id == MechanismId::mean) {
    static const MechanismDescriptor strawman = {
        MechanismId::mean, "coordinate mean (strawman)", Setting::desirable,
        {Variant::sum},    Objective::ss,                std::nullopt,
        false,             false};
    return strawman;
  }
  return mechanism_registry()[static_cast<std::size_t>(id)];
}

PartitionStats partition_stats(const Instance& instance) {
  PartitionStats stats;
  for (const AgentProfile& agent : instance.agents) {
    Rational coordinate_sum = 0;
    for (const Rational& x : agent.locations()) coordinate_sum += x;
    // sum(x) >= sum(1-x)  <=>  2 sum(x) >= omega
    if (2 * coordinate_sum >= Rational(agent.count())) {
      ++stats.n1;
    } else {
      ++stats.n2;
    }
    if (midpoint(agent) <= Rational(1, 2)) {
      ++stats.s1;
    } else {
      ++stats.s2;
    }
  }
  return stats;
}

Outcome mech1_median_of_medians(const Instance& instance) {
  std::vector<Rational> medians;
  medians.reserve(instance.n());
  for (const AgentProfile& agent : instance.agents) {
    medians.push_back(left_median(agent));
  }
  std::stable_sort(medians.begin(), medians.end());
  return Outcome::point(medians[(medians.size() - 1) / 2]);
}

Outcome mech2_half(const Instance&) { return Outcome::point(rat(1, 2)); }

Outcome mech3_clamped_median_midpoint(const Instance& instance) {
  std::vector<Rational> midpoints;
  midpoints.reserve(instance.n());
  for (const AgentProfile& agent : instance.agents) {
    midpoints.push_back(midpoint(agent));
  }
  std::stable_sort(midpoints.begin(), midpoints.end());
  Rational median = midpoints[(midpoints.size() - 1) / 2];
  if (median <= rat(1, 5)) return Outcome::point(rat(1, 5));
  if (median >= rat(4, 5)) return Outcome::point(rat(4, 5));
  return Outcome::point(median);
}

Outcome mech4_majority_endpoint(const Instance& instance) {
  PartitionStats stats = partition_stats(instance);
  return Outcome::point(stats.n1 >= stats.n2 ? Rational(0) : Rational(1));
}

Outcome mech5_proportional_lottery(const Instance& instance) {
  PartitionStats stats = partition_stats(instance);
  Rational n(instance.n());
  return Outcome::lottery({{Rational(0), Rational(stats.n1) / n},
                           {Rational(1), Rational(stats.n2) / n}});
}

Outcome mech6_midpoint_majority(const Instance& instance) {
  PartitionStats stats = partition_stats(instance);
  return Outcome::point(stats.s1 >= stats.s2 ? Rational(1) : Rational(0));
}

Outcome mech7_midpoint_lottery(const Instance& instance) {
  PartitionStats stats = partition_stats(instance);
  Rational n(instance.n());
  return Outcome::lottery({{Rational(1), Rational(stats.s1) / n},
                           {Rational(0), Rational(stats.s2) / n}});
}

Outcome mean_of_coordinates(const Instance& instance) {
  Rational total = 0;
  for (const AgentProfile& agent : instance.agents) {
    for (const Rational& x : agent.locations()) total += x;
  }
  return Outcome::point(total / Rational(instance.total_locations()));
}

bool on_label(MechanismId id, const Instance& instance) {
  const MechanismDescriptor& desc = descriptor(id);
  if (desc.intended_setting != instance.setting) return false;
  return std::find(desc.intended_variants.begin(),
                   desc.intended_variants.end(),
                   instance.variant) != desc.intended_variants.end();
}

Outcome apply_mechanism(MechanismId id, const Instance& instance) {
  switch (id) {
    case MechanismId::m1: return mech1_median_of_medians(instance);
    case MechanismId::m2: return mech2_half(instance);
    case MechanismId::m3: return mech3_clamped_median_midpoint(instance);
    case MechanismId::m4: return mech4_majority_endpoint(instance);
    case MechanismId::m5: return mech5_proportional_lottery(instance);
    case MechanismId::m6: return mech6_midpoint_majority(instance);
    case MechanismId::m7: return mech7_midpoint_lottery(instance);
    case MechanismId::mean: return mean_of_coordinates(instance);
  }
  throw std::logic_error("unknown mechanism id");
}

MechanismRun run_mechanism(MechanismId id, const Instance& instance) {
  return {apply_mechanism(id, instance), !on_label(id, instance)};
}

}  // namespace satloc
