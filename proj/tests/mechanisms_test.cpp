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

#include "doctest.h"
#include "helpers.hpp"
#include "satloc/opt.hpp"

using namespace satloc;
using namespace satloc::testing;

namespace {

const MechanismId kRegistryIds[] = {
    MechanismId::m1, MechanismId::m2, MechanismId::m3, MechanismId::m4,
    MechanismId::m5, MechanismId::m6, MechanismId::m7};

Instance from_midpoints(Setting setting,
                        std::initializer_list<const char*> midpoints) {
  std::vector<AgentProfile> agents;
  for (const char* text : midpoints) {
    agents.push_back(AgentProfile({q(text)}));
  }
  return Instance(setting, Variant::max, std::move(agents));
}

}  // namespace

TEST_CASE("registry descriptors") {
  const auto& registry = mechanism_registry();
  REQUIRE(registry.size() == 7);
  CHECK(registry[0].proven_ratio == rat(2));
  CHECK(registry[1].proven_ratio == rat(2));
  CHECK(registry[2].proven_ratio == rat(5, 4));
  CHECK(registry[3].proven_ratio == rat(2));
  CHECK(registry[4].proven_ratio == rat(4, 3));
  CHECK(registry[5].proven_ratio == rat(2));
  CHECK(registry[6].proven_ratio == rat(4, 3));
  for (const auto& desc : registry) {
    CHECK(desc.group_strategy_proof);
    bool is_lottery =
        desc.id == MechanismId::m5 || desc.id == MechanismId::m7;
    CHECK(desc.randomized == is_lottery);
  }
  CHECK(registry[1].intended_variants.size() == 2);
  CHECK(!descriptor(MechanismId::mean).proven_ratio.has_value());
  CHECK(mechanism_from_string("M3") == MechanismId::m3);
  CHECK(mechanism_from_string("mean") == MechanismId::mean);
  CHECK(!mechanism_from_string("M9").has_value());
  CHECK(to_string(MechanismId::m7) == "M7");
}

TEST_CASE("partition stats") {
  Instance tight = instance(Setting::obnoxious, Variant::sum,
                            {{"0", "1"}, {"0", "1/2"}});
  PartitionStats stats = partition_stats(tight);
  CHECK(stats.n1 == 1);  // sum(x) = sum(1-x) ties into N1
  CHECK(stats.n2 == 1);
  CHECK(stats.s1 == 2);  // midpoints 1/2 and 1/4; exactly 1/2 counts in S1
  CHECK(stats.s2 == 0);

  stats = partition_stats(instance(Setting::obnoxious, Variant::sum,
                                   {{"1", "1"}}));
  CHECK(stats.n1 == 1);
  CHECK(stats.n2 == 0);
}

TEST_CASE("median of medians") {
  Instance pair = instance(Setting::desirable, Variant::sum,
                           {{"0", "1/2"}, {"1/2", "1"}});
  CHECK(mech1_median_of_medians(pair) == Outcome::point(rat(0)));

  Instance three = instance(Setting::desirable, Variant::sum,
                            {{"0", "1/2"}, {"0", "1"}, {"1/2", "1"}});
  CHECK(mech1_median_of_medians(three) == Outcome::point(rat(0)));

  Instance lone = instance(Setting::desirable, Variant::sum,
                           {{"1/3", "2/3"}});
  CHECK(mech1_median_of_medians(lone) == Outcome::point(rat(1, 3)));
}

TEST_CASE("constant half") {
  Instance any = instance(Setting::obnoxious, Variant::max, {{"1/7"}});
  CHECK(mech2_half(any) == Outcome::point(rat(1, 2)));

  Instance pair = instance(Setting::desirable, Variant::sum,
                           {{"0", "1/2"}, {"0", "0"}});
  CHECK(evaluate(mech2_half(pair), pair).ms == rat(1, 2));

  Instance zeros = instance(Setting::desirable, Variant::max,
                            {{"0"}, {"0"}, {"0"}});
  CHECK(evaluate(mech2_half(zeros), zeros).ms == rat(1, 2));
}

TEST_CASE("clamped median midpoint") {
  CHECK(mech3_clamped_median_midpoint(from_midpoints(
            Setting::desirable, {"1/10", "1/10", "1/10"})) ==
        Outcome::point(rat(1, 5)));
  CHECK(mech3_clamped_median_midpoint(from_midpoints(
            Setting::desirable, {"3/10", "1/2", "9/10"})) ==
        Outcome::point(rat(1, 2)));
  CHECK(mech3_clamped_median_midpoint(from_midpoints(
            Setting::desirable, {"9/10", "19/20"})) ==
        Outcome::point(rat(4, 5)));
  CHECK(mech3_clamped_median_midpoint(from_midpoints(
            Setting::desirable, {"1/5"})) == Outcome::point(rat(1, 5)));
}

TEST_CASE("majority endpoint") {
  Instance tight = instance(Setting::obnoxious, Variant::sum,
                            {{"0", "1"}, {"0", "1/2"}});
  CHECK(mech4_majority_endpoint(tight) == Outcome::point(rat(0)));

  Instance low = instance(Setting::obnoxious, Variant::sum,
                          {{"0", "1/4"}, {"1/8", "1/8"}});
  CHECK(mech4_majority_endpoint(low) == Outcome::point(rat(1)));

  Instance ones = instance(Setting::obnoxious, Variant::sum, {{"1", "1"}});
  CHECK(mech4_majority_endpoint(ones) == Outcome::point(rat(0)));
}

TEST_CASE("proportional endpoint lottery") {
  Instance tight = instance(Setting::obnoxious, Variant::sum,
                            {{"0", "1"}, {"0", "1/2"}});
  Outcome lot = mech5_proportional_lottery(tight);
  CHECK(lot == Outcome::lottery({{rat(0), rat(1, 2)}, {rat(1), rat(1, 2)}}));
  CHECK(evaluate(lot, tight).ss == rat(3, 2));

  Instance all_high = instance(Setting::obnoxious, Variant::sum,
                               {{"1", "1"}, {"3/4", "1"}});
  CHECK(mech5_proportional_lottery(all_high) == Outcome::point(rat(0)));

  Instance split = instance(Setting::obnoxious, Variant::sum,
                            {{"1"}, {"0"}, {"1/4"}});
  CHECK(mech5_proportional_lottery(split) ==
        Outcome::lottery({{rat(0), rat(1, 3)}, {rat(1), rat(2, 3)}}));
}

TEST_CASE("midpoint majority") {
  CHECK(mech6_midpoint_majority(from_midpoints(
            Setting::obnoxious, {"3/10", "7/10", "2/5"})) ==
        Outcome::point(rat(1)));
  CHECK(mech6_midpoint_majority(from_midpoints(Setting::obnoxious,
                                               {"3/5", "7/10"})) ==
        Outcome::point(rat(0)));
  // A midpoint of exactly 1/2 lands in S1.
  CHECK(mech6_midpoint_majority(from_midpoints(Setting::obnoxious,
                                               {"1/2", "3/4"})) ==
        Outcome::point(rat(1)));
}

TEST_CASE("midpoint lottery") {
  CHECK(mech7_midpoint_lottery(from_midpoints(Setting::obnoxious,
                                              {"3/10", "7/10"})) ==
        Outcome::lottery({{rat(0), rat(1, 2)}, {rat(1), rat(1, 2)}}));
  CHECK(mech7_midpoint_lottery(from_midpoints(Setting::obnoxious,
                                              {"1/8", "7/8"})) ==
        Outcome::lottery({{rat(0), rat(1, 2)}, {rat(1), rat(1, 2)}}));
  CHECK(mech7_midpoint_lottery(from_midpoints(Setting::obnoxious,
                                              {"1/4", "1/2"})) ==
        Outcome::point(rat(1)));
}

TEST_CASE("dispatch and off-label flag") {
  Instance tight = instance(Setting::obnoxious, Variant::sum,
                            {{"0", "1"}, {"0", "1/2"}});
  MechanismRun run = run_mechanism(MechanismId::m4, tight);
  CHECK(run.outcome == Outcome::point(rat(0)));
  CHECK(!run.off_label);

  CHECK(run_mechanism(MechanismId::m2, tight).outcome ==
        Outcome::point(rat(1, 2)));

  run = run_mechanism(MechanismId::m1, tight);
  CHECK(run.off_label);  // obnoxious instance, desirable mechanism

  Instance both = instance(Setting::desirable, Variant::max, {{"0", "1"}});
  CHECK(!run_mechanism(MechanismId::m2, both).off_label);
  CHECK(run_mechanism(MechanismId::m3, instance(Setting::desirable,
                                                Variant::sum, {{"0"}}))
            .off_label);
}

TEST_CASE("mechanisms are anonymous") {
  std::uint64_t state = 321;
  for (int trial = 0; trial < 40; ++trial) {
    Setting setting = trial % 2 ? Setting::desirable : Setting::obnoxious;
    Variant variant = trial % 3 ? Variant::sum : Variant::max;
    Instance inst = random_test_instance(state, setting, variant, 4, 3, 12);
    Instance shuffled = inst;
    std::size_t swaps = draw(state, 1, 4);
    for (std::size_t s = 0; s < swaps && inst.n() > 1; ++s) {
      std::size_t i = draw(state, 0, inst.n() - 1);
      std::size_t j = draw(state, 0, inst.n() - 1);
      std::swap(shuffled.agents[i], shuffled.agents[j]);
    }
    for (MechanismId id : kRegistryIds) {
      CHECK(apply_mechanism(id, inst) == apply_mechanism(id, shuffled));
    }
  }
}

TEST_CASE("lottery expectations follow the endpoint split") {
  std::uint64_t state = 654;
  for (int trial = 0; trial < 40; ++trial) {
    Variant variant = trial % 2 ? Variant::sum : Variant::max;
    Instance inst = random_test_instance(state, Setting::obnoxious, variant,
                                         5, 3, 10);
    PartitionStats stats = partition_stats(inst);
    Rational n(inst.n());
    Rational ss0 = evaluate(Outcome::point(rat(0)), inst).ss;
    Rational ss1 = evaluate(Outcome::point(rat(1)), inst).ss;

    Outcome m5 = mech5_proportional_lottery(inst);
    CHECK(evaluate(m5, inst).ss ==
          (Rational(stats.n1) * ss0 + Rational(stats.n2) * ss1) / n);

    Outcome m7 = mech7_midpoint_lottery(inst);
    CHECK(evaluate(m7, inst).ss ==
          (Rational(stats.s1) * ss1 + Rational(stats.s2) * ss0) / n);
  }
}
