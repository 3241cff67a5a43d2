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

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "satloc/model.hpp"

namespace satloc::testing {

inline Rational q(const char* text) {
  auto value = parse_rational(text);
  if (!value) throw std::invalid_argument(text);
  return *value;
}

inline AgentProfile profile(std::initializer_list<const char*> locations) {
  std::vector<Rational> parsed;
  for (const char* text : locations) parsed.push_back(q(text));
  return AgentProfile(std::move(parsed));
}

inline Instance instance(
    Setting setting, Variant variant,
    std::initializer_list<std::initializer_list<const char*>> agents) {
  std::vector<AgentProfile> profiles;
  for (const auto& locations : agents) profiles.push_back(profile(locations));
  return Instance(setting, variant, std::move(profiles));
}

// Raw distances recomputed from scratch, so oracle checks do not share code
// with the library path they certify.
inline Rational raw_distance(const Rational& y, const AgentProfile& agent,
                             Variant variant) {
  Rational total = 0;
  Rational worst = 0;
  for (const Rational& x : agent.locations()) {
    Rational gap = y >= x ? y - x : x - y;
    total += gap;
    if (gap > worst) worst = gap;
  }
  return variant == Variant::sum ? total : worst;
}

struct BruteExtremes {
  Rational min_distance;
  Rational max_distance;
};

inline BruteExtremes brute_extremes(const AgentProfile& agent, Variant variant,
                                    long grid) {
  BruteExtremes result{raw_distance(Rational(0), agent, variant),
                       raw_distance(Rational(0), agent, variant)};
  for (long k = 1; k <= grid; ++k) {
    Rational d = raw_distance(Rational(k, grid), agent, variant);
    if (d < result.min_distance) result.min_distance = d;
    if (d > result.max_distance) result.max_distance = d;
  }
  return result;
}

// Deterministic draw in [lo, hi]; plain modulo keeps it reproducible across
// standard libraries.
inline std::uint64_t draw(std::uint64_t& state, std::uint64_t lo,
                          std::uint64_t hi) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  std::uint64_t span = hi - lo + 1;
  return lo + (state >> 17) % span;
}

inline AgentProfile random_profile(std::uint64_t& state, std::size_t max_count,
                                   long grid) {
  std::size_t count = draw(state, 1, max_count);
  std::vector<Rational> locations;
  for (std::size_t i = 0; i < count; ++i) {
    locations.emplace_back(
        static_cast<long>(draw(state, 0, static_cast<std::uint64_t>(grid))),
        grid);
  }
  return AgentProfile(std::move(locations));
}

inline Instance random_test_instance(std::uint64_t& state, Setting setting,
                                     Variant variant, std::size_t max_agents,
                                     std::size_t max_count, long grid) {
  std::size_t n = draw(state, 1, max_agents);
  std::vector<AgentProfile> agents;
  for (std::size_t i = 0; i < n; ++i) {
    agents.push_back(random_profile(state, max_count, grid));
  }
  return Instance(setting, variant, std::move(agents));
}

}  // namespace satloc::testing
