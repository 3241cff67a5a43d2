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

#include "satloc/opt.hpp"

#include <algorithm>
#include <stdexcept>

namespace satloc {

namespace {

void append_breakpoints(const AgentProfile& agent, Variant variant,
                        std::vector<Rational>& out) {
  if (variant == Variant::sum) {
    out.insert(out.end(), agent.locations().begin(), agent.locations().end());
  } else {
    out.push_back(midpoint(agent));
  }
}

void sort_unique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

Rational objective_value(const Instance& instance, Objective objective,
                         const Rational& y) {
  Rational ss = 0;
  Rational ms;
  bool first = true;
  for (const AgentProfile& agent : instance.agents) {
    Rational s = satisfaction(y, agent, instance.setting, instance.variant);
    if (objective == Objective::ss) {
      ss += s;
    } else if (first || s < ms) {
      ms = s;
      first = false;
    }
  }
  return objective == Objective::ss ? ss : ms;
}

}  // namespace

std::vector<Rational> candidate_points(const Instance& instance,
                                       Objective objective) {
  std::vector<Rational> points{Rational(0), Rational(1)};
  for (const AgentProfile& agent : instance.agents) {
    append_breakpoints(agent, instance.variant, points);
  }
  sort_unique(points);

  if (objective == Objective::ms && instance.n() > 1) {
    std::vector<Rational> intersections;
    for (std::size_t i = 0; i + 1 < instance.n(); ++i) {
      for (std::size_t j = i + 1; j < instance.n(); ++j) {
        // Common refinement of the pair's breakpoints; both satisfactions
        // are linear on each cell, so a crossing inside a cell is the root
        // of a linear equation.
        std::vector<Rational> cells{Rational(0), Rational(1)};
        append_breakpoints(instance.agents[i], instance.variant, cells);
        append_breakpoints(instance.agents[j], instance.variant, cells);
        sort_unique(cells);
        for (std::size_t c = 0; c + 1 < cells.size(); ++c) {
          const Rational& a = cells[c];
          const Rational& b = cells[c + 1];
          Rational si_a = satisfaction(a, instance.agents[i],
                                       instance.setting, instance.variant);
          Rational si_b = satisfaction(b, instance.agents[i],
                                       instance.setting, instance.variant);
          Rational sj_a = satisfaction(a, instance.agents[j],
                                       instance.setting, instance.variant);
          Rational sj_b = satisfaction(b, instance.agents[j],
                                       instance.setting, instance.variant);
          Rational rise_gap = (si_b - si_a) - (sj_b - sj_a);
          if (rise_gap == 0) continue;  // parallel on this cell
          Rational offset = (sj_a - si_a) * (b - a) / rise_gap;
          if (offset >= 0 && offset <= b - a) {
            intersections.push_back(a + offset);
          }
        }
      }
    }
    points.insert(points.end(), intersections.begin(), intersections.end());
    sort_unique(points);
  }
  return points;
}

namespace {

OptResult best_over(const Instance& instance, Objective objective,
                    const std::vector<Rational>& candidates) {
  OptResult result;
  result.objective = objective;
  result.candidates_examined = candidates.size();
  bool first = true;
  for (const Rational& y : candidates) {
    Rational value = objective_value(instance, objective, y);
    if (first || value > result.value) {
      result.location = y;
      result.value = value;
      first = false;
    }
  }
  return result;
}

}  // namespace

OptResult solve_ss(const Instance& instance) {
  return best_over(instance, Objective::ss,
                   candidate_points(instance, Objective::ss));
}

OptResult solve_ms(const Instance& instance) {
  return best_over(instance, Objective::ms,
                   candidate_points(instance, Objective::ms));
}

OptResult solve(const Instance& instance, Objective objective) {
  return objective == Objective::ss ? solve_ss(instance) : solve_ms(instance);
}

std::vector<Rational> argmax_set(const Instance& instance,
                                 Objective objective) {
  std::vector<Rational> candidates = candidate_points(instance, objective);
  OptResult best = best_over(instance, objective, candidates);
  std::vector<Rational> ties;
  for (const Rational& y : candidates) {
    if (objective_value(instance, objective, y) == best.value) {
      ties.push_back(y);
    }
  }
  return ties;
}

OptResult grid_oracle(const Instance& instance, Objective objective,
                      long grid_denominator) {
  if (grid_denominator < 1) {
    throw std::invalid_argument("grid denominator must be at least 1");
  }
  OptResult result;
  result.objective = objective;
  result.candidates_examined = static_cast<std::size_t>(grid_denominator) + 1;
  bool first = true;
  for (long k = 0; k <= grid_denominator; ++k) {
    Rational y(k, grid_denominator);
    Rational value = objective_value(instance, objective, y);
    if (first || value > result.value) {
      result.location = y;
      result.value = value;
      first = false;
    }
  }
  return result;
}

}  // namespace satloc
