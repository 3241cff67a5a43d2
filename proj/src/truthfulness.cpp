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

#include "satloc/truthfulness.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace satloc {

namespace {

void sort_unique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

std::vector<Rational> candidate_values(const Instance& instance,
                                       std::size_t agent,
                                       long grid_denominator) {
  std::vector<Rational> base;
  for (std::size_t j = 0; j < instance.n(); ++j) {
    if (j == agent) continue;
    base.push_back(left_median(instance.agents[j]));
    base.push_back(midpoint(instance.agents[j]));
  }
  base.push_back(rat(0));
  base.push_back(rat(1, 5));
  base.push_back(rat(1, 2));
  base.push_back(rat(4, 5));
  base.push_back(rat(1));
  for (long k = 0; k <= grid_denominator; ++k) {
    base.emplace_back(k, grid_denominator);
  }
  sort_unique(base);
  std::vector<Rational> values = base;
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    values.push_back((base[i] + base[i + 1]) / 2);
  }
  sort_unique(values);
  return values;
}

// The registry mechanisms read each agent only through one statistic, so a
// joint deviation by constant profiles can be run on the statistic vectors
// directly. The strawman needs the raw coordinates; it keeps a slow path.
struct DeviationContext {
  MechanismId id;
  const Instance& instance;
  std::vector<Rational> medians;    // per agent
  std::vector<Rational> midpoints;  // per agent
  std::vector<bool> prefers_zero;   // N1 membership
  Rational coordinate_total;        // for the strawman
  std::vector<Rational> agent_coordinate_sums;

  explicit DeviationContext(MechanismId mechanism, const Instance& inst)
      : id(mechanism), instance(inst), coordinate_total(0) {
    for (const AgentProfile& agent : inst.agents) {
      medians.push_back(left_median(agent));
      midpoints.push_back(midpoint(agent));
      Rational sum = 0;
      for (const Rational& x : agent.locations()) sum += x;
      agent_coordinate_sums.push_back(sum);
      coordinate_total += sum;
      prefers_zero.push_back(2 * sum >= Rational(agent.count()));
    }
  }

  // Outcome when each coalition member reports the constant profile of her
  // value. Members are ascending, values parallel.
  Outcome outcome_for(const std::vector<std::size_t>& members,
                      const std::vector<const Rational*>& values) const {
    switch (id) {
      case MechanismId::m2:
        return Outcome::point(rat(1, 2));
      case MechanismId::m1:
      case MechanismId::m3: {
        const std::vector<Rational>& stats =
            id == MechanismId::m1 ? medians : midpoints;
        std::vector<Rational> reported = stats;
        for (std::size_t m = 0; m < members.size(); ++m) {
          reported[members[m]] = *values[m];
        }
        std::sort(reported.begin(), reported.end());
        Rational median = reported[(reported.size() - 1) / 2];
        if (id == MechanismId::m1) return Outcome::point(median);
        if (median <= rat(1, 5)) return Outcome::point(rat(1, 5));
        if (median >= rat(4, 5)) return Outcome::point(rat(4, 5));
        return Outcome::point(median);
      }
      case MechanismId::m4:
      case MechanismId::m5: {
        std::size_t n1 = 0;
        std::size_t v = 0;
        for (std::size_t i = 0; i < instance.n(); ++i) {
          if (v < members.size() && members[v] == i) {
            if (*values[v] >= rat(1, 2)) ++n1;
            ++v;
          } else if (prefers_zero[i]) {
            ++n1;
          }
        }
        std::size_t n2 = instance.n() - n1;
        if (id == MechanismId::m4) {
          return Outcome::point(n1 >= n2 ? rat(0) : rat(1));
        }
        return Outcome::lottery(
            {{rat(0), Rational(n1) / Rational(instance.n())},
             {rat(1), Rational(n2) / Rational(instance.n())}});
      }
      case MechanismId::m6:
      case MechanismId::m7: {
        std::size_t s1 = 0;
        std::size_t v = 0;
        for (std::size_t i = 0; i < instance.n(); ++i) {
          if (v < members.size() && members[v] == i) {
            if (*values[v] <= rat(1, 2)) ++s1;
            ++v;
          } else if (midpoints[i] <= rat(1, 2)) {
            ++s1;
          }
        }
        std::size_t s2 = instance.n() - s1;
        if (id == MechanismId::m6) {
          return Outcome::point(s1 >= s2 ? rat(1) : rat(0));
        }
        return Outcome::lottery(
            {{rat(1), Rational(s1) / Rational(instance.n())},
             {rat(0), Rational(s2) / Rational(instance.n())}});
      }
      case MechanismId::mean: {
        Rational total = coordinate_total;
        for (std::size_t m = 0; m < members.size(); ++m) {
          std::size_t i = members[m];
          total -= agent_coordinate_sums[i];
          total += Rational(instance.agents[i].count()) * *values[m];
        }
        return Outcome::point(total /
                              Rational(instance.total_locations()));
      }
    }
    throw std::logic_error("unknown mechanism id");
  }
};

// Expected satisfaction of one agent's true profile under an outcome, with a
// per-point memo (outcomes repeat heavily across the deviation sweep).
class SatisfactionMemo {
 public:
  SatisfactionMemo(const Instance& instance, std::size_t agent)
      : instance_(instance), agent_(agent) {}

  const Rational& at_point(const Rational& y) {
    auto it = memo_.find(y);
    if (it == memo_.end()) {
      it = memo_
               .emplace(y, satisfaction(y, instance_.agents[agent_],
                                        instance_.setting, instance_.variant))
               .first;
    }
    return it->second;
  }

  Rational of(const Outcome& outcome) {
    Rational expectation = 0;
    for (const auto& [point, prob] : outcome.support()) {
      expectation += prob * at_point(point);
    }
    return expectation;
  }

 private:
  const Instance& instance_;
  std::size_t agent_;
  std::map<Rational, Rational> memo_;
};

// Re-runs the witness through the ordinary mechanism path and checks the
// strict improvements really hold; guards the statistic fast path.
Misreport verified_witness(MechanismId id, const Instance& instance,
                           const std::vector<std::size_t>& members,
                           std::vector<AgentProfile> reported,
                           const std::vector<Rational>& truthful) {
  Instance deviated = instance;
  for (std::size_t m = 0; m < members.size(); ++m) {
    deviated.agents[members[m]] = reported[m];
  }
  Outcome outcome = apply_mechanism(id, deviated);
  Misreport witness{members, std::move(reported), outcome, {}, {}};
  for (std::size_t m = 0; m < members.size(); ++m) {
    Rational after =
        expected_satisfaction(outcome, instance.agents[members[m]],
                              instance.setting, instance.variant);
    Rational before = truthful[members[m]];
    if (after <= before) {
      throw std::logic_error("witness failed re-verification");
    }
    witness.truthful_satisfaction.push_back(before);
    witness.deviated_satisfaction.push_back(after);
  }
  return witness;
}

struct Search {
  const DeviationContext& ctx;
  const Outcome& truthful_outcome;
  const std::vector<Rational>& truthful;
  std::vector<SatisfactionMemo>& memos;
  const std::vector<std::vector<Rational>>& values_per_agent;
  std::size_t budget;
  std::size_t tried = 0;
  bool exhausted_budget = false;
  std::optional<Misreport> witness;

  // Odometer over the members' candidate values; stops at the first joint
  // deviation where every member strictly improves.
  void run_coalition(const std::vector<std::size_t>& members) {
    std::vector<std::size_t> pick(members.size(), 0);
    std::vector<const Rational*> values(members.size());
    while (true) {
      if (tried >= budget) {
        exhausted_budget = true;
        return;
      }
      ++tried;
      for (std::size_t m = 0; m < members.size(); ++m) {
        values[m] = &values_per_agent[members[m]][pick[m]];
      }
      Outcome outcome = ctx.outcome_for(members, values);
      if (!(outcome == truthful_outcome)) {
        bool all_improve = true;
        for (std::size_t m = 0; m < members.size(); ++m) {
          if (memos[members[m]].of(outcome) <= truthful[members[m]]) {
            all_improve = false;
            break;
          }
        }
        if (all_improve) {
          std::vector<AgentProfile> reported;
          for (std::size_t m = 0; m < members.size(); ++m) {
            reported.push_back(AgentProfile(std::vector<Rational>(
                ctx.instance.agents[members[m]].count(), *values[m])));
          }
          witness = verified_witness(ctx.id, ctx.instance, members,
                                     std::move(reported), truthful);
          return;
        }
      }
      // advance the odometer
      std::size_t m = members.size();
      while (m > 0) {
        --m;
        if (++pick[m] < values_per_agent[members[m]].size()) break;
        pick[m] = 0;
        if (m == 0) return;
      }
    }
  }
};

SPReport check_coalitions(MechanismId id, const Instance& instance,
                          std::size_t max_coalition_size,
                          long grid_denominator, std::size_t budget) {
  if (grid_denominator < 2) {
    throw std::invalid_argument("misreport grid must be at least 2");
  }
  max_coalition_size = std::min(max_coalition_size, instance.n());

  DeviationContext ctx(id, instance);
  Outcome truthful_outcome = apply_mechanism(id, instance);
  std::vector<Rational> truthful;
  std::vector<SatisfactionMemo> memos;
  std::vector<std::vector<Rational>> values_per_agent;
  for (std::size_t i = 0; i < instance.n(); ++i) {
    memos.emplace_back(instance, i);
    values_per_agent.push_back(
        candidate_values(instance, i, grid_denominator));
  }
  for (std::size_t i = 0; i < instance.n(); ++i) {
    truthful.push_back(memos[i].of(truthful_outcome));
  }

  Search search{ctx,   truthful_outcome, truthful,
                memos, values_per_agent, budget};

  // Coalitions in lexicographic order within each size, sizes ascending.
  std::vector<std::size_t> members;
  auto recurse = [&](auto&& self, std::size_t next,
                     std::size_t remaining) -> bool {
    if (remaining == 0) {
      search.run_coalition(members);
      return search.witness.has_value() || search.exhausted_budget;
    }
    for (std::size_t i = next; i + remaining <= instance.n(); ++i) {
      members.push_back(i);
      bool stop = self(self, i + 1, remaining - 1);
      members.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (std::size_t size = 1; size <= max_coalition_size; ++size) {
    if (recurse(recurse, 0, size)) break;
  }

  SPReport report;
  report.candidates_tried = search.tried;
  if (search.witness) {
    report.verdict = Verdict::violated;
    report.witness = std::move(search.witness);
  } else if (search.exhausted_budget) {
    report.inconclusive = true;
  }
  return report;
}

}  // namespace

std::vector<AgentProfile> misreport_candidates(MechanismId,
                                               const Instance& instance,
                                               std::size_t agent,
                                               long grid_denominator) {
  if (agent >= instance.n()) {
    throw std::invalid_argument("agent index out of range");
  }
  if (grid_denominator < 2) {
    throw std::invalid_argument("misreport grid must be at least 2");
  }
  std::vector<AgentProfile> candidates;
  for (const Rational& v : candidate_values(instance, agent,
                                            grid_denominator)) {
    candidates.push_back(AgentProfile(
        std::vector<Rational>(instance.agents[agent].count(), v)));
  }
  return candidates;
}

SPReport check_sp(MechanismId id, const Instance& instance,
                  long grid_denominator) {
  // A coalition of one, with no practical budget.
  return check_coalitions(id, instance, 1, grid_denominator,
                          std::numeric_limits<std::size_t>::max());
}

SPReport check_gsp(MechanismId id, const Instance& instance,
                   std::size_t max_coalition_size, long grid_denominator,
                   std::size_t budget) {
  return check_coalitions(id, instance, max_coalition_size, grid_denominator,
                          budget);
}

}  // namespace satloc
