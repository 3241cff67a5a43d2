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

#include "satloc/ratio.hpp"

#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "satloc/opt.hpp"

namespace satloc {

const Rational& RatioValue::value() const {
  if (unbounded_) {
    throw std::logic_error("unbounded ratio has no rational value");
  }
  return value_;
}

bool RatioValue::operator<(const RatioValue& other) const {
  if (unbounded_) return false;
  if (other.unbounded_) return true;
  return value_ < other.value_;
}

std::string to_string(const RatioValue& ratio) {
  return ratio.is_unbounded() ? "unbounded" : to_string(ratio.value());
}

RatioValue ratio(MechanismId id, const Instance& instance,
                 Objective objective) {
  Rational opt_value = solve(instance, objective).value;
  SatisfactionProfile achieved =
      evaluate(apply_mechanism(id, instance), instance);
  Rational mech_value = objective == Objective::ss ? achieved.ss : achieved.ms;
  if (mech_value == 0) {
    return opt_value == 0 ? RatioValue::bounded(Rational(1))
                          : RatioValue::unbounded();
  }
  return RatioValue::bounded(opt_value / mech_value);
}

namespace {

std::uint64_t next_draw(std::uint64_t& state, std::uint64_t lo,
                        std::uint64_t hi) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return lo + (state >> 17) % (hi - lo + 1);
}

}  // namespace

Instance random_instance(const GeneratorConfig& config, std::uint64_t& state) {
  if (config.n_max < 1 || config.omega_max < 1 ||
      config.grid_denominator < 1) {
    throw std::invalid_argument("generator bounds must be at least 1");
  }
  std::size_t n = next_draw(state, 1, config.n_max);
  std::vector<AgentProfile> agents;
  agents.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t count = next_draw(state, 1, config.omega_max);
    std::vector<Rational> locations;
    locations.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
      locations.emplace_back(
          static_cast<long>(next_draw(
              state, 0, static_cast<std::uint64_t>(config.grid_denominator))),
          config.grid_denominator);
    }
    agents.push_back(AgentProfile(std::move(locations)));
  }
  return Instance(config.setting, config.variant, std::move(agents));
}

namespace {

TightCase make_case(std::string anchor, MechanismId id, Objective objective,
                    Setting setting, Variant variant,
                    std::initializer_list<std::initializer_list<const char*>>
                        agents,
                    RatioValue expected) {
  std::vector<AgentProfile> profiles;
  for (const auto& locations : agents) {
    std::vector<Rational> parsed;
    for (const char* text : locations) {
      parsed.push_back(*parse_rational(text));
    }
    profiles.push_back(AgentProfile(std::move(parsed)));
  }
  return TightCase{std::move(anchor), id, objective,
                   Instance(setting, variant, std::move(profiles)),
                   std::move(expected)};
}

}  // namespace

const std::vector<TightCase>& tight_registry() {
  static const std::vector<TightCase> registry = [] {
    std::vector<TightCase> cases;
    cases.push_back(make_case(
        "m1-ss-median-pair", MechanismId::m1, Objective::ss,
        Setting::desirable, Variant::sum, {{"0", "1/2"}, {"1/2", "1"}},
        RatioValue::bounded(rat(2))));
    cases.push_back(make_case(
        "m1-ms-starved-agent", MechanismId::m1, Objective::ms,
        Setting::desirable, Variant::sum,
        {{"0", "1/2"}, {"0", "1"}, {"1/2", "1"}}, RatioValue::unbounded()));
    cases.push_back(make_case(
        "m2-ms-sum-cluster", MechanismId::m2, Objective::ms,
        Setting::desirable, Variant::sum, {{"0", "1/2"}, {"0", "0"}},
        RatioValue::bounded(rat(2))));
    cases.push_back(make_case(
        "m2-ms-max-all-at-zero", MechanismId::m2, Objective::ms,
        Setting::desirable, Variant::max, {{"0"}, {"0"}, {"0"}},
        RatioValue::bounded(rat(2))));
    cases.push_back(make_case(
        "m3-ss-corner-agent", MechanismId::m3, Objective::ss,
        Setting::desirable, Variant::max, {{"0"}},
        RatioValue::bounded(rat(5, 4))));
    cases.push_back(make_case(
        "m4-ss-split-pair", MechanismId::m4, Objective::ss,
        Setting::obnoxious, Variant::sum, {{"0", "1"}, {"0", "1/2"}},
        RatioValue::bounded(rat(2))));
    cases.push_back(make_case(
        "m5-ss-split-pair", MechanismId::m5, Objective::ss,
        Setting::obnoxious, Variant::sum, {{"0", "1"}, {"0", "1/2"}},
        RatioValue::bounded(rat(4, 3))));
    cases.push_back(make_case(
        "m4-ms-opposed-pair", MechanismId::m4, Objective::ms,
        Setting::obnoxious, Variant::sum, {{"0", "0"}, {"1", "1"}},
        RatioValue::unbounded()));
    cases.push_back(make_case(
        "m6-ss-center-and-edge", MechanismId::m6, Objective::ss,
        Setting::obnoxious, Variant::max, {{"1/2"}, {"1"}},
        RatioValue::bounded(rat(2))));
    cases.push_back(make_case(
        "m7-ss-center-and-edge", MechanismId::m7, Objective::ss,
        Setting::obnoxious, Variant::max, {{"1/2"}, {"1"}},
        RatioValue::bounded(rat(4, 3))));
    return cases;
  }();
  return registry;
}

namespace {

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  unsigned spawn = std::min<std::size_t>(jobs, count);
  workers.reserve(spawn);
  for (unsigned w = 0; w < spawn; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count;
           i = next.fetch_add(1)) {
        body(i);
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
}

}  // namespace

SweepReport ratio_sweep(MechanismId id, Objective objective,
                        const GeneratorConfig& config, std::size_t samples,
                        unsigned jobs) {
  const MechanismDescriptor& desc = descriptor(id);

  std::vector<Instance> instances;
  instances.reserve(samples + 2);
  std::uint64_t state = config.seed;
  for (std::size_t i = 0; i < samples; ++i) {
    instances.push_back(random_instance(config, state));
  }
  for (const TightCase& tight : tight_registry()) {
    if (tight.mechanism == id && tight.objective == objective &&
        tight.instance.setting == config.setting &&
        tight.instance.variant == config.variant) {
      instances.push_back(tight.instance);
    }
  }

  std::vector<RatioValue> ratios(instances.size(),
                                 RatioValue::bounded(Rational(0)));
  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    ratios[i] = ratio(id, instances[i], objective);
  });

  SweepReport report;
  report.mechanism = id;
  report.objective = objective;
  report.samples = samples;
  report.seed = config.seed;
  bool first = true;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (first || report.worst < ratios[i]) {
      report.worst = ratios[i];
      report.worst_instance = instances[i];
      first = false;
    }
    bool guaranteed = desc.proven_ratio.has_value() &&
                      objective == desc.intended_objective &&
                      on_label(id, instances[i]);
    if (guaranteed &&
        RatioValue::bounded(*desc.proven_ratio) < ratios[i]) {
      report.bound_violated = true;
      report.worst = ratios[i];
      report.worst_instance = instances[i];
      break;
    }
  }
  return report;
}

SweepReport adversarial_search(MechanismId id, Objective objective,
                               const GeneratorConfig& config,
                               std::size_t restarts, std::size_t max_steps) {
  std::uint64_t state = config.seed;
  SweepReport report;
  report.mechanism = id;
  report.objective = objective;
  report.samples = restarts;
  report.seed = config.seed;

  bool first = true;
  for (std::size_t r = 0; r < restarts; ++r) {
    Instance current = random_instance(config, state);
    RatioValue current_ratio = ratio(id, current, objective);
    for (std::size_t step = 0; step < max_steps; ++step) {
      bool improved = false;
      Instance best_neighbor = current;
      RatioValue best_ratio = current_ratio;
      for (std::size_t a = 0; a < current.n(); ++a) {
        for (std::size_t j = 0; j < current.agents[a].count(); ++j) {
          for (long k = 0; k <= config.grid_denominator; ++k) {
            Rational replacement(k, config.grid_denominator);
            if (replacement == current.agents[a].locations()[j]) continue;
            std::vector<Rational> locations =
                current.agents[a].locations();
            locations[j] = replacement;
            Instance neighbor = current;
            neighbor.agents[a] = AgentProfile(std::move(locations));
            RatioValue candidate = ratio(id, neighbor, objective);
            if (best_ratio < candidate) {
              best_ratio = candidate;
              best_neighbor = neighbor;
              improved = true;
            }
          }
        }
      }
      if (!improved) break;
      current = std::move(best_neighbor);
      current_ratio = best_ratio;
      if (current_ratio.is_unbounded()) break;
    }
    if (first || report.worst < current_ratio) {
      report.worst = current_ratio;
      report.worst_instance = current;
      first = false;
    }
  }
  return report;
}

std::string canonical_text(const Instance& instance) {
  std::string text =
      to_string(instance.setting) + " " + to_string(instance.variant) + " ";
  for (const AgentProfile& agent : instance.agents) {
    text += "(";
    for (std::size_t j = 0; j < agent.count(); ++j) {
      if (j > 0) text += " ";
      text += to_string(agent.locations()[j]);
    }
    text += ")";
  }
  return text;
}

std::string sweep_csv_header() {
  return "mechanism,objective,samples,worst_ratio_num,worst_ratio_den,"
         "instance,seed";
}

std::string sweep_csv_row(const SweepReport& report) {
  std::string num = "unbounded";
  std::string den = "0";
  if (!report.worst.is_unbounded()) {
    num = numerator(report.worst.value()).str();
    den = denominator(report.worst.value()).str();
  }
  std::string instance_text =
      report.worst_instance ? canonical_text(*report.worst_instance) : "";
  return to_string(report.mechanism) + "," + to_string(report.objective) +
         "," + std::to_string(report.samples) + "," + num + "," + den + "," +
         instance_text + "," + std::to_string(report.seed);
}

}  // namespace satloc
