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
#include <optional>
#include <string>

#include "satloc/mechanisms.hpp"

namespace satloc {

/// An exact approximation ratio, or the explicit unbounded sentinel (the
/// mechanism scored 0 while the optimum is positive). Never division by
/// zero. Unbounded compares greater than every rational ratio.
class RatioValue {
 public:
  static RatioValue bounded(Rational value) {
    return RatioValue(false, std::move(value));
  }
  static RatioValue unbounded() { return RatioValue(true, Rational(0)); }

  bool is_unbounded() const { return unbounded_; }
  /// Only valid when bounded.
  const Rational& value() const;

  bool operator==(const RatioValue&) const = default;
  bool operator<(const RatioValue& other) const;
  bool operator<=(const RatioValue& other) const {
    return *this < other || *this == other;
  }

 private:
  RatioValue(bool unbounded, Rational value)
      : unbounded_(unbounded), value_(std::move(value)) {}

  bool unbounded_;
  Rational value_;
};

std::string to_string(const RatioValue& ratio);

/// opt(x) / mechanism value, exact; 1 when both are 0.
RatioValue ratio(MechanismId id, const Instance& instance,
                 Objective objective);

struct GeneratorConfig {
  std::size_t n_max = 5;
  std::size_t omega_max = 4;
  long grid_denominator = 60;
  Setting setting = Setting::desirable;
  Variant variant = Variant::sum;
  std::uint64_t seed = 42;
};

/// Draws n, the per-agent counts, and grid coordinates from the state, all
/// via plain modulo so the sequence is identical across platforms.
Instance random_instance(const GeneratorConfig& config, std::uint64_t& state);

/// A worst-case instance from the guarantee proofs, with the ratio it must
/// reproduce exactly.
struct TightCase {
  std::string anchor;
  MechanismId mechanism;
  Objective objective;
  Instance instance;
  RatioValue expected_ratio;
};

/// The tight instances for every registry mechanism, including the two
/// unbounded minimum-satisfaction cases.
const std::vector<TightCase>& tight_registry();

struct SweepReport {
  MechanismId mechanism;
  Objective objective;
  std::size_t samples = 0;
  RatioValue worst = RatioValue::bounded(Rational(0));
  std::optional<Instance> worst_instance;
  std::uint64_t seed = 0;
  /// Some on-label ratio exceeded the mechanism's proven bound. This is a
  /// build-failing event; the counterexample is in worst_instance.
  bool bound_violated = false;
};

/// Ratios over `samples` seeded instances plus the matching registry cases.
/// On-label ratios are compared against the proven bound exactly.
SweepReport ratio_sweep(MechanismId id, Objective objective,
                        const GeneratorConfig& config, std::size_t samples,
                        unsigned jobs = 1);

/// Hill-climbs the ratio from `restarts` random starts by re-drawing one
/// coordinate at a time on the grid, accepting strict improvements only.
/// Reports the best instance found; never asserts bounds.
SweepReport adversarial_search(MechanismId id, Objective objective,
                               const GeneratorConfig& config,
                               std::size_t restarts, std::size_t max_steps);

/// Compact one-line form used in CSV cells: "setting variant (a b)(c d)".
std::string canonical_text(const Instance& instance);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepReport& report);

}  // namespace satloc
