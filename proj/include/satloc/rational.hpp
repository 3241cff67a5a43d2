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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace satloc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
/// Every quantity in the library (locations, satisfactions, probabilities,
/// ratios) is one of these; floating point appears only in reports and in
/// the float simplex mode. Expression templates are disabled so values mix
/// freely with std::max, ternaries, and generic code.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

double to_double(const Rational& r);

/// Canonical text form: "p/q", or just "p" when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p/q", a plain integer, or a finite decimal ("0.25" -> 1/4).
/// Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

inline bool in_unit_interval(const Rational& r) {
  return r >= 0 && r <= 1;
}

}  // namespace satloc
