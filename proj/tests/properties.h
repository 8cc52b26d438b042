// Copyright 2026 The pbsgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PBSGATE_TESTS_PROPERTIES_H
#define PBSGATE_TESTS_PROPERTIES_H

// Randomized property suites shared by the unit tests and the acceptance run.

#include <cstddef>
#include <cstdint>
#include <string>

namespace pbsgate::testing {

inline constexpr double kUnitarityTolerance = 1e-12;
inline constexpr double kCompletenessTolerance = 1e-12;
inline constexpr double kRoundTripTolerance = 1e-12;
inline constexpr std::size_t kPropertyCases = 1000;

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double worst = 0;           // largest observed deviation, where meaningful
    std::string first_failure;  // empty when everything passed

    bool ok() const { return cases > 0 && failures == 0; }
};

// Dense U†U = I for random elements, plus sparse/dense agreement of each
// element's action and sparse norm preservation.
PropertyResult check_element_unitarity(std::uint64_t seed, std::size_t cases = kPropertyCases);

// Outcome probabilities of random gate runs sum to one; dense projectors over
// every pattern sum to the identity.
PropertyResult check_outcome_completeness(std::uint64_t seed, std::size_t cases = kPropertyCases);

// HV → FS → HV returns the original state.
PropertyResult check_rebase_round_trip(std::uint64_t seed, std::size_t cases = kPropertyCases);

// Two π phases on the same polarization cancel exactly.
PropertyResult check_phase_involution(std::uint64_t seed, std::size_t cases = kPropertyCases);

// print → parse reproduces random valid circuits exactly.
PropertyResult check_parser_round_trip(std::uint64_t seed, std::size_t cases = kPropertyCases);

// Mutated circuit text either parses or raises CircuitError, nothing else.
PropertyResult check_parser_fuzz(std::uint64_t seed, std::size_t cases = 2 * kPropertyCases);

}  // namespace pbsgate::testing

#endif
