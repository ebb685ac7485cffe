// Copyright 2026 The qsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qsim {

/**
 * Draws `nshots` outcomes from `probs` by inverse-CDF lookup.
 *
 * Each shot takes one 64-bit word from std::mt19937_64(seed), maps it to a
 * uniform double in [0, 1) using its top 53 bits, scales by the total mass,
 * and binary-searches the cumulative array. The result is a histogram with
 * one entry per outcome and depends only on (probs, nshots, seed).
 *
 * Entries down to -1e-12 are clamped to zero; the total must be within 1e-8
 * of one and is renormalized. Anything else throws InvalidDistribution.
 */
std::vector<std::uint64_t> sample_histogram(std::span<const double> probs,
                                            std::uint64_t nshots, std::uint64_t seed);

} // namespace qsim
