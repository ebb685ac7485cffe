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
#include "qsim/sampling.hpp"

#include "qsim/error.hpp"
#include "qsim/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsim {

std::vector<std::uint64_t> sample_histogram(std::span<const double> probs,
                                            std::uint64_t nshots, std::uint64_t seed) {
    if (probs.empty()) {
        throw Error(ErrorKind::InvalidDistribution, "empty distribution");
    }
    std::vector<double> cumulative(probs.size());
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double p = probs[i];
        if (!std::isfinite(p) || p < -1e-12) {
            throw Error(ErrorKind::InvalidDistribution,
                        "probability " + std::to_string(p) + " at outcome " +
                            std::to_string(i));
        }
        total += std::max(p, 0.0);
        cumulative[i] = total;
    }
    if (std::abs(total - 1.0) > 1e-8) {
        throw Error(ErrorKind::InvalidDistribution,
                    "probabilities sum to " + std::to_string(total));
    }

    std::vector<std::uint64_t> histogram(probs.size(), 0);
    if (nshots == 0) {
        return histogram;
    }
    // Last outcome with positive mass; guards against rounding at u ~ total.
    std::size_t last = probs.size() - 1;
    while (last > 0 && !(probs[last] > 0.0)) {
        --last;
    }
    Rng rng(seed);
    for (std::uint64_t shot = 0; shot < nshots; ++shot) {
        const double u = rng.uniform() * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        auto outcome = static_cast<std::size_t>(it - cumulative.begin());
        if (outcome > last) {
            outcome = last;
        }
        ++histogram[outcome];
    }
    return histogram;
}

} // namespace qsim
