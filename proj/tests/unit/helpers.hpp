/*
 * Copyright 2026 The opagbs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <random>

#include "opagbs/opa_network.hpp"

namespace opagbs::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Network with every r, theta and t drawn independently.
inline NetworkSpec random_spec(std::mt19937_64& rng, std::size_t max_half_modes, std::size_t max_depth,
                               double max_r, double min_t) {
    const std::size_t n = 2 * (1 + rng() % max_half_modes);
    const std::size_t d = 1 + rng() % max_depth;
    NetworkSpec spec = NetworkSpec::uniform(n, d, 0.0);
    for (std::size_t l = 1; l <= d; ++l) {
        for (std::size_t j = 0; j < spec.layer_opas(l).size(); ++j)
            spec.set_opa(l, j, OpaSpec(uniform(rng, 0.0, max_r), uniform(rng, 0.0, 6.283185307179586)));
        for (std::size_t i = 0; i < n; ++i) spec.set_transmittance(l, i, uniform(rng, min_t, 1.0));
    }
    return spec;
}

inline double to_d(const Real& x) { return static_cast<double>(x); }

}  // namespace opagbs::testing
