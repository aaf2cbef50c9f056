/*
 * Copyright 2026 The mubkit authors
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

// Phase statistics of the flat state against the a = 1 Galois phase basis for
// growing field sizes: the expectation approaches pi, the variance approaches
// the uniform-phase value pi^2/3, and the diagonal part of the variance
// expansion approaches -2 pi^2/3.

#include <cstdio>
#include <numbers>

#include "mubkit/phase.hpp"

using namespace mubkit;

int main() {
    std::printf("%6s %14s %14s %14s\n", "q", "<Theta>", "variance", "diag part");
    for (auto [p, m] : {std::pair{3, 1}, {3, 2}, {3, 3}, {3, 4}}) {
        Field field(p, m);
        Basis basis = mub_field(field, field.one(), 0);
        PhaseStatistics st = phase_statistics(pure_state_real(field.q(), 0.0), basis);
        std::printf("%6ld %14.9f %14.9f %14.9f\n", field.q(), st.expectation, st.variance,
                    st.diagonal_contribution);
    }
    std::printf("limits: pi = %.9f, pi^2/3 = %.9f, -2 pi^2/3 = %.9f\n", std::numbers::pi,
                std::numbers::pi * std::numbers::pi / 3.0,
                -2.0 * std::numbers::pi * std::numbers::pi / 3.0);
    return 0;
}
