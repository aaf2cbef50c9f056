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

// Build the five mutually unbiased quartit bases from GR(4,2) and print them
// together with the pairwise verification report.

#include <cstdio>

#include "mubkit/mub.hpp"

using namespace mubkit;

static const char* render(cplx a) {
    if (std::abs(a - cplx{0.5, 0.0}) < 1e-12) return " +1";
    if (std::abs(a + cplx{0.5, 0.0}) < 1e-12) return " -1";
    if (std::abs(a - cplx{0.0, 0.5}) < 1e-12) return " +i";
    if (std::abs(a + cplx{0.0, 0.5}) < 1e-12) return " -i";
    return "  ?";
}

int main() {
    GaloisRing ring(2);
    auto family = mub_ring_family(ring, 0);

    std::printf("GR(4,2) phase bases (amplitudes scaled by 2):\n");
    for (const Basis& basis : family) {
        std::printf("  basis %s\n", basis.label().c_str());
        for (size_t b = 0; b < basis.size(); ++b) {
            std::printf("    ");
            for (size_t n = 0; n < basis.dim(); ++n)
                std::printf("%s", render(basis.vector(b).amplitude(n)));
            std::printf("\n");
        }
    }

    auto report = verify_mub_set(family, /*include_computational=*/true);
    std::printf("bases (with computational): %zu, verdict: %s\n", report.base_count,
                report.verdict ? "complete MUB set" : "NOT complete");
    return report.verdict ? 0 : 1;
}
