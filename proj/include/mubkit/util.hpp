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

/** Small integer helpers shared across the library. */

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mubkit {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization by trial division, ascending, without multiplicities.
inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline long ipow(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1L << 50) / (base > 1 ? base : 2))
            throw std::overflow_error("ipow: result too large");
        r *= base;
    }
    return r;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

inline int mod_nonneg(long v, int m) {
    long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace mubkit
