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

/**
 * Exact roots of unity and integer exponent histograms.
 *
 * Character sums are accumulated as integer weights per exponent of a fixed
 * root of unity and converted to complex floats only at the boundary. Exact
 * identities (a sum equals an integer, two sums are equal) are decided by
 * reduction modulo the cyclotomic polynomial, with no floating point at all.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mubkit/util.hpp"

namespace mubkit {

using cplx = std::complex<double>;

/// exp(2*pi*i*exponent/order), stored exactly as the pair (order, exponent).
struct RootOfUnity {
    int order = 1;
    int exponent = 0;

    RootOfUnity() = default;
    RootOfUnity(int n, long e) : order(n), exponent(mod_nonneg(e, n)) {
        if (n < 1) throw std::invalid_argument("RootOfUnity: order must be positive");
    }

    cplx value() const {
        // Quarter-turn exponents come out exact; this keeps amplitudes built
        // from i and -1 bit-exact instead of picking up sin/cos rounding.
        if (4L * exponent % order == 0) {
            switch (4L * exponent / order) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                case 3: return {0.0, -1.0};
            }
        }
        const double t = 2.0 * std::numbers::pi * exponent / order;
        return {std::cos(t), std::sin(t)};
    }

    RootOfUnity conj() const { return RootOfUnity(order, order - exponent); }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        if (a.order != b.order)
            throw std::invalid_argument("RootOfUnity: mismatched orders");
        return RootOfUnity(a.order, a.exponent + b.exponent);
    }
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.order == b.order && a.exponent == b.exponent;
    }
};

/// Coefficients of the n-th cyclotomic polynomial, low to high, memoized.
inline const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<long long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phi_d = cyclotomic_polynomial(d);
        // exact long division, divisor is monic
        std::vector<long long> quot(poly.size() - phi_d.size() + 1, 0);
        std::vector<long long> rem = poly;
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
            long long c = rem[i + phi_d.size() - 1];
            quot[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= c * phi_d[j];
        }
        for (long long c : rem)
            if (c != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
        poly = std::move(quot);
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

/**
 * Integer-weighted histogram over the exponents of a fixed root of unity.
 * Represents the algebraic integer sum_e w[e] * zeta_order^e.
 */
class ExponentHistogram {
  public:
    explicit ExponentHistogram(int order) : order_(order), w_(order, 0) {
        if (order < 1) throw std::invalid_argument("ExponentHistogram: bad order");
    }

    int order() const { return order_; }
    const std::vector<long long>& weights() const { return w_; }

    void add(long exponent, long long weight = 1) { w_[mod_nonneg(exponent, order_)] += weight; }
    void add(const RootOfUnity& r, long long weight = 1) {
        if (r.order != order_) throw std::invalid_argument("ExponentHistogram: order mismatch");
        w_[r.exponent] += weight;
    }

    cplx value() const {
        cplx acc{0.0, 0.0};
        for (int e = 0; e < order_; ++e)
            if (w_[e] != 0) acc += static_cast<double>(w_[e]) * RootOfUnity(order_, e).value();
        return acc;
    }

    /// Histogram of pairwise exponent differences; represents |sum|^2 exactly.
    ExponentHistogram magnitude_squared() const {
        ExponentHistogram out(order_);
        for (int a = 0; a < order_; ++a) {
            if (w_[a] == 0) continue;
            for (int b = 0; b < order_; ++b) {
                if (w_[b] == 0) continue;
                out.w_[mod_nonneg(a - b, order_)] += w_[a] * w_[b];
            }
        }
        return out;
    }

    /// Exact test of "this sum equals the integer n", via reduction mod Phi_order.
    bool exact_equals_integer(long long n) const {
        std::vector<long long> poly = w_;
        poly[0] -= n;
        return reduces_to_zero(poly);
    }

    bool exact_equals(const ExponentHistogram& other) const {
        if (other.order_ != order_) return false;
        std::vector<long long> poly = w_;
        for (int e = 0; e < order_; ++e) poly[e] -= other.w_[e];
        return reduces_to_zero(poly);
    }

  private:
    bool reduces_to_zero(std::vector<long long> poly) const {
        const auto& phi = cyclotomic_polynomial(order_);
        const int dphi = static_cast<int>(phi.size()) - 1;
        for (int i = static_cast<int>(poly.size()) - 1; i >= dphi; --i) {
            long long c = poly[i];
            if (c == 0) continue;
            for (int j = 0; j <= dphi; ++j) poly[i - dphi + j] -= c * phi[j];
        }
        for (long long c : poly)
            if (c != 0) return false;
        return true;
    }

    int order_;
    std::vector<long long> w_;
};

}  // namespace mubkit
