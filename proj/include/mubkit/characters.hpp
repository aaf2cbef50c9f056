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
 * Additive and multiplicative characters on GF(p^m) and GR(4,m), and the four
 * sum families built from them: Weil sums, field Gauss sums, Teichmueller
 * exponential sums, and ring Gauss sums.
 *
 * Conventions:
 *  - additive character kappa(x) = omega_p^tr(x); ring version i^tr(x).
 *  - multiplicative character psi_k(n) = omega_(q-1)^(k*dlog n) on F_q^*,
 *    extended to n = 0 by 1 for k = 0 and by 0 otherwise. The ring version
 *    lives on the Teichmueller units xi^j -> omega_(2^m-1)^(k*j) and is 0
 *    elsewhere for k != 0.
 *  - sums are accumulated as integer exponent histograms (order lcm of the
 *    character orders) and converted to complex floats at the boundary.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"
#include "mubkit/roots.hpp"

namespace mubkit {

/// A unit-modulus character value, or exactly zero.
struct CharValue {
    bool zero = false;
    RootOfUnity root;

    cplx value() const { return zero ? cplx{0.0, 0.0} : root.value(); }
    CharValue conj() const { return zero ? *this : CharValue{false, root.conj()}; }
};

/// Evaluated character sum with the identity or bound it was checked against.
struct SumReport {
    cplx value{0.0, 0.0};
    double magnitude = 0.0;
    std::optional<double> bound;  // reference magnitude (identity) or upper bound
    bool bound_satisfied = true;
    std::string classification;   // which identity/bound case applied
};

inline int field_char_order(const Field& f) {
    return static_cast<int>(lcm_long(f.p(), f.q() - 1 > 0 ? f.q() - 1 : 1));
}

inline int ring_char_order(const GaloisRing& r) {
    return static_cast<int>(lcm_long(4, r.teich_count() - 1 > 0 ? r.teich_count() - 1 : 1));
}

/// kappa(x) = omega_p^tr(x).
inline RootOfUnity additive_character(const Field& f, const FieldElement& x) {
    return RootOfUnity(f.p(), f.trace(x));
}

/// psi_k(n); see the header comment for the n = 0 convention.
inline CharValue multiplicative_character(const Field& f, long k, const FieldElement& n) {
    const long ord = f.q() - 1;
    k = mod_nonneg(k, static_cast<int>(ord > 0 ? ord : 1));
    if (n.is_zero()) {
        if (k == 0) return {false, RootOfUnity(static_cast<int>(ord > 0 ? ord : 1), 0)};
        return {true, RootOfUnity()};
    }
    return {false, RootOfUnity(static_cast<int>(ord > 0 ? ord : 1), k * f.dlog(n))};
}

/// kappa~(x) = i^tr(x) on GR(4,m).
inline RootOfUnity ring_additive_character(const GaloisRing& r, const RingElement& x) {
    return RootOfUnity(4, r.trace(x));
}

/// psi~_k on the Teichmueller units, 0 off them for k != 0.
inline CharValue ring_multiplicative_character(const GaloisRing& r, long k, const RingElement& x) {
    const int ord = r.teich_count() - 1 > 0 ? r.teich_count() - 1 : 1;
    k = mod_nonneg(k, ord);
    if (k == 0) return {false, RootOfUnity(ord, 0)};
    auto pos = r.teich_position(x);
    if (!pos || *pos == 0) return {true, RootOfUnity()};
    return {false, RootOfUnity(ord, k * (*pos - 1))};
}

// ---------------------------------------------------------------------------
// Weil sums W_f = sum_x kappa(f(x))
// ---------------------------------------------------------------------------

/// Exponent histogram of W_f over omega_p; f given by coefficients, low to high.
inline ExponentHistogram weil_sum_histogram(const Field& f, const std::vector<FieldElement>& coeffs) {
    ExponentHistogram hist(f.p());
    for (long i = 0; i < f.q(); ++i) {
        FieldElement x = f.element(i);
        FieldElement acc = f.zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        hist.add(f.trace(acc));
    }
    return hist;
}

inline SumReport weil_sum(const Field& f, const std::vector<FieldElement>& coeffs,
                          double tol = 1e-9) {
    int d = -1;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        if (!coeffs[i].is_zero()) {
            d = i;
            break;
        }
    }
    SumReport rep;
    rep.value = weil_sum_histogram(f, coeffs).value();
    rep.magnitude = std::abs(rep.value);
    if (d >= 1 && d % f.p() != 0) {
        rep.bound = (d - 1) * std::sqrt(static_cast<double>(f.q()));
        rep.bound_satisfied = rep.magnitude <= *rep.bound + tol;
        rep.classification = "degree_coprime";
    } else {
        rep.classification = d < 1 ? "constant" : "degree_not_coprime";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Field Gauss sums G(psi_k, kappa) = sum_{x != 0} psi_k(x) kappa(x)
// ---------------------------------------------------------------------------

inline ExponentHistogram gauss_sum_histogram(const Field& f, long k, bool use_trivial_additive) {
    const int N = field_char_order(f);
    const long ord = f.q() - 1 > 0 ? f.q() - 1 : 1;
    k = mod_nonneg(k, static_cast<int>(ord));
    ExponentHistogram hist(N);
    for (long i = 1; i < f.q(); ++i) {
        FieldElement x = f.element(i);
        long e = k * f.dlog(x) % ord * (N / ord);
        if (!use_trivial_additive) e += static_cast<long>(f.trace(x)) * (N / f.p());
        hist.add(e);
    }
    return hist;
}

inline SumReport gauss_sum(const Field& f, long k, bool use_trivial_additive, double tol = 1e-9) {
    const long ord = f.q() - 1 > 0 ? f.q() - 1 : 1;
    k = mod_nonneg(k, static_cast<int>(ord));
    SumReport rep;
    rep.value = gauss_sum_histogram(f, k, use_trivial_additive).value();
    rep.magnitude = std::abs(rep.value);
    if (k == 0 && use_trivial_additive) {
        rep.classification = "psi0_kappa0";
        rep.bound = static_cast<double>(f.q() - 1);
    } else if (k == 0) {
        rep.classification = "psi0_kappa";  // value is exactly -1
        rep.bound = 1.0;
    } else if (use_trivial_additive) {
        rep.classification = "psi_kappa0";
        rep.bound = 0.0;
    } else {
        rep.classification = "psi_kappa";
        rep.bound = std::sqrt(static_cast<double>(f.q()));
    }
    rep.bound_satisfied = std::abs(rep.magnitude - *rep.bound) <= tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Ring exponential sums Gamma(y) = sum_{u in T_m} kappa~(y u)
// ---------------------------------------------------------------------------

inline ExponentHistogram ring_exp_sum_histogram(const GaloisRing& r, const RingElement& y) {
    ExponentHistogram hist(4);
    for (const RingElement& u : r.teichmuller()) hist.add(r.trace(y * u));
    return hist;
}

inline SumReport ring_exp_sum(const GaloisRing& r, const RingElement& y, double tol = 1e-9) {
    const double tm = static_cast<double>(r.teich_count());
    SumReport rep;
    rep.value = ring_exp_sum_histogram(r, y).value();
    rep.magnitude = std::abs(rep.value);
    if (y.is_zero()) {
        rep.classification = "zero";
        rep.bound = tm;
    } else if (r.in_two_teich(y)) {
        rep.classification = "two_torsion";
        rep.bound = 0.0;
    } else {
        rep.classification = "generic";
        rep.bound = std::sqrt(tm);
    }
    rep.bound_satisfied = std::abs(rep.magnitude - *rep.bound) <= tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Ring Gauss sums G_y(psi~_k, kappa~) = sum_{x in R} psi~_k(x) kappa~(y x)
// ---------------------------------------------------------------------------

inline ExponentHistogram ring_gauss_sum_histogram(const GaloisRing& r, long k, const RingElement& y) {
    const int N = ring_char_order(r);
    const int tord = r.teich_count() - 1 > 0 ? r.teich_count() - 1 : 1;
    k = mod_nonneg(k, tord);
    ExponentHistogram hist(N);
    for (long i = 0; i < r.size(); ++i) {
        RingElement x = r.element(i);
        CharValue psi = ring_multiplicative_character(r, k, x);
        if (psi.zero) continue;
        long e = static_cast<long>(psi.root.exponent) * (N / tord) +
                 static_cast<long>(r.trace(y * x)) * (N / 4);
        hist.add(e);
    }
    return hist;
}

inline SumReport ring_gauss_sum(const GaloisRing& r, long k, const RingElement& y,
                                double tol = 1e-9) {
    const int tord = r.teich_count() - 1 > 0 ? r.teich_count() - 1 : 1;
    k = mod_nonneg(k, tord);
    const double tm = static_cast<double>(r.teich_count());
    SumReport rep;
    rep.value = ring_gauss_sum_histogram(r, k, y).value();
    rep.magnitude = std::abs(rep.value);
    if (k == 0 && y.is_zero()) {
        rep.classification = "psi0_kappa0";  // value 4^m exactly
        rep.bound = static_cast<double>(r.size());
        rep.bound_satisfied = std::abs(rep.magnitude - *rep.bound) <= tol;
    } else if (y.is_zero()) {
        rep.classification = "psi_kappa0";  // value 0 exactly
        rep.bound = 0.0;
        rep.bound_satisfied = std::abs(rep.magnitude - *rep.bound) <= tol;
    } else if (k == 0) {
        rep.classification = "psi0_kappa";  // no sharper identity; trivially <= 4^m
        rep.bound = static_cast<double>(r.size());
        rep.bound_satisfied = rep.magnitude <= *rep.bound + tol;
    } else {
        rep.classification = "psi_kappa";
        rep.bound = tm;
        rep.bound_satisfied = rep.magnitude <= *rep.bound + tol;
    }
    return rep;
}

}  // namespace mubkit
