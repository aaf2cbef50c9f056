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
 * Phase bases: Pegg-Barnett (plain DFT over Z_q), the quadratic Galois phase
 * bases over GF(p^m) for odd p, and the Teichmueller phase bases over GR(4,m),
 * plus exhaustive verification of complete MUB sets.
 *
 * Enumeration conventions (these pin down everything the constructions print):
 *  - field kets and basis/vector indices use the canonical base-p encoding;
 *  - ring kets follow the Teichmueller order (0, 1, xi, xi^2, ...), which is
 *    also the order of the basis index a and the vector index b;
 *  - eigenvalue labels are theta_b = 2*pi*idx(b)/q.
 *
 * For k != 0 the multiplicative character vanishes at n = 0, so those
 * "character-twisted" bases are not flat and not complete MUB candidates;
 * verify_mub_set reports what it measures instead of asserting.
 */

#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "mubkit/characters.hpp"
#include "mubkit/states.hpp"

namespace mubkit {

/// DFT basis over Z_q: vector k has components omega_q^(k n)/sqrt(q), label theta0 + 2 pi k/q.
inline Basis pegg_barnett_basis(long q, double theta0 = 0.0) {
    if (q < 2) throw std::invalid_argument("pegg_barnett_basis: dimension must be >= 2");
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    std::vector<StateVector> vecs;
    std::vector<double> labels;
    vecs.reserve(q);
    for (long k = 0; k < q; ++k) {
        std::vector<cplx> amps(q);
        ExactForm ef;
        ef.scale_denom_sqrt = q;
        ef.root_order = static_cast<int>(q);
        ef.exponents.assign(q, 0);
        for (long n = 0; n < q; ++n) {
            RootOfUnity r(static_cast<int>(q), k * n);
            ef.exponents[n] = r.exponent;
            amps[n] = r.value() * scale;
        }
        vecs.emplace_back(std::move(amps), std::move(ef));
        labels.push_back(theta0 + 2.0 * std::numbers::pi * k / q);
    }
    return Basis("pegg-barnett", std::move(vecs), std::move(labels));
}

/// Quadratic Galois phase basis: vector b has components psi_k(n) omega_p^tr(a n^2 + b n)/sqrt(q).
inline Basis mub_field(const Field& f, const FieldElement& a, long k = 0) {
    if (f.p() == 2)
        throw std::invalid_argument(
            "mub_field: not available in characteristic 2 (the quadratic Weil-sum argument needs "
            "gcd(2, q) = 1); use the Galois-ring construction for even dimensions");
    const long q = f.q();
    const int N = field_char_order(f);
    const long ord = q - 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    k = mod_nonneg(k, static_cast<int>(ord));

    std::vector<StateVector> vecs;
    std::vector<double> labels;
    vecs.reserve(q);
    for (long bidx = 0; bidx < q; ++bidx) {
        const FieldElement b = f.element(bidx);
        std::vector<cplx> amps(q);
        ExactForm ef;
        ef.scale_denom_sqrt = q;
        ef.root_order = N;
        ef.exponents.assign(q, std::nullopt);
        for (long nidx = 0; nidx < q; ++nidx) {
            const FieldElement n = f.element(nidx);
            const CharValue psi = multiplicative_character(f, k, n);
            if (psi.zero) {
                amps[nidx] = {0.0, 0.0};
                continue;
            }
            const int tr = f.trace(a * n * n + b * n);
            const long e = static_cast<long>(psi.root.exponent) * (N / ord) +
                           static_cast<long>(tr) * (N / f.p());
            RootOfUnity r(N, e);
            ef.exponents[nidx] = r.exponent;
            amps[nidx] = r.value() * scale;
        }
        vecs.emplace_back(std::move(amps), std::move(ef));
        labels.push_back(2.0 * std::numbers::pi * bidx / q);
    }
    std::string label = "a=" + std::to_string(f.index(a));
    if (k != 0) label += ",k=" + std::to_string(k);
    return Basis(std::move(label), std::move(vecs), std::move(labels));
}

/// Ring phase basis: vector b has components psi~_k(n) i^tr((a+2b) n)/sqrt(2^m), n over T_m.
inline Basis mub_ring(const GaloisRing& r, const RingElement& a, long k = 0) {
    if (!r.teich_position(a))
        throw std::invalid_argument("mub_ring: basis index a must lie in the Teichmueller set");
    const long q = r.teich_count();
    const int N = ring_char_order(r);
    const int tord = q - 1 > 0 ? static_cast<int>(q - 1) : 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    k = mod_nonneg(k, tord);

    const auto& teich = r.teichmuller();
    std::vector<StateVector> vecs;
    std::vector<double> labels;
    vecs.reserve(q);
    for (long j = 0; j < q; ++j) {
        const RingElement& b = teich[j];
        const RingElement y = a + r.scale2(b);
        std::vector<cplx> amps(q);
        ExactForm ef;
        ef.scale_denom_sqrt = q;
        ef.root_order = N;
        ef.exponents.assign(q, std::nullopt);
        for (long i = 0; i < q; ++i) {
            const RingElement& n = teich[i];
            const CharValue psi = ring_multiplicative_character(r, k, n);
            if (psi.zero) {
                amps[i] = {0.0, 0.0};
                continue;
            }
            const long e = static_cast<long>(psi.root.exponent) * (N / tord) +
                           static_cast<long>(r.trace(y * n)) * (N / 4);
            RootOfUnity root(N, e);
            ef.exponents[i] = root.exponent;
            amps[i] = root.value() * scale;
        }
        vecs.emplace_back(std::move(amps), std::move(ef));
        labels.push_back(2.0 * std::numbers::pi * j / q);
    }
    std::string label = "a=" + std::to_string(r.index(a));
    if (k != 0) label += ",k=" + std::to_string(k);
    return Basis(std::move(label), std::move(vecs), std::move(labels));
}

/// All q field bases (a in canonical order) for one character index.
inline std::vector<Basis> mub_field_family(const Field& f, long k = 0) {
    std::vector<Basis> out;
    out.reserve(f.q());
    for (long i = 0; i < f.q(); ++i) out.push_back(mub_field(f, f.element(i), k));
    return out;
}

/// All 2^m ring bases (a over the Teichmueller order) for one character index.
inline std::vector<Basis> mub_ring_family(const GaloisRing& r, long k = 0) {
    std::vector<Basis> out;
    out.reserve(r.teich_count());
    for (const RingElement& a : r.teichmuller()) out.push_back(mub_ring(r, a, k));
    return out;
}

struct PairViolation {
    size_t basis_i = 0, vec_i = 0, basis_j = 0, vec_j = 0;
    double magnitude = 0.0;
    Overlap got = Overlap::other;
    Overlap expected = Overlap::other;
};

struct MubReport {
    size_t base_count = 0;
    long dim = 0;
    double tolerance = 1e-9;
    long count_identical = 0;
    long count_orthogonal = 0;
    long count_unbiased = 0;
    long count_other = 0;
    std::vector<std::vector<std::string>> blocks;  // per basis-pair summary
    std::vector<PairViolation> violations;
    bool verdict = false;
};

/**
 * Exhaustive pairwise classification of a set of bases. The verdict is true
 * iff every intra-basis pair is identical/orthogonal as appropriate and every
 * inter-basis pair (optionally including the computational basis) is unbiased.
 */
inline MubReport verify_mub_set(std::vector<Basis> bases, bool include_computational,
                                double tol = 1e-9) {
    if (bases.empty()) throw std::invalid_argument("verify_mub_set: no bases");
    const long dim = static_cast<long>(bases[0].dim());
    if (include_computational) bases.push_back(computational_basis(dim));
    for (const Basis& b : bases)
        if (static_cast<long>(b.dim()) != dim)
            throw std::invalid_argument("verify_mub_set: dimension mismatch");

    MubReport rep;
    rep.base_count = bases.size();
    rep.dim = dim;
    rep.tolerance = tol;
    rep.blocks.assign(bases.size(), std::vector<std::string>(bases.size(), ""));

    for (size_t bi = 0; bi < bases.size(); ++bi) {
        for (size_t bj = bi; bj < bases.size(); ++bj) {
            bool clean = true;
            for (size_t u = 0; u < bases[bi].size(); ++u) {
                const size_t v0 = (bi == bj) ? u : 0;
                for (size_t v = v0; v < bases[bj].size(); ++v) {
                    const Overlap expected = (bi != bj)           ? Overlap::unbiased
                                             : (u == v)           ? Overlap::identical
                                                                  : Overlap::orthogonal;
                    const cplx ip = inner_product(bases[bi].vector(u), bases[bj].vector(v));
                    const double mag = std::abs(ip);
                    Overlap got;
                    if (std::abs(mag - 1.0) <= tol)
                        got = Overlap::identical;
                    else if (mag <= tol)
                        got = Overlap::orthogonal;
                    else if (std::abs(mag - 1.0 / std::sqrt(static_cast<double>(dim))) <= tol)
                        got = Overlap::unbiased;
                    else
                        got = Overlap::other;
                    switch (got) {
                        case Overlap::identical: ++rep.count_identical; break;
                        case Overlap::orthogonal: ++rep.count_orthogonal; break;
                        case Overlap::unbiased: ++rep.count_unbiased; break;
                        default: ++rep.count_other; break;
                    }
                    if (got != expected) {
                        clean = false;
                        rep.violations.push_back({bi, u, bj, v, mag, got, expected});
                    }
                }
            }
            rep.blocks[bi][bj] = rep.blocks[bj][bi] =
                clean ? (bi == bj ? "orthonormal" : "unbiased") : "violations";
        }
    }
    rep.verdict = rep.violations.empty();
    return rep;
}

}  // namespace mubkit
