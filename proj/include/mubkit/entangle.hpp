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
 * Generalized Bell states over two q-dimensional registers.
 *
 * Three constructors share the shape (1/sqrt(q)) sum_n chi(n) |n, n+h> and
 * differ in the character chi and in what "+h" means on the second register:
 * integer shift mod q for the multiplicative family, field addition for the
 * quadratic Galois family, and a cyclic shift of the Teichmueller ket label
 * for the ring family. Every state is maximally entangled (partial trace
 * I/q); within a fixed h the bases indexed by a are mutually unbiased with
 * overlap 1/sqrt(q), and states with different h are orthogonal outright.
 */

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "mubkit/characters.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/states.hpp"

namespace mubkit {

class BipartiteState {
  public:
    BipartiteState() = default;
    BipartiteState(long local_dim, std::vector<cplx> amps)
        : q_(local_dim), amps_(std::move(amps)) {
        if (static_cast<long>(amps_.size()) != q_ * q_)
            throw std::invalid_argument("BipartiteState: amplitude count must be q^2");
    }

    long local_dim() const { return q_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    const cplx& amplitude(long n1, long n2) const { return amps_[n1 * q_ + n2]; }
    cplx& amplitude(long n1, long n2) { return amps_[n1 * q_ + n2]; }

    double norm() const {
        double s = 0.0;
        for (const cplx& a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

  private:
    long q_ = 0;
    std::vector<cplx> amps_;
};

inline cplx inner_product(const BipartiteState& u, const BipartiteState& v) {
    if (u.local_dim() != v.local_dim())
        throw std::invalid_argument("inner_product: dimension mismatch");
    cplx s{0.0, 0.0};
    for (size_t i = 0; i < u.amplitudes().size(); ++i)
        s += std::conj(u.amplitudes()[i]) * v.amplitudes()[i];
    return s;
}

/// (1/sqrt(q)) sum_n omega_q^(k n) |n, n+h mod q>.
inline BipartiteState bell_mult(long q, long h, long k) {
    if (q < 2) throw std::invalid_argument("bell_mult: dimension must be >= 2");
    h = mod_nonneg(h, static_cast<int>(q));
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    std::vector<cplx> amps(q * q, cplx{0.0, 0.0});
    for (long n = 0; n < q; ++n)
        amps[n * q + (n + h) % q] = RootOfUnity(static_cast<int>(q), k * n).value() * scale;
    return BipartiteState(q, std::move(amps));
}

/// (1/sqrt(q)) sum_n omega_p^tr(a n^2 + b n) |n, n+h>, field addition on the shift.
inline BipartiteState bell_field(const Field& f, const FieldElement& h, const FieldElement& a,
                                 const FieldElement& b) {
    if (f.p() == 2)
        throw std::invalid_argument("bell_field: requires odd characteristic; use bell_ring");
    const long q = f.q();
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    std::vector<cplx> amps(q * q, cplx{0.0, 0.0});
    for (long i = 0; i < q; ++i) {
        const FieldElement n = f.element(i);
        const long j = f.index(n + h);
        amps[i * q + j] = RootOfUnity(f.p(), f.trace(a * n * n + b * n)).value() * scale;
    }
    return BipartiteState(q, std::move(amps));
}

/// (1/sqrt(2^m)) sum_n i^tr((a+2b) n) |n, n+h>, cyclic shift of the Teichmueller ket label.
inline BipartiteState bell_ring(const GaloisRing& r, long h, const RingElement& a,
                                const RingElement& b) {
    if (!r.teich_position(a) || !r.teich_position(b))
        throw std::invalid_argument("bell_ring: a and b must lie in the Teichmueller set");
    const long q = r.teich_count();
    h = mod_nonneg(h, static_cast<int>(q));
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    const RingElement y = a + r.scale2(b);
    const auto& teich = r.teichmuller();
    std::vector<cplx> amps(q * q, cplx{0.0, 0.0});
    for (long j = 0; j < q; ++j)
        amps[j * q + (j + h) % q] = RootOfUnity(4, r.trace(y * teich[j])).value() * scale;
    return BipartiteState(q, std::move(amps));
}

/// Reduced density matrix of the first register: rho[n,n'] = sum_j psi(n,j) conj(psi(n',j)).
inline OperatorMatrix partial_trace_2(const BipartiteState& s) {
    const long q = s.local_dim();
    OperatorMatrix rho(q);
    for (long n = 0; n < q; ++n)
        for (long np = 0; np < q; ++np) {
            cplx acc{0.0, 0.0};
            for (long j = 0; j < q; ++j) acc += s.amplitude(n, j) * std::conj(s.amplitude(np, j));
            rho.at(n, np) = acc;
        }
    return rho;
}

/// max |rho_1 - I/q|; zero exactly for maximally entangled states.
inline double entanglement_residual(const BipartiteState& s) {
    OperatorMatrix rho = partial_trace_2(s);
    const double inv_q = 1.0 / static_cast<double>(s.local_dim());
    double worst = 0.0;
    for (long i = 0; i < rho.dim(); ++i)
        for (long j = 0; j < rho.dim(); ++j) {
            cplx v = rho.at(i, j);
            if (i == j) v -= inv_q;
            worst = std::max(worst, std::abs(v));
        }
    return worst;
}

struct BellLabel {
    long h = 0;
    long a = 0;  // character index k for the mult family
    long b = 0;  // unused (0) for the mult family
};

struct BellFamily {
    std::string kind;  // "mult" | "field" | "ring"
    long q = 0;
    std::vector<BellLabel> labels;
    std::vector<BipartiteState> states;
};

inline BellFamily bell_mult_family(long q) {
    BellFamily fam{"mult", q, {}, {}};
    for (long h = 0; h < q; ++h)
        for (long k = 0; k < q; ++k) {
            fam.labels.push_back({h, k, 0});
            fam.states.push_back(bell_mult(q, h, k));
        }
    return fam;
}

inline BellFamily bell_field_family(const Field& f) {
    BellFamily fam{"field", f.q(), {}, {}};
    for (long h = 0; h < f.q(); ++h)
        for (long a = 0; a < f.q(); ++a)
            for (long b = 0; b < f.q(); ++b) {
                fam.labels.push_back({h, a, b});
                fam.states.push_back(bell_field(f, f.element(h), f.element(a), f.element(b)));
            }
    return fam;
}

inline BellFamily bell_ring_family(const GaloisRing& r) {
    const long q = r.teich_count();
    BellFamily fam{"ring", q, {}, {}};
    const auto& teich = r.teichmuller();
    for (long h = 0; h < q; ++h)
        for (long a = 0; a < q; ++a)
            for (long b = 0; b < q; ++b) {
                fam.labels.push_back({h, a, b});
                fam.states.push_back(bell_ring(r, h, teich[a], teich[b]));
            }
    return fam;
}

struct BellViolation {
    std::string what;  // "entanglement" | "overlap"
    size_t i = 0, j = 0;
    double value = 0.0;
    double expected = 0.0;
};

struct BellReport {
    std::string kind;
    long q = 0;
    size_t state_count = 0;
    double tolerance = 1e-9;
    double max_entanglement_residual = 0.0;
    double max_overlap_error = 0.0;
    std::vector<BellViolation> violations;
    bool verdict = false;
};

/**
 * Check a full Bell family: every state maximally entangled; for the mult
 * family the q^2 states form an orthonormal basis; for the field/ring
 * families, fixed-h same-a blocks are orthonormal, fixed-h cross-a overlaps
 * have magnitude 1/sqrt(q), and cross-h states are orthogonal.
 */
inline BellReport verify_bell_structure(const BellFamily& fam, double tol = 1e-9) {
    BellReport rep;
    rep.kind = fam.kind;
    rep.q = fam.q;
    rep.state_count = fam.states.size();
    rep.tolerance = tol;

    for (size_t i = 0; i < fam.states.size(); ++i) {
        const double res = entanglement_residual(fam.states[i]);
        rep.max_entanglement_residual = std::max(rep.max_entanglement_residual, res);
        if (res > tol) rep.violations.push_back({"entanglement", i, i, res, 0.0});
    }

    const double unbiased = 1.0 / std::sqrt(static_cast<double>(fam.q));
    for (size_t i = 0; i < fam.states.size(); ++i) {
        for (size_t j = i; j < fam.states.size(); ++j) {
            const double mag = std::abs(inner_product(fam.states[i], fam.states[j]));
            double expected;
            if (i == j) {
                expected = 1.0;
            } else if (fam.kind == "mult") {
                expected = 0.0;
            } else {
                const BellLabel& li = fam.labels[i];
                const BellLabel& lj = fam.labels[j];
                if (li.h != lj.h)
                    expected = 0.0;
                else if (li.a == lj.a)
                    expected = 0.0;  // same basis, different b
                else
                    expected = unbiased;
            }
            const double err = std::abs(mag - expected);
            rep.max_overlap_error = std::max(rep.max_overlap_error, err);
            if (err > tol) rep.violations.push_back({"overlap", i, j, mag, expected});
        }
    }
    rep.verdict = rep.violations.empty();
    return rep;
}

}  // namespace mubkit
