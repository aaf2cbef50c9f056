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
 * The Galois phase operator and its statistics.
 *
 * Two independent routes build the operator: the spectral sum over basis
 * projectors, and a closed form whose (n, m) entry is
 *
 *     (2 pi / q^2) psi_k(n) conj(psi_k(m)) omega_p^tr(a (n^2 - m^2)) S(n, m),
 *
 * with S(n, m) = sum_b idx(b) omega_p^tr(b (n - m)). Writing delta = n - m and
 * t_i = tr(x^i delta), the weighted sum factorizes coordinate-wise:
 * it equals q(q-1)/2 when delta = 0, vanishes when two or more t_i are
 * nonzero, and equals p^(m+i) / (omega_p^t_i - 1) when t_i is the only
 * nonzero trace. For m = 1 this reduces to the geometric-series identity
 * sum_j j x^j = q/(x - 1) on x = omega_p^tr(delta) != 1.
 *
 * s_sum() exposes the operator kernel as specified for reporting: the
 * geometric closed form whenever tr(n - m) != 0, the exact field-indexed sum
 * otherwise. s_sum_field() is the exact field-indexed sum everywhere and is
 * what the operators are built from.
 */

#pragma once

#include <numbers>
#include <optional>
#include <vector>

#include "mubkit/linalg.hpp"
#include "mubkit/mub.hpp"

namespace mubkit {

/// Exact S(n, m) = sum_b idx(b) omega_p^tr(b (n - m)), by coordinate factorization.
inline cplx s_sum_field(const Field& f, const FieldElement& n, const FieldElement& m) {
    const long q = f.q();
    FieldElement delta = n - m;
    if (delta.is_zero()) return {static_cast<double>(q) * (q - 1) / 2.0, 0.0};
    // t_i = tr(x^i delta)
    std::vector<int> t(f.m());
    FieldElement e = delta;
    const FieldElement x = f.m() > 1 ? f.element(f.p()) : f.one();
    for (int i = 0; i < f.m(); ++i) {
        t[i] = f.trace(e);
        if (i + 1 < f.m()) e = e * x;
    }
    int nonzero = -1;
    for (int i = 0; i < f.m(); ++i) {
        if (t[i] != 0) {
            if (nonzero >= 0) return {0.0, 0.0};  // two nonzero coordinate traces
            nonzero = i;
        }
    }
    const double coef = static_cast<double>(ipow(f.p(), f.m() + nonzero));
    return coef / (RootOfUnity(f.p(), t[nonzero]).value() - 1.0);
}

/// Histogram form of the same sum (weights idx(b) at exponent tr(b (n-m))); test oracle.
inline ExponentHistogram s_sum_field_histogram(const Field& f, const FieldElement& n,
                                               const FieldElement& m) {
    ExponentHistogram hist(f.p());
    const FieldElement delta = n - m;
    for (long i = 0; i < f.q(); ++i)
        hist.add(f.trace(f.element(i) * delta), i);
    return hist;
}

/**
 * S(n, m) as reported: q(q-1)/2 on the diagonal, the geometric closed form
 * q / (omega_p^tr(n-m) - 1) whenever tr(n - m) != 0, and the exact
 * field-indexed sum when tr(n - m) = 0 with n != m. Off the diagonal with
 * tr != 0 its magnitude is (q/2) / |sin(pi tr(n-m)/p)|.
 */
inline cplx s_sum(const Field& f, const FieldElement& n, const FieldElement& m) {
    const long q = f.q();
    if (n == m) return {static_cast<double>(q) * (q - 1) / 2.0, 0.0};
    const int t = f.trace(n - m);
    if (t != 0) return static_cast<double>(q) / (RootOfUnity(f.p(), t).value() - 1.0);
    return s_sum_field(f, n, m);
}

/// N = diag(0, 1, ..., q-1) over the canonical ket order.
inline OperatorMatrix number_operator(long q) {
    OperatorMatrix out(q);
    for (long i = 0; i < q; ++i) out.at(i, i) = {static_cast<double>(i), 0.0};
    return out;
}

/// Spectral route: sum_b theta_b |v_b><v_b|.
inline OperatorMatrix phase_operator_spectral(const Basis& basis,
                                              const std::vector<double>& eigenvalues,
                                              bool require_orthonormal = true) {
    const long q = static_cast<long>(basis.dim());
    if (eigenvalues.size() != basis.size())
        throw std::invalid_argument("phase_operator_spectral: eigenvalue count mismatch");
    if (require_orthonormal && !basis.orthonormal(1e-10))
        throw std::invalid_argument("phase_operator_spectral: basis is not orthonormal");
    OperatorMatrix out(q);
    for (size_t b = 0; b < basis.size(); ++b) {
        const StateVector& v = basis.vector(b);
        for (long i = 0; i < q; ++i) {
            const cplx vi = v.amplitude(i);
            if (vi == cplx{0.0, 0.0}) continue;
            for (long j = 0; j < q; ++j)
                out.at(i, j) += eigenvalues[b] * vi * std::conj(v.amplitude(j));
        }
    }
    return out;
}

inline OperatorMatrix phase_operator_spectral(const Basis& basis, bool require_orthonormal = true) {
    if (!basis.phase_labels())
        throw std::invalid_argument("phase_operator_spectral: basis carries no eigenvalues");
    return phase_operator_spectral(basis, *basis.phase_labels(), require_orthonormal);
}

namespace detail {
/// c_n = psi_k(n) omega_p^tr(a n^2); entry phases factor as c_n * conj(c_m).
inline std::vector<cplx> quadratic_phase_profile(const Field& f, const FieldElement& a, long k) {
    std::vector<cplx> c(f.q());
    for (long i = 0; i < f.q(); ++i) {
        const FieldElement n = f.element(i);
        const CharValue psi = multiplicative_character(f, k, n);
        if (psi.zero) {
            c[i] = {0.0, 0.0};
            continue;
        }
        c[i] = psi.value() * RootOfUnity(f.p(), f.trace(a * n * n)).value();
    }
    return c;
}
}  // namespace detail

/// Closed-form route for the phase operator of the (a, k) basis.
inline OperatorMatrix phase_operator_closed(const Field& f, const FieldElement& a, long k = 0) {
    if (f.p() == 2)
        throw std::invalid_argument("phase_operator_closed: requires odd characteristic");
    const long q = f.q();
    const double pref = 2.0 * std::numbers::pi / (static_cast<double>(q) * q);
    const auto c = detail::quadratic_phase_profile(f, a, k);
    OperatorMatrix out(q);
    for (long i = 0; i < q; ++i) {
        for (long j = 0; j < q; ++j) {
            if (c[i] == cplx{0.0, 0.0} || c[j] == cplx{0.0, 0.0}) continue;
            out.at(i, j) = pref * c[i] * std::conj(c[j]) * s_sum_field(f, f.element(i), f.element(j));
        }
    }
    return out;
}

/**
 * Phase-number commutator Theta*N - N*Theta in closed form: entry (n, m) is
 * (idx(m) - idx(n)) * Theta(n, m). Anti-Hermitian with vanishing diagonal.
 */
inline OperatorMatrix commutator_elements(const Field& f, const FieldElement& a, long k = 0) {
    OperatorMatrix theta = phase_operator_closed(f, a, k);
    const long q = f.q();
    OperatorMatrix out(q);
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j)
            out.at(i, j) = static_cast<double>(j - i) * theta.at(i, j);
    return out;
}

/// u_n = exp(i idx(n) beta)/sqrt(q) for a real phase slope beta.
inline StateVector pure_state_real(long q, double beta) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    std::vector<cplx> amps(q);
    for (long n = 0; n < q; ++n)
        amps[n] = std::polar(scale, beta * static_cast<double>(n));
    return StateVector(std::move(amps));
}

/// u_n = kappa(beta * n)/sqrt(q) for a field-valued phase parameter beta.
inline StateVector pure_state_field(const Field& f, const FieldElement& beta) {
    const long q = f.q();
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    std::vector<cplx> amps(q);
    ExactForm ef;
    ef.scale_denom_sqrt = q;
    ef.root_order = f.p();
    ef.exponents.assign(q, 0);
    for (long i = 0; i < q; ++i) {
        RootOfUnity r = additive_character(f, beta * f.element(i));
        ef.exponents[i] = r.exponent;
        amps[i] = r.value() * scale;
    }
    return StateVector(std::move(amps), std::move(ef));
}

struct PhaseStatistics {
    std::vector<double> distribution;   // |<theta_b|f>|^2 per b
    double expectation = 0.0;           // sum theta_b P_b
    double variance = 0.0;              // centered spectral definition
    double variance_expansion = 0.0;    // uncentered-moment route; must agree
    double diagonal_contribution = 0.0; // ket-diagonal part of the expansion
};

/**
 * Phase probability distribution, expectation and variance of a pure state in
 * a phase basis. The variance is computed twice: directly from the centered
 * spectral definition, and from separately accumulated uncentered moments
 * (second moment - 2 <Theta> first moment + <Theta>^2 zeroth moment; the
 * zeroth moment is kept explicit rather than assumed to be 1).
 * diagonal_contribution is the ket-diagonal (n = m) part of that expansion;
 * for flat states against a != 0 bases it approaches -2 pi^2/3 from above as
 * q grows.
 */
inline PhaseStatistics phase_statistics(const StateVector& state, const Basis& basis) {
    if (state.dim() != basis.dim())
        throw std::invalid_argument("phase_statistics: dimension mismatch");
    if (!basis.phase_labels())
        throw std::invalid_argument("phase_statistics: basis carries no eigenvalues");
    const auto& theta = *basis.phase_labels();
    const long q = static_cast<long>(basis.dim());

    PhaseStatistics st;
    st.distribution.resize(basis.size());
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (size_t b = 0; b < basis.size(); ++b) {
        const double p = std::norm(inner_product(basis.vector(b), state));
        st.distribution[b] = p;
        m0 += p;
        m1 += theta[b] * p;
        m2 += theta[b] * theta[b] * p;
    }
    st.expectation = m1;
    for (size_t b = 0; b < basis.size(); ++b) {
        const double d = theta[b] - st.expectation;
        st.variance += d * d * st.distribution[b];
    }
    st.variance_expansion = m2 - 2.0 * st.expectation * m1 + st.expectation * st.expectation * m0;

    // ket-diagonal weight: sum_n |psi_k(n)|^2 |u_n|^2 = q sum_n |v_0(n)|^2 |u_n|^2
    double w = 0.0;
    for (long n = 0; n < q; ++n)
        w += std::norm(basis.vector(0).amplitude(n)) * std::norm(state.amplitude(n));
    w *= static_cast<double>(q);
    double sum_theta = 0.0, sum_theta2 = 0.0;
    for (size_t b = 0; b < basis.size(); ++b) {
        sum_theta += theta[b];
        sum_theta2 += theta[b] * theta[b];
    }
    st.diagonal_contribution =
        w * (sum_theta2 - 2.0 * st.expectation * sum_theta) / static_cast<double>(q);
    return st;
}

}  // namespace mubkit
