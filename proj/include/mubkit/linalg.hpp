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
 * Small dense complex matrices. Dimensions here stay modest (q <= ~1024), so
 * everything is plain row-major storage and O(n^3) algorithms. Eigenvalues of
 * Hermitian matrices go through a cyclic Jacobi sweep on the real symmetric
 * 2n x 2n embedding [[Re, -Im], [Im, Re]], whose spectrum is that of the
 * complex matrix with every eigenvalue doubled.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "mubkit/roots.hpp"

namespace mubkit {

class OperatorMatrix {
  public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(long n) : n_(n), a_(n * n, cplx{0.0, 0.0}) {}

    long dim() const { return n_; }
    cplx& at(long i, long j) { return a_[i * n_ + j]; }
    const cplx& at(long i, long j) const { return a_[i * n_ + j]; }

    double hermiticity_residual() const {
        double worst = 0.0;
        for (long i = 0; i < n_; ++i)
            for (long j = 0; j < n_; ++j)
                worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
        return worst;
    }
    bool hermitian(double tol = 1e-10) const { return hermiticity_residual() <= tol; }

    double max_abs() const {
        double worst = 0.0;
        for (const cplx& v : a_) worst = std::max(worst, std::abs(v));
        return worst;
    }

    cplx trace() const {
        cplx t{0.0, 0.0};
        for (long i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

  private:
    long n_ = 0;
    std::vector<cplx> a_;
};

inline OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
    const long n = a.dim();
    OperatorMatrix out(n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            const cplx aik = a.at(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (long j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

inline OperatorMatrix subtract(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("subtract: dimension mismatch");
    OperatorMatrix out(a.dim());
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

inline double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
    return subtract(a, b).max_abs();
}

/// Eigenvalues of a Hermitian matrix, ascending.
inline std::vector<double> hermitian_eigenvalues(const OperatorMatrix& m) {
    const long n = m.dim();
    const long N = 2 * n;
    std::vector<double> b(N * N, 0.0);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            const cplx v = m.at(i, j);
            b[i * N + j] = v.real();
            b[(i + n) * N + (j + n)] = v.real();
            b[i * N + (j + n)] = -v.imag();
            b[(i + n) * N + j] = v.imag();
        }
    }
    auto off_norm = [&]() {
        double s = 0.0;
        for (long i = 0; i < N; ++i)
            for (long j = i + 1; j < N; ++j) s += b[i * N + j] * b[i * N + j];
        return s;
    };
    double scale = 0.0;
    for (long i = 0; i < N; ++i) scale = std::max(scale, std::abs(b[i * N + i]));
    for (double v : b) scale = std::max(scale, std::abs(v));
    const double stop = std::max(scale * scale, 1.0) * 1e-30;
    for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
        for (long p = 0; p < N - 1; ++p) {
            for (long q = p + 1; q < N; ++q) {
                const double apq = b[p * N + q];
                if (std::abs(apq) < 1e-300) continue;
                const double app = b[p * N + p];
                const double aqq = b[q * N + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (long k = 0; k < N; ++k) {
                    const double akp = b[k * N + p];
                    const double akq = b[k * N + q];
                    b[k * N + p] = c * akp - s * akq;
                    b[k * N + q] = s * akp + c * akq;
                }
                for (long k = 0; k < N; ++k) {
                    const double apk = b[p * N + k];
                    const double aqk = b[q * N + k];
                    b[p * N + k] = c * apk - s * aqk;
                    b[q * N + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(N);
    for (long i = 0; i < N; ++i) ev[i] = b[i * N + i];
    std::sort(ev.begin(), ev.end());
    // the embedding doubles every eigenvalue; collapse adjacent pairs
    std::vector<double> out(n);
    for (long i = 0; i < n; ++i) out[i] = 0.5 * (ev[2 * i] + ev[2 * i + 1]);
    return out;
}

}  // namespace mubkit
