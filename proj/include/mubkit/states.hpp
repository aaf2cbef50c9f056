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
 * Dense q-dimensional state vectors with a dual representation: float
 * amplitudes for numerics plus an optional exact form (global 1/sqrt(d) scale
 * and a root-of-unity exponent, or an exact zero, per component). Overlap
 * classification against {0, 1/sqrt(q), 1} is the basic verification step for
 * unbiasedness checks; "other" is a reportable outcome, not an error.
 */

#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mubkit/roots.hpp"

namespace mubkit {

/// amplitudes[i] = zeta_root_order^exponents[i] / sqrt(scale_denom_sqrt); nullopt marks exact 0.
struct ExactForm {
    long scale_denom_sqrt = 1;
    int root_order = 1;
    std::vector<std::optional<int>> exponents;

    cplx amplitude(size_t i) const {
        if (!exponents[i]) return {0.0, 0.0};
        return RootOfUnity(root_order, *exponents[i]).value() /
               std::sqrt(static_cast<double>(scale_denom_sqrt));
    }
};

class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(std::vector<cplx> amps, std::optional<ExactForm> exact = std::nullopt)
        : amps_(std::move(amps)), exact_(std::move(exact)) {
        if (exact_ && exact_->exponents.size() != amps_.size())
            throw std::invalid_argument("StateVector: exact form size mismatch");
    }

    size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    const cplx& amplitude(size_t i) const { return amps_[i]; }
    const std::optional<ExactForm>& exact() const { return exact_; }

    double norm() const {
        double s = 0.0;
        for (const cplx& a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }
    bool is_normalized(double tol = 1e-12) const { return std::abs(norm() - 1.0) <= tol; }

    /// Max deviation between float amplitudes and the exact form (0 when absent).
    double exact_mismatch() const {
        if (!exact_) return 0.0;
        double worst = 0.0;
        for (size_t i = 0; i < amps_.size(); ++i)
            worst = std::max(worst, std::abs(amps_[i] - exact_->amplitude(i)));
        return worst;
    }

  private:
    std::vector<cplx> amps_;
    std::optional<ExactForm> exact_;
};

/// Conjugate-linear in the first argument.
inline cplx inner_product(const StateVector& u, const StateVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
    cplx s{0.0, 0.0};
    for (size_t i = 0; i < u.dim(); ++i) s += std::conj(u.amplitude(i)) * v.amplitude(i);
    return s;
}

enum class Overlap { identical, orthogonal, unbiased, other };

inline const char* to_string(Overlap o) {
    switch (o) {
        case Overlap::identical: return "identical";
        case Overlap::orthogonal: return "orthogonal";
        case Overlap::unbiased: return "unbiased";
        default: return "other";
    }
}

/// Classify |<u|v>| against {1, 0, 1/sqrt(dim)} at the given tolerance.
inline Overlap classify_overlap(const StateVector& u, const StateVector& v, double tol = 1e-9) {
    const double mag = std::abs(inner_product(u, v));
    if (std::abs(mag - 1.0) <= tol) return Overlap::identical;
    if (mag <= tol) return Overlap::orthogonal;
    if (std::abs(mag - 1.0 / std::sqrt(static_cast<double>(u.dim()))) <= tol)
        return Overlap::unbiased;
    return Overlap::other;
}

/// A labeled list of q states, expected (and checkable) to be orthonormal.
class Basis {
  public:
    Basis() = default;
    Basis(std::string label, std::vector<StateVector> vecs,
          std::optional<std::vector<double>> phase_labels = std::nullopt)
        : label_(std::move(label)), vecs_(std::move(vecs)), phases_(std::move(phase_labels)) {
        if (phases_ && phases_->size() != vecs_.size())
            throw std::invalid_argument("Basis: phase label count mismatch");
    }

    const std::string& label() const { return label_; }
    size_t size() const { return vecs_.size(); }
    size_t dim() const { return vecs_.empty() ? 0 : vecs_[0].dim(); }
    const StateVector& vector(size_t i) const { return vecs_[i]; }
    const std::vector<StateVector>& vectors() const { return vecs_; }
    const std::optional<std::vector<double>>& phase_labels() const { return phases_; }

    /// Max deviation of the Gram matrix from the identity.
    double orthonormality_residual() const {
        double worst = 0.0;
        for (size_t i = 0; i < vecs_.size(); ++i) {
            for (size_t j = i; j < vecs_.size(); ++j) {
                cplx g = inner_product(vecs_[i], vecs_[j]);
                if (i == j) g -= 1.0;
                worst = std::max(worst, std::abs(g));
            }
        }
        return worst;
    }
    bool orthonormal(double tol = 1e-10) const { return orthonormality_residual() <= tol; }

  private:
    std::string label_;
    std::vector<StateVector> vecs_;
    std::optional<std::vector<double>> phases_;
};

inline Basis computational_basis(long q) {
    std::vector<StateVector> vecs;
    vecs.reserve(q);
    for (long k = 0; k < q; ++k) {
        std::vector<cplx> a(q, cplx{0.0, 0.0});
        a[k] = {1.0, 0.0};
        ExactForm ef;
        ef.scale_denom_sqrt = 1;
        ef.root_order = 1;
        ef.exponents.assign(q, std::nullopt);
        ef.exponents[k] = 0;
        vecs.emplace_back(std::move(a), std::move(ef));
    }
    return Basis("computational", std::move(vecs));
}

}  // namespace mubkit
