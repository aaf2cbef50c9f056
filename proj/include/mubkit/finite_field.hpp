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
 * Exact arithmetic in GF(p^m).
 *
 * Elements are polynomial residues modulo a monic irreducible polynomial over
 * Z_p, stored as length-m coefficient vectors with the canonical integer
 * encoding idx(x) = sum coeffs[i] * p^i. When no modulus is supplied the
 * lexicographically smallest monic irreducible (by coefficient tuple, constant
 * term first) is selected, and the generator is the smallest-index element of
 * multiplicative order q-1, so a field is reproducible from (p, m) alone.
 *
 * A Field is immutable once constructed; elements are small value types that
 * reference it and are safe to share across threads.
 */

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mubkit/util.hpp"

namespace mubkit {

class Field;

class FieldElement {
  public:
    FieldElement() = default;

    const Field& field() const { return *field_; }
    const std::vector<int>& coeffs() const { return c_; }
    long index() const;
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    FieldElement pow(long e) const;
    FieldElement inverse() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    friend class Field;
    FieldElement(const Field* f, std::vector<int> c) : field_(f), c_(std::move(c)) {}

    const Field* field_ = nullptr;
    std::vector<int> c_;
};

class Field {
  public:
    /// Build GF(p^m); finds the canonical modulus when none is given.
    Field(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt)
        : p_(p), m_(m) {
        if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
        if (m < 1) throw std::invalid_argument("Field: extension degree must be >= 1");
        q_ = ipow(p, m);
        if (modulus) {
            modulus_ = normalize_modulus(*modulus);
            if (!is_irreducible(modulus_))
                throw std::invalid_argument("Field: supplied modulus is reducible over Z_p");
        } else {
            modulus_ = find_smallest_irreducible();
        }
        build_tables();
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    int p() const { return p_; }
    int m() const { return m_; }
    long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(this, std::vector<int>(m_, 0)); }
    FieldElement one() const { return element(1 % q_); }
    FieldElement generator() const { return element(generator_idx_); }

    /// Element with canonical index idx (base-p coefficient encoding).
    FieldElement element(long idx) const {
        if (idx < 0 || idx >= q_) throw std::invalid_argument("Field: index out of range");
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) {
            c[i] = static_cast<int>(idx % p_);
            idx /= p_;
        }
        return FieldElement(this, std::move(c));
    }

    FieldElement from_coeffs(std::vector<int> c) const {
        if (static_cast<int>(c.size()) != m_)
            throw std::invalid_argument("Field: coefficient vector must have length m");
        for (int& v : c) v = mod_nonneg(v, p_);
        return FieldElement(this, std::move(c));
    }

    long index(const FieldElement& x) const {
        long idx = 0;
        for (int i = m_ - 1; i >= 0; --i) idx = idx * p_ + x.coeffs()[i];
        return idx;
    }

    /// All q elements in canonical order; position i holds the element of index i.
    std::vector<FieldElement> elements() const {
        std::vector<FieldElement> out;
        out.reserve(q_);
        for (long i = 0; i < q_; ++i) out.push_back(element(i));
        return out;
    }

    /// Trace to the ground field, tr(x) = x + x^p + ... + x^(p^(m-1)), in [0, p).
    int trace(const FieldElement& x) const { return trace_table_[index(x)]; }

    /// Discrete logarithm base the canonical generator; throws on zero.
    long dlog(const FieldElement& x) const {
        if (x.is_zero()) throw std::invalid_argument("Field: dlog of zero");
        return dlog_table_[index(x)];
    }

    /// generator^k (k reduced mod q-1).
    FieldElement exp(long k) const { return element(exp_table_[mod_nonneg(k, static_cast<int>(q_ - 1))]); }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        require_same(a, b);
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % p_;
        return FieldElement(this, std::move(c));
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        require_same(a, b);
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) c[i] = mod_nonneg(a.coeffs()[i] - b.coeffs()[i], p_);
        return FieldElement(this, std::move(c));
    }

    FieldElement neg(const FieldElement& a) const {
        require_owned(a);
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) c[i] = mod_nonneg(-a.coeffs()[i], p_);
        return FieldElement(this, std::move(c));
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        require_same(a, b);
        return FieldElement(this, raw_mul(a.coeffs(), b.coeffs()));
    }

    FieldElement pow(const FieldElement& a, long e) const {
        require_owned(a);
        if (e < 0) throw std::invalid_argument("Field: pow exponent must be nonnegative");
        return FieldElement(this, raw_pow(a.coeffs(), e));
    }

    FieldElement inverse(const FieldElement& a) const {
        require_owned(a);
        if (a.is_zero()) throw std::invalid_argument("Field: inverse of zero");
        return exp(static_cast<long>(q_ - 1) - dlog(a));
    }

  private:
    friend class FieldElement;

    void require_owned(const FieldElement& a) const {
        if (&a.field() != this) throw std::invalid_argument("Field: element from a different field");
    }
    void require_same(const FieldElement& a, const FieldElement& b) const {
        require_owned(a);
        require_owned(b);
    }

    std::vector<int> normalize_modulus(std::vector<int> mod) const {
        if (static_cast<int>(mod.size()) != m_ + 1)
            throw std::invalid_argument("Field: modulus must have degree m");
        for (int& v : mod) v = mod_nonneg(v, p_);
        if (mod[m_] != 1) throw std::invalid_argument("Field: modulus must be monic");
        return mod;
    }

    // --- raw polynomial arithmetic over Z_p, coefficients low to high ---

    std::vector<int> raw_mul(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> prod(2 * m_ - 1, 0);
        for (int i = 0; i < m_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        }
        // reduce mod the monic modulus
        for (int d = 2 * m_ - 2; d >= m_; --d) {
            int c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int j = 0; j < m_; ++j)
                prod[d - m_ + j] = mod_nonneg(prod[d - m_ + j] - c * modulus_[j], p_);
        }
        prod.resize(m_);
        return prod;
    }

    std::vector<int> raw_pow(std::vector<int> base, long e) const {
        std::vector<int> acc(m_, 0);
        acc[0] = 1 % p_;
        while (e > 0) {
            if (e & 1) acc = raw_mul(acc, base);
            base = raw_mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    // Trial division by every monic polynomial of degree 1..deg/2.
    bool is_irreducible(const std::vector<int>& f) const {
        const int deg = static_cast<int>(f.size()) - 1;
        if (deg == 1) return true;
        for (int d = 1; 2 * d <= deg; ++d) {
            const long count = ipow(p_, d);
            for (long t = 0; t < count; ++t) {
                std::vector<int> g(d + 1, 0);
                long v = t;
                for (int i = 0; i < d; ++i) {
                    g[i] = static_cast<int>(v % p_);
                    v /= p_;
                }
                g[d] = 1;
                if (divides(g, f)) return false;
            }
        }
        return true;
    }

    bool divides(const std::vector<int>& g, std::vector<int> f) const {
        const int dg = static_cast<int>(g.size()) - 1;
        for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
            int c = f[i];
            if (c == 0) continue;
            for (int j = 0; j <= dg; ++j) f[i - dg + j] = mod_nonneg(f[i - dg + j] - c * g[j], p_);
        }
        return std::all_of(f.begin(), f.end(), [](int v) { return v == 0; });
    }

    std::vector<int> find_smallest_irreducible() const {
        // Coefficient tuples ordered with the constant term most significant.
        for (long t = 0; t < q_; ++t) {
            std::vector<int> f(m_ + 1, 0);
            long v = t;
            for (int i = m_ - 1; i >= 0; --i) {
                f[i] = static_cast<int>(v % p_);
                v /= p_;
            }
            f[m_] = 1;
            if (is_irreducible(f)) return f;
        }
        throw std::logic_error("Field: no irreducible polynomial found");
    }

    void build_tables() {
        // trace of each element via repeated Frobenius
        trace_table_.assign(q_, 0);
        for (long i = 0; i < q_; ++i) {
            std::vector<int> x(m_);
            long v = i;
            for (int j = 0; j < m_; ++j) {
                x[j] = static_cast<int>(v % p_);
                v /= p_;
            }
            std::vector<int> acc = x;
            std::vector<int> t = x;
            for (int k = 1; k < m_; ++k) {
                t = raw_pow(t, p_);
                for (int j = 0; j < m_; ++j) acc[j] = (acc[j] + t[j]) % p_;
            }
            for (int j = 1; j < m_; ++j)
                if (acc[j] != 0) throw std::logic_error("Field: trace not in the ground field");
            trace_table_[i] = acc[0];
        }

        // generator: smallest index of multiplicative order exactly q-1
        const long n = q_ - 1;
        const auto factors = prime_factors(n);
        generator_idx_ = 0;
        for (long i = 1; i < q_; ++i) {
            std::vector<int> x(m_);
            long v = i;
            for (int j = 0; j < m_; ++j) {
                x[j] = static_cast<int>(v % p_);
                v /= p_;
            }
            bool ok = true;
            for (long r : factors) {
                auto y = raw_pow(x, n / r);
                long yidx = 0;
                for (int j = m_ - 1; j >= 0; --j) yidx = yidx * p_ + y[j];
                if (yidx == 1 % q_) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                generator_idx_ = i;
                break;
            }
        }
        if (generator_idx_ == 0) throw std::logic_error("Field: no generator found");

        // dlog / exp tables by walking the generator's powers
        dlog_table_.assign(q_, 0);
        exp_table_.assign(n > 0 ? n : 1, 0);
        std::vector<int> g(m_);
        {
            long v = generator_idx_;
            for (int j = 0; j < m_; ++j) {
                g[j] = static_cast<int>(v % p_);
                v /= p_;
            }
        }
        std::vector<int> cur(m_, 0);
        cur[0] = 1 % p_;
        for (long k = 0; k < n; ++k) {
            long idx = 0;
            for (int j = m_ - 1; j >= 0; --j) idx = idx * p_ + cur[j];
            exp_table_[k] = idx;
            dlog_table_[idx] = k;
            cur = raw_mul(cur, g);
        }
    }

    int p_;
    int m_;
    long q_;
    std::vector<int> modulus_;
    long generator_idx_ = 0;
    std::vector<int> trace_table_;
    std::vector<long> dlog_table_;
    std::vector<long> exp_table_;
};

inline long FieldElement::index() const { return field_->index(*this); }

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return a.field().add(a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a.field().sub(a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return a.field().mul(a, b);
}
inline FieldElement FieldElement::operator-() const { return field_->neg(*this); }
inline FieldElement FieldElement::pow(long e) const { return field_->pow(*this, e); }
inline FieldElement FieldElement::inverse() const { return field_->inverse(*this); }

}  // namespace mubkit
