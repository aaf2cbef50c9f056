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
 * Exact arithmetic in the Galois ring GR(4,m) of characteristic 4.
 *
 * The ring is Z_4[x]/(h(x)) where h is the basic primitive polynomial of
 * degree m: the unique Hensel lift to Z_4 of the lexicographically smallest
 * primitive binary polynomial, verified to divide x^(2^m-1) - 1 over Z_4.
 * The Teichmueller set T_m = (0, 1, xi, xi^2, ...) is kept in that fixed
 * order; it indexes kets for the m-qubit bases. Every y decomposes uniquely
 * as y = a + 2b with a, b in T_m and a = y^(2^m); the Frobenius automorphism
 * acts by sigma(a + 2b) = a^2 + 2b^2 and the trace to Z_4 sums its orbit.
 *
 * A GaloisRing is immutable once constructed; elements are value types.
 */

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mubkit/util.hpp"

namespace mubkit {

class GaloisRing;

class RingElement {
  public:
    RingElement() = default;

    const GaloisRing& ring() const { return *ring_; }
    const std::vector<int>& coeffs() const { return c_; }
    long index() const;
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement operator-() const;
    RingElement pow(long e) const;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.c_ == b.c_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  private:
    friend class GaloisRing;
    RingElement(const GaloisRing* r, std::vector<int> c) : ring_(r), c_(std::move(c)) {}

    const GaloisRing* ring_ = nullptr;
    std::vector<int> c_;
};

class GaloisRing {
  public:
    explicit GaloisRing(int m) : m_(m) {
        if (m < 1) throw std::invalid_argument("GaloisRing: degree must be >= 1");
        size_ = ipow(4, m);
        units_ = ipow(2, m) - 1;  // order of xi
        if (m == 1) {
            h_ = {3, 1};  // x - 1; unused by the arithmetic, the ring is Z_4
        } else {
            h_ = hensel_lift(smallest_primitive_binary());
        }
        build_teichmuller();
        build_tables();
    }

    GaloisRing(const GaloisRing&) = delete;
    GaloisRing& operator=(const GaloisRing&) = delete;

    int m() const { return m_; }
    long size() const { return size_; }                  // 4^m
    int teich_count() const { return units_ + 1; }       // 2^m
    const std::vector<int>& h() const { return h_; }

    RingElement zero() const { return RingElement(this, std::vector<int>(m_, 0)); }
    RingElement one() const { return element(1); }
    RingElement two() const { return element(2); }
    /// The distinguished root of h: the class of x for m >= 2, and 1 for m = 1.
    RingElement xi() const { return RingElement(this, xi_coeffs_); }

    RingElement element(long idx) const {
        if (idx < 0 || idx >= size_) throw std::invalid_argument("GaloisRing: index out of range");
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) {
            c[i] = static_cast<int>(idx % 4);
            idx /= 4;
        }
        return RingElement(this, std::move(c));
    }

    RingElement from_coeffs(std::vector<int> c) const {
        if (static_cast<int>(c.size()) != m_)
            throw std::invalid_argument("GaloisRing: coefficient vector must have length m");
        for (int& v : c) v = mod_nonneg(v, 4);
        return RingElement(this, std::move(c));
    }

    long index(const RingElement& x) const {
        long idx = 0;
        for (int i = m_ - 1; i >= 0; --i) idx = idx * 4 + x.coeffs()[i];
        return idx;
    }

    std::vector<RingElement> elements() const {
        std::vector<RingElement> out;
        out.reserve(size_);
        for (long i = 0; i < size_; ++i) out.push_back(element(i));
        return out;
    }

    /// Teichmueller set in the fixed order (0, 1, xi, xi^2, ..., xi^(2^m-2)).
    const std::vector<RingElement>& teichmuller() const { return teich_; }

    /// Position of x within the Teichmueller order, if x belongs to T_m.
    std::optional<int> teich_position(const RingElement& x) const {
        require_owned(x);
        int pos = teich_pos_[index(x)];
        if (pos < 0) return std::nullopt;
        return pos;
    }

    /// Whether y lies in 2*T_m (equivalently, y^(2^m) = 0).
    bool in_two_teich(const RingElement& y) const {
        return decompose(y).first.is_zero();
    }

    /// Unique (a, b) in T_m x T_m with y = a + 2b; a = y^(2^m).
    std::pair<RingElement, RingElement> decompose(const RingElement& y) const {
        require_owned(y);
        RingElement a = pow(y, units_ + 1);
        RingElement z = sub(y, a);
        long bits = 0;
        for (int i = m_ - 1; i >= 0; --i) {
            int v = z.coeffs()[i];
            if (v % 2 != 0) throw std::logic_error("GaloisRing: decompose residue is odd");
            bits = bits * 2 + v / 2;
        }
        const RingElement& b = teich_[mod2_to_teich_[bits]];
        return {a, b};
    }

    /// sigma(a + 2b) = a^2 + 2b^2; ring automorphism of order m.
    RingElement frobenius(const RingElement& y) const {
        auto [a, b] = decompose(y);
        return add(mul(a, a), scale2(mul(b, b)));
    }

    /// Trace to Z_4: sum of the Frobenius orbit of y.
    int trace(const RingElement& y) const { return trace_table_[index(y)]; }

    RingElement add(const RingElement& a, const RingElement& b) const {
        require_same(a, b);
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % 4;
        return RingElement(this, std::move(c));
    }

    RingElement sub(const RingElement& a, const RingElement& b) const {
        require_same(a, b);
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) c[i] = mod_nonneg(a.coeffs()[i] - b.coeffs()[i], 4);
        return RingElement(this, std::move(c));
    }

    RingElement neg(const RingElement& a) const {
        require_owned(a);
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) c[i] = mod_nonneg(-a.coeffs()[i], 4);
        return RingElement(this, std::move(c));
    }

    RingElement mul(const RingElement& a, const RingElement& b) const {
        require_same(a, b);
        return RingElement(this, raw_mul(a.coeffs(), b.coeffs()));
    }

    RingElement scale2(const RingElement& a) const {
        require_owned(a);
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) c[i] = (2 * a.coeffs()[i]) % 4;
        return RingElement(this, std::move(c));
    }

    RingElement pow(const RingElement& a, long e) const {
        require_owned(a);
        if (e < 0) throw std::invalid_argument("GaloisRing: pow exponent must be nonnegative");
        std::vector<int> acc(m_, 0);
        acc[0] = 1;
        std::vector<int> base = a.coeffs();
        while (e > 0) {
            if (e & 1) acc = raw_mul(acc, base);
            base = raw_mul(base, base);
            e >>= 1;
        }
        return RingElement(this, std::move(acc));
    }

  private:
    friend class RingElement;

    void require_owned(const RingElement& a) const {
        if (&a.ring() != this) throw std::invalid_argument("GaloisRing: element from a different ring");
    }
    void require_same(const RingElement& a, const RingElement& b) const {
        require_owned(a);
        require_owned(b);
    }

    std::vector<int> raw_mul(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> prod(2 * m_ - 1, 0);
        for (int i = 0; i < m_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % 4;
        }
        for (int d = 2 * m_ - 2; d >= m_; --d) {
            int c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int j = 0; j < m_; ++j)
                prod[d - m_ + j] = mod_nonneg(prod[d - m_ + j] - c * h_[j], 4);
        }
        prod.resize(m_);
        return prod;
    }

    // --- binary polynomial helpers for the lift (coefficients 0/1, low to high) ---

    static int deg2(const std::vector<int>& f) {
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
            if (f[i] != 0) return i;
        return -1;
    }

    static std::vector<int> mul2(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out(deg2(a) + deg2(b) + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j]) out[i + j] ^= 1;
        }
        return out;
    }

    static std::pair<std::vector<int>, std::vector<int>> divmod2(std::vector<int> f,
                                                                 const std::vector<int>& g) {
        const int dg = deg2(g);
        std::vector<int> quot(std::max<int>(deg2(f) - dg + 1, 1), 0);
        for (int i = deg2(f); i >= dg; --i) {
            if (!f[i]) continue;
            quot[i - dg] = 1;
            for (int j = 0; j <= dg; ++j) f[i - dg + j] ^= g[j];
        }
        return {quot, f};
    }

    bool irreducible2(const std::vector<int>& f) const {
        const int deg = deg2(f);
        for (int d = 1; 2 * d <= deg; ++d) {
            for (long t = 0; t < (1L << d); ++t) {
                std::vector<int> g(d + 1, 0);
                for (int i = 0; i < d; ++i) g[i] = static_cast<int>((t >> i) & 1);
                g[d] = 1;
                auto [quot, rem] = divmod2(f, g);
                (void)quot;
                if (deg2(rem) < 0) return false;
            }
        }
        return true;
    }

    std::vector<int> powmod2_x(long e, const std::vector<int>& f) const {
        std::vector<int> acc{1};
        std::vector<int> base{0, 1};
        while (e > 0) {
            if (e & 1) acc = divmod2(mul2(acc, base), f).second;
            base = divmod2(mul2(base, base), f).second;
            e >>= 1;
        }
        acc.resize(f.size(), 0);
        return acc;
    }

    std::vector<int> smallest_primitive_binary() const {
        // Tuples ordered with the leading-side coefficients most significant,
        // so degree m picks the classic x^m + (low-degree tail) + 1 choices
        // (x^2+x+1, x^3+x+1, ...).
        const long n = units_;
        const auto factors = prime_factors(n);
        for (long t = 0; t < (1L << m_); ++t) {
            std::vector<int> f(m_ + 1, 0);
            for (int i = 0; i < m_; ++i) f[i] = static_cast<int>((t >> i) & 1);
            f[m_] = 1;
            if (!irreducible2(f)) continue;
            bool primitive = true;
            for (long r : factors) {
                auto y = powmod2_x(n / r, f);
                if (deg2(y) == 0 && y[0] == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return f;
        }
        throw std::logic_error("GaloisRing: no primitive binary polynomial found");
    }

    /// One quadratic Hensel step: lift f2 | x^n - 1 from Z_2 to Z_4.
    std::vector<int> hensel_lift(const std::vector<int>& f2) const {
        const long n = units_;
        std::vector<int> xn1(n + 1, 0);  // x^n - 1 over Z_2
        xn1[0] = 1;
        xn1[n] = 1;
        auto [g2, rem] = divmod2(xn1, f2);
        if (deg2(rem) >= 0) throw std::logic_error("GaloisRing: f2 does not divide x^n - 1");
        g2.resize(n + 1, 0);

        // extended Euclid over F_2[x]: u*f2 + v*g2 = 1
        std::vector<int> r0 = f2, r1 = g2, v0{0}, v1{1};
        while (deg2(r1) >= 0) {
            auto [q, r] = divmod2(r0, r1);
            std::vector<int> vq = mul2(q, v1);
            vq.resize(std::max(vq.size(), v0.size()), 0);
            for (size_t i = 0; i < v0.size(); ++i) vq[i] ^= v0[i];
            r0 = r1;
            r1 = r;
            v0 = v1;
            v1 = vq;
        }
        if (!(deg2(r0) == 0 && r0[0] == 1))
            throw std::logic_error("GaloisRing: cofactors are not coprime");
        const std::vector<int>& v = v0;  // v*g2 = 1 mod f2

        // defect D = ((x^n - 1) - f2*g2)/2 over Z_2, then correction s = D*v mod f2
        std::vector<int> prod(2 * n + 1, 0);
        for (int i = 0; i <= m_; ++i) {
            if (!f2[i]) continue;
            for (long j = 0; j <= n; ++j)
                if (g2[j]) prod[i + j] = (prod[i + j] + 1) % 4;
        }
        std::vector<int> target(2 * n + 1, 0);  // x^n - 1 over Z_4
        target[0] = 3;
        target[n] = (target[n] + 1) % 4;
        std::vector<int> d(2 * n + 1, 0);
        for (long i = 0; i <= 2 * n; ++i) {
            int e = mod_nonneg(target[i] - prod[i], 4);
            if (e % 2 != 0) throw std::logic_error("GaloisRing: defect is not even");
            d[i] = e / 2;
        }
        auto s = divmod2(mul2(d, v), f2).second;
        s.resize(m_, 0);

        std::vector<int> hh(m_ + 1, 0);
        for (int i = 0; i <= m_; ++i) hh[i] = (f2[i] + 2 * (i < m_ ? s[i] : 0)) % 4;

        if (!divides_xn1_z4(hh)) throw std::logic_error("GaloisRing: lifted h does not divide x^n - 1");
        return hh;
    }

    bool divides_xn1_z4(const std::vector<int>& hh) const {
        const long n = units_;
        std::vector<int> f(n + 1, 0);
        f[0] = 3;
        f[n] = (f[n] + 1) % 4;
        for (long i = n; i >= m_; --i) {
            int c = f[i];
            if (c == 0) continue;
            for (int j = 0; j <= m_; ++j) f[i - m_ + j] = mod_nonneg(f[i - m_ + j] - c * hh[j], 4);
        }
        return std::all_of(f.begin(), f.end(), [](int v) { return v == 0; });
    }

    void build_teichmuller() {
        xi_coeffs_.assign(m_, 0);
        if (m_ == 1)
            xi_coeffs_[0] = 1;
        else
            xi_coeffs_[1] = 1;
        teich_.clear();
        teich_.push_back(zero());
        std::vector<int> cur(m_, 0);
        cur[0] = 1;
        for (long j = 0; j < units_; ++j) {
            teich_.push_back(RingElement(this, cur));
            cur = raw_mul(cur, xi_coeffs_);
        }
        // closure check: xi^(2^m - 1) must return to 1
        std::vector<int> one_c(m_, 0);
        one_c[0] = 1;
        if (cur != one_c) throw std::logic_error("GaloisRing: xi does not have order 2^m - 1");
    }

    void build_tables() {
        teich_pos_.assign(size_, -1);
        for (size_t j = 0; j < teich_.size(); ++j) teich_pos_[index(teich_[j])] = static_cast<int>(j);

        mod2_to_teich_.assign(1L << m_, -1);
        for (size_t j = 0; j < teich_.size(); ++j) {
            long bits = 0;
            for (int i = m_ - 1; i >= 0; --i) bits = bits * 2 + teich_[j].coeffs()[i] % 2;
            if (mod2_to_teich_[bits] != -1)
                throw std::logic_error("GaloisRing: Teichmueller reduction collision");
            mod2_to_teich_[bits] = static_cast<int>(j);
        }

        trace_table_.assign(size_, 0);
        for (long i = 0; i < size_; ++i) {
            RingElement y = element(i);
            RingElement acc = y;
            RingElement t = y;
            for (int k = 1; k < m_; ++k) {
                t = frobenius(t);
                acc = add(acc, t);
            }
            for (int j = 1; j < m_; ++j)
                if (acc.coeffs()[j] != 0) throw std::logic_error("GaloisRing: trace not in Z_4");
            trace_table_[i] = acc.coeffs()[0];
        }
    }

    int m_;
    long size_;
    long units_;
    std::vector<int> h_;
    std::vector<int> xi_coeffs_;
    std::vector<RingElement> teich_;
    std::vector<int> teich_pos_;
    std::vector<int> mod2_to_teich_;
    std::vector<int> trace_table_;
};

inline long RingElement::index() const { return ring_->index(*this); }

inline RingElement operator+(const RingElement& a, const RingElement& b) {
    return a.ring().add(a, b);
}
inline RingElement operator-(const RingElement& a, const RingElement& b) {
    return a.ring().sub(a, b);
}
inline RingElement operator*(const RingElement& a, const RingElement& b) {
    return a.ring().mul(a, b);
}
inline RingElement RingElement::operator-() const { return ring_->neg(*this); }
inline RingElement RingElement::pow(long e) const { return ring_->pow(*this, e); }

}  // namespace mubkit
