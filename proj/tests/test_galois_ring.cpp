// GR(4,m): Hensel lift oracles, Teichmueller decomposition, Frobenius, trace.
#include "doctest.h"
#include "mubkit/galois_ring.hpp"

#include <map>

using namespace mubkit;

namespace {

// test-side polynomial product over Z_4, low-to-high coefficients
std::vector<int> z4_mul(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % 4;
    return out;
}

// test-side check that g divides x^n - 1 over Z_4
bool z4_divides_xn1(const std::vector<int>& g, long n) {
    std::vector<int> f(n + 1, 0);
    f[0] = 3;
    f[n] = (f[n] + 1) % 4;
    const int dg = static_cast<int>(g.size()) - 1;
    for (long i = n; i >= dg; --i) {
        int c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % 4 + 4) % 4;
    }
    for (int c : f)
        if (c != 0) return false;
    return true;
}

}  // namespace

TEST_SUITE("galois_ring") {

TEST_CASE("m=1 is Z_4") {
    GaloisRing r(1);
    CHECK(r.size() == 4);
    CHECK(r.teich_count() == 2);
    CHECK(r.index(r.teichmuller()[0]) == 0);
    CHECK(r.index(r.teichmuller()[1]) == 1);
    // trace is the identity on Z_4
    for (long i = 0; i < 4; ++i) CHECK(r.trace(r.element(i)) == i);
    // characteristic 4
    CHECK(r.two() + r.two() == r.zero());
    CHECK(r.two() * r.two() == r.zero());
}

TEST_CASE("m=2: h = x^2 + x + 1 and (x-1) h = x^3 - 1 over Z_4") {
    GaloisRing r(2);
    CHECK(r.h() == std::vector<int>{1, 1, 1});
    auto prod = z4_mul({3, 1}, r.h());  // (x - 1) h
    CHECK(prod == std::vector<int>{3, 0, 0, 1});  // x^3 - 1
    CHECK(z4_divides_xn1(r.h(), 3));
    // T_2 = (0, 1, xi, xi^2) with xi^2 = 3 + 3 xi
    const auto& t = r.teichmuller();
    REQUIRE(t.size() == 4);
    CHECK(r.index(t[2]) == r.index(r.xi()));
    CHECK(t[3] == r.xi() * r.xi());
    CHECK(t[3].coeffs() == std::vector<int>{3, 3});
}

TEST_CASE("m=3: h is the lift of x^3 + x + 1 and divides x^7 - 1 over Z_4") {
    GaloisRing r(3);
    CHECK(r.h() == std::vector<int>{3, 1, 2, 1});  // x^3 + 2x^2 + x + 3
    std::vector<int> mod2;
    for (int c : r.h()) mod2.push_back(c % 2);
    CHECK(mod2 == std::vector<int>{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(z4_divides_xn1(r.h(), 7));
}

TEST_CASE("xi has multiplicative order 2^m - 1") {
    for (int m : {2, 3, 4}) {
        GaloisRing r(m);
        const long n = r.teich_count() - 1;
        CHECK(r.xi().pow(n) == r.one());
        for (long d = 1; d < n; ++d)
            if (n % d == 0) CHECK(r.xi().pow(d) != r.one());
    }
}

TEST_CASE("decompose: examples and the a = y^(2^m) identity") {
    GaloisRing r(2);
    auto [a0, b0] = r.decompose(r.zero());
    CHECK(a0 == r.zero());
    CHECK(b0 == r.zero());
    auto [a2, b2] = r.decompose(r.two());
    CHECK(a2 == r.zero());
    CHECK(b2 == r.one());

    // y = xi + 2 xi^2: parts (xi, xi^2), and y^4 = xi
    RingElement y = r.xi() + r.scale2(r.xi() * r.xi());
    auto [a, b] = r.decompose(y);
    CHECK(a == r.xi());
    CHECK(b == r.xi() * r.xi());
    CHECK(y.pow(4) == r.xi());
}

TEST_CASE("(a, b) -> a + 2b is a bijection T x T -> GR(4,m), m <= 3") {
    for (int m : {1, 2, 3}) {
        GaloisRing r(m);
        std::map<long, int> hits;
        for (const RingElement& a : r.teichmuller())
            for (const RingElement& b : r.teichmuller()) ++hits[r.index(a + r.scale2(b))];
        CHECK(hits.size() == static_cast<size_t>(r.size()));
        for (auto& [idx, cnt] : hits) CHECK(cnt == 1);
        // and decompose inverts it
        for (long i = 0; i < r.size(); ++i) {
            auto [a, b] = r.decompose(r.element(i));
            CHECK(r.teich_position(a));
            CHECK(r.teich_position(b));
            CHECK(a + r.scale2(b) == r.element(i));
        }
    }
}

TEST_CASE("Frobenius: automorphism of order m") {
    GaloisRing r2(2);
    CHECK(r2.frobenius(r2.zero()) == r2.zero());
    CHECK(r2.frobenius(r2.one()) == r2.one());
    for (long i = 0; i < r2.size(); ++i) {
        RingElement y = r2.element(i);
        CHECK(r2.frobenius(r2.frobenius(y)) == y);  // sigma^2 = id
        for (long j = 0; j < r2.size(); ++j) {
            RingElement z = r2.element(j);
            CHECK(r2.frobenius(y + z) == r2.frobenius(y) + r2.frobenius(z));
            CHECK(r2.frobenius(y * z) == r2.frobenius(y) * r2.frobenius(z));
        }
    }
    GaloisRing r3(3);
    for (long i = 0; i < r3.size(); ++i) {
        RingElement y = r3.element(i);
        CHECK(r3.frobenius(r3.frobenius(r3.frobenius(y))) == y);
    }
    // on Teichmueller elements sigma squares
    for (const RingElement& t : r3.teichmuller()) CHECK(r3.frobenius(t) == t * t);
}

TEST_CASE("decompose commutes with Frobenius componentwise") {
    for (int m : {2, 3}) {
        GaloisRing r(m);
        for (long i = 0; i < r.size(); ++i) {
            RingElement y = r.element(i);
            auto [a, b] = r.decompose(y);
            auto [fa, fb] = r.decompose(r.frobenius(y));
            CHECK(fa == a * a);
            CHECK(fb == b * b);
        }
    }
}

TEST_CASE("trace: values, additivity and fibers") {
    GaloisRing r(2);
    CHECK(r.trace(r.zero()) == 0);
    CHECK(r.trace(r.one()) == 2);  // 1 + sigma(1) = 2
    for (long i = 0; i < r.size(); ++i)
        for (long j = 0; j < r.size(); ++j)
            CHECK(r.trace(r.element(i) + r.element(j)) ==
                  (r.trace(r.element(i)) + r.trace(r.element(j))) % 4);
    for (int m : {1, 2, 3}) {
        GaloisRing rr(m);
        std::vector<long> fiber(4, 0);
        for (long i = 0; i < rr.size(); ++i) ++fiber[rr.trace(rr.element(i))];
        for (int t = 0; t < 4; ++t) CHECK(fiber[t] == rr.size() / 4);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(GaloisRing(0), std::invalid_argument);
    GaloisRing a(2), b(2);
    CHECK_THROWS_AS((void)(a.one() + b.one()), std::invalid_argument);
    CHECK_THROWS_AS((void)a.pow(a.one(), -1), std::invalid_argument);
}

}  // TEST_SUITE
