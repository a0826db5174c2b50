#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "ffa/reference.hpp"
#include "ffa/walsh.hpp"

using namespace ffa;

namespace {

PValuedTable random_table(const FieldCtx& F, std::mt19937& rng) {
    PValuedTable f(F.q());
    for (auto& v : f) v = uint8_t(rng() % F.p());
    return f;
}

}  // namespace

TEST_CASE("slow trace reference agrees with the table") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 6}, {3, 4}, {5, 2}}) {
        FieldCtx F = FieldCtx::make(p, n);
        for (uint32_t x = 0; x < F.q(); ++x)
            REQUIRE(ref::abs_trace_slow(F, x) == F.abs_trace(x));
    }
}

TEST_CASE("spectrum engines agree and counts partition the field") {
    std::mt19937 rng(0xA11CE);
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 6}, {2, 8}, {3, 3}}) {
        FieldCtx F = FieldCtx::make(p, n);
        for (int trial = 0; trial < 5; ++trial) {
            PValuedTable f = random_table(F, rng);
            auto fast = walsh_spectrum(F, f);
            auto slow = ref::walsh_spectrum(F, f);
            REQUIRE(fast.size() == F.q());
            for (uint32_t v = 0; v < F.q(); ++v) {
                REQUIRE(fast[v].v == v);
                REQUIRE(fast[v].counts == slow[v].counts);
                REQUIRE(fast[v].counts == walsh_point(F, f, v).counts);
                int64_t total = 0;
                for (int64_t c : fast[v].counts) total += c;
                REQUIRE(total == int64_t(F.q()));
            }
        }
    }
}

TEST_CASE("parseval: squared magnitudes sum to q^2 exactly") {
    std::mt19937 rng(0x9A7);
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 10}, {3, 4}}) {
        FieldCtx F = FieldCtx::make(p, n);
        for (int trial = 0; trial < 8; ++trial) {
            PValuedTable f = random_table(F, rng);
            int64_t sum = 0;
            for (const WalshPoint& w : walsh_spectrum(F, f)) sum += w.mag_sq(p);
            REQUIRE(sum == int64_t(F.q()) * F.q());
        }
    }
}

TEST_CASE("a classic bent-adjacent example: Tr(x^3) on GF(2^3)") {
    FieldCtx F = FieldCtx::make(2, 3);
    PValuedTable f = quad_trace_table(F, {0, 1});  // Tr(x^(2+1))
    for (const WalshPoint& w : walsh_spectrum(F, f)) {
        int64_t c = w.coeff2();
        REQUIRE((c == 0 || c == 4 || c == -4));
    }
}

TEST_CASE("quadratic form kernel: dimension, membership, validation") {
    FieldCtx F = FieldCtx::make(2, 6);
    std::mt19937 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<uint32_t> a(1 + rng() % (F.n() / 2 + 1));
        for (auto& c : a) c = rng() % F.q();
        if (std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; })) a[0] = 1;
        LinearizedMap L = quad_form_kernel(F, a);
        auto ker = L.kernel_elements(F);
        REQUIRE(ker.size() == (size_t(1) << L.ell));
        for (uint32_t x : ker) REQUIRE(L.eval(F, x) == 0);
        // every kernel element is hit once
        std::sort(ker.begin(), ker.end());
        REQUIRE(std::adjacent_find(ker.begin(), ker.end()) == ker.end());
        // exhaustive cross-check of the kernel size against direct counting
        size_t direct = 0;
        for (uint32_t x = 0; x < F.q(); ++x)
            if (L.eval(F, x) == 0) ++direct;
        REQUIRE(direct == ker.size());
    }
    CHECK_THROWS_AS(quad_form_kernel(FieldCtx::make(2, 5), {1}), Error);  // odd degree
    CHECK_THROWS_AS(quad_form_kernel(F, std::vector<uint32_t>(F.n() / 2 + 2, 1)), Error);
}

TEST_CASE("two-valued law holds exhaustively for random quadratic forms") {
    std::mt19937 rng(0x2B);
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 6}, {3, 4}}) {
        FieldCtx F = FieldCtx::make(p, n);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<uint32_t> a(1 + rng() % (n / 2 + 1));
            for (auto& c : a) c = rng() % F.q();
            if (std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; })) a[0] = 1;

            LinearizedMap L = quad_form_kernel(F, a);
            PValuedTable f = quad_trace_table(F, a);
            int64_t peak = 1;
            for (unsigned i = 0; i < F.n() + L.ell; ++i) peak *= p;
            for (uint32_t v = 0; v < F.q(); ++v) {
                REQUIRE(quad_walsh_law_check(F, a, v));
                int64_t m = walsh_point(F, f, v).mag_sq(p);
                REQUIRE((m == 0 || m == peak));
            }
        }
    }
}

TEST_CASE("gold pair vanishing: explicit anchors") {
    FieldCtx F = FieldCtx::make(2, 6);

    SUBCASE("u = 1, (a, b) = (2, 4): exponents 5 and 17 are trace-equivalent") {
        // Tr(x^17) == Tr(x^5) on GF(2^6), so the sum is identically zero and
        // the transform must vanish everywhere off alpha = 0.
        PValuedTable f = gold_pair_table(F, 2, 4, 1);
        for (uint32_t x = 0; x < F.q(); ++x) REQUIRE(f[x] == 0);
        unsigned vanish_claims = 0;
        auto spec = walsh_spectrum(F, f);
        for (uint32_t alpha = 0; alpha < F.q(); ++alpha) {
            GoldPairVerdict v = gold_pair_vanishing(F, 2, 4, 1, alpha);
            if (v.must_vanish) {
                ++vanish_claims;
                REQUIRE(spec[alpha].mag_sq(2) == 0);
            }
        }
        CHECK(vanish_claims == F.q() - 1);
        CHECK(!gold_pair_vanishing(F, 2, 4, 1, 0).must_vanish);
    }

    SUBCASE("u = 0 yields no claim") {
        GoldPairVerdict v = gold_pair_vanishing(F, 1, 2, 0, 5);
        CHECK(!v.must_vanish);
        CHECK(v.rule == "u-zero-no-claim");
    }

    SUBCASE("equal-valuation pattern stays silent unless the terms cancel") {
        // (a, b) = (1, 3) on GF(2^4) with u in GF(4)\GF(2): the exponent
        // pair fuses to a single monomial Tr((u + u^2) x^3) with nonzero
        // coefficient, whose transform does NOT vanish off the claimed set.
        // The predicate must make no claim here.
        FieldCtx F4 = FieldCtx::make(2, 4);
        uint32_t w = 0;  // an element of GF(4) outside GF(2)
        for (uint32_t x : F4.subfield_elements(2))
            if (x > 1) { w = x; break; }
        REQUIRE(w != 0);
        GoldPairVerdict v = gold_pair_vanishing(F4, 1, 3, w, 1);
        CHECK(!v.must_vanish);
        CHECK(v.rule == "exceptional-valuation-no-claim");

        // (a, b) = (2, 6) on GF(2^8) with u in GF(4)\GF(2): now u is fixed
        // by Frobenius^2, the fused coefficient u + u^4 is zero, the table
        // is identically zero, and vanishing holds at every alpha != 0.
        FieldCtx F8 = FieldCtx::make(2, 8);
        uint32_t w8 = 0;
        for (uint32_t x : F8.subfield_elements(2))
            if (x > 1) { w8 = x; break; }
        REQUIRE(w8 != 0);
        PValuedTable f8 = gold_pair_table(F8, 2, 6, w8);
        for (uint32_t x = 0; x < F8.q(); ++x) REQUIRE(f8[x] == 0);
        GoldPairVerdict v8 = gold_pair_vanishing(F8, 2, 6, w8, 3);
        CHECK(v8.must_vanish);
        CHECK(v8.rule == "fused-cancellation");
        CHECK(!gold_pair_vanishing(F8, 2, 6, w8, 0).must_vanish);
    }

    SUBCASE("u outside GF(2^d1) is rejected") {
        // d1 = gcd(4 - 2, 6) = 2; pick u outside the 4-element subfield
        auto sub = F.subfield_elements(2);
        uint32_t outside = 0;
        for (uint32_t x = 1; x < F.q(); ++x)
            if (std::find(sub.begin(), sub.end(), x) == sub.end()) { outside = x; break; }
        CHECK_THROWS_AS(gold_pair_vanishing(F, 2, 4, outside, 1), Error);
        CHECK_THROWS_AS(gold_pair_vanishing(F, 4, 2, 1, 1), Error);  // needs a < b
    }
}

TEST_CASE("gold pair vanishing is sound on every field up to GF(2^8)") {
    for (unsigned k = 2; k <= 8; ++k) {
        FieldCtx F = FieldCtx::make(2, k);
        for (unsigned a = 0; a < k; ++a)
            for (unsigned b = a + 1; b <= k; ++b) {
                unsigned d1 = unsigned(std::gcd(uint64_t(b - a), uint64_t(k)));
                auto us = F.subfield_elements(d1);
                if (us.size() > 8) us.resize(8);
                for (uint32_t u : us) {
                    PValuedTable f = gold_pair_table(F, a, b, u);
                    auto spec = walsh_spectrum(F, f);
                    for (uint32_t alpha = 0; alpha < F.q(); ++alpha) {
                        GoldPairVerdict v = gold_pair_vanishing(F, a, b, u, alpha);
                        if (v.must_vanish) REQUIRE(spec[alpha].mag_sq(2) == 0);
                    }
                }
            }
    }
}

TEST_CASE("mag_sq rejects unsupported characteristic") {
    WalshPoint w;
    w.counts = {1, 2, 3, 4, 5};
    CHECK_THROWS_AS(w.mag_sq(5), Error);
}
