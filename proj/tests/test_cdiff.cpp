#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ffa/cdiff.hpp"
#include "ffa/families.hpp"
#include "ffa/reference.hpp"

using namespace ffa;

namespace {

ValueTable random_function(const FieldCtx& F, std::mt19937& rng, bool permutation) {
    ValueTable t;
    t.ctx_id = F.id();
    t.values.resize(F.q());
    if (permutation) {
        for (uint32_t x = 0; x < F.q(); ++x) t.values[x] = x;
        std::shuffle(t.values.begin(), t.values.end(), rng);
    } else {
        for (auto& v : t.values) v = rng() % F.q();
    }
    return t;
}

}  // namespace

TEST_CASE("identity function: linear difference maps") {
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 4}, {3, 2}}) {
        FieldCtx F = FieldCtx::make(p, n);
        ValueTable id = compile(F, FuncSpec::identity(F));
        // c = 1: every difference row is the constant a, piling all q
        // solutions onto one entry
        CHECK(cdu_max(F, id, 1) == F.q());
        CHECK(!is_pcn(F, id, 1));
        // c != 1: x -> (1-c)x + a is a bijection for every a
        for (uint32_t c = 0; c < F.q(); ++c) {
            if (c == 1) continue;
            REQUIRE(cdu_max(F, id, c) == 1);
            REQUIRE(is_pcn(F, id, c));
        }
    }
}

TEST_CASE("c = 0 reduces to preimage counting") {
    FieldCtx F = FieldCtx::make(3, 2);
    std::mt19937 rng(11);
    ValueTable perm = random_function(F, rng, true);
    CHECK(cdu_max(F, perm, 0) == 1);
    // x^2 is 2-to-1 on nonzero inputs in odd characteristic
    ValueTable sq = compile(F, FuncSpec::monomial(F, 1, 2));
    CHECK(cdu_max(F, sq, 0) == 2);
}

TEST_CASE("row structure: entries sum to q, a = 0 excluded only at c = 1") {
    FieldCtx F = FieldCtx::make(2, 4);
    std::mt19937 rng(5);
    ValueTable T = random_function(F, rng, false);

    CHECK_THROWS_AS(cddt_entry(F, T, 1, 0, 3), Error);
    CHECK(cdu(F, T, 1).excluded_a0);
    CHECK(!cdu(F, T, 2).excluded_a0);

    for (uint32_t c : {0u, 1u, 5u}) {
        for (uint32_t a = (c == 1 ? 1u : 0u); a < F.q(); ++a) {
            uint32_t row_sum = 0;
            for (uint32_t b = 0; b < F.q(); ++b) row_sum += cddt_entry(F, T, c, a, b);
            REQUIRE(row_sum == F.q());
        }
    }

    std::vector<uint32_t> a_order;
    auto rows = cddt_rows(F, T, 1, a_order);
    CHECK(a_order.size() == F.q() - 1);
    CHECK(rows.size() == a_order.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == F.q());
        for (uint32_t b = 0; b < F.q(); ++b)
            REQUIRE(rows[i][b] == cddt_entry(F, T, 1, a_order[i], b));
    }
}

TEST_CASE("character-sum oracle matches direct counting on full grids") {
    std::mt19937 rng(0xCAFE);
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 4}, {3, 2}}) {
        FieldCtx F = FieldCtx::make(p, n);
        for (bool perm : {true, false}) {
            ValueTable T = random_function(F, rng, perm);
            for (uint32_t c = 0; c < F.q(); ++c)
                for (uint32_t a = (c == 1 ? 1u : 0u); a < F.q(); ++a)
                    for (uint32_t b = 0; b < F.q(); ++b)
                        REQUIRE(count_via_charsum(F, T, c, a, b) == cddt_entry(F, T, c, a, b));
        }
    }
}

TEST_CASE("summary, max-only and reference engines agree") {
    std::mt19937 rng(0xD1CE);
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 4}, {3, 2}, {2, 6}}) {
        FieldCtx F = FieldCtx::make(p, n);
        for (int trial = 0; trial < 4; ++trial) {
            ValueTable T = random_function(F, rng, trial % 2 == 0);
            for (uint32_t c : {0u, 1u, 2u, F.q() - 1}) {
                CDdtSummary s = cdu(F, T, c);
                REQUIRE(s.uniformity == cdu_max(F, T, c));
                REQUIRE(s.uniformity == ref::cdu_max(F, T, c));
                REQUIRE(is_pcn(F, T, c) == (s.uniformity == 1));

                // histogram totals: one entry per (a, b) pair, q solutions per row
                uint64_t pairs = 0, solutions = 0;
                for (auto [value, count] : s.histogram) {
                    pairs += count;
                    solutions += uint64_t(value) * count;
                }
                uint64_t rows = F.q() - (s.excluded_a0 ? 1 : 0);
                REQUIRE(pairs == rows * F.q());
                REQUIRE(solutions == rows * F.q());

                REQUIRE(!s.witnesses.empty());
                for (auto [a, b] : s.witnesses)
                    REQUIRE(cddt_entry(F, T, c, a, b) == s.uniformity);
                if (s.uniformity == 1) REQUIRE(s.classification == "PcN");
                if (s.uniformity == 2) REQUIRE(s.classification == "APcN");
            }
        }
    }
}

TEST_CASE("is_pcn finds true positives on a verified family grid") {
    FieldCtx F = FieldCtx::make(2, 4);
    ValueTable T = compile(F, build_zh31(F, 2, 1).spec);
    unsigned hits = 0;
    for (uint32_t c : F.subfield_elements(2)) {
        if (c == 1) continue;
        if (is_pcn(F, T, c)) ++hits;
        REQUIRE(is_pcn(F, T, c) == (cdu_max(F, T, c) == 1));
    }
    CHECK(hits > 0);
}

TEST_CASE("boomerang table") {
    FieldCtx F = FieldCtx::make(3, 2);
    ValueTable id = compile(F, FuncSpec::identity(F));
    // the identity solves the boomerang equation for every x
    CHECK(bct(F, id).uniformity == F.q());

    ValueTable sq = compile(F, FuncSpec::monomial(F, 1, 2));
    CHECK_THROWS_AS(bct(F, sq), Error);  // not a permutation

    FieldCtx G = FieldCtx::make(5, 3);
    ValueTable cube = compile(G, FuncSpec::monomial(G, 1, 3));
    BctSummary s = bct(G, cube);
    CHECK(s.uniformity == 3);
    for (auto [a, b] : s.witnesses) {
        REQUIRE(a != 0);
        REQUIRE(b != 0);
    }
}

TEST_CASE("argument validation") {
    FieldCtx F = FieldCtx::make(2, 4);
    FieldCtx G = FieldCtx::make(2, 4);
    ValueTable T = compile(F, FuncSpec::identity(F));
    CHECK_THROWS_AS(cdu_max(G, T, 0), Error);       // foreign table
    CHECK_THROWS_AS(cdu_max(F, T, F.q()), Error);   // c out of range
    CHECK_THROWS_AS(is_pcn(G, T, 0), Error);
    CHECK_THROWS_AS(count_via_charsum(F, T, 1, 0, 0), Error);  // a = 0 at c = 1
}
