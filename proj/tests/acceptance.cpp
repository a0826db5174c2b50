// Acceptance gate: runs every top-level correctness criterion end to end,
// prints one PASS/FAIL line per criterion with its wall-clock cost against
// the allowed budget, and exits nonzero if anything failed.  `--full` widens
// criterion 7 to the m = 5 grids; the default keeps a commit-gate runtime.
//
// Every randomized sweep uses a fixed seed, so two runs of this binary do
// the same work and print the same verdicts.

#include <chrono>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ffa/cdiff.hpp"
#include "ffa/cubic.hpp"
#include "ffa/families.hpp"
#include "ffa/field.hpp"
#include "ffa/funcspec.hpp"
#include "ffa/reference.hpp"
#include "ffa/report.hpp"
#include "ffa/walsh.hpp"

using namespace ffa;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(std::string why) {
        pass = false;
        details.push_back(std::move(why));
    }
    void note(std::string what) { details.push_back(std::move(what)); }
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

ValueTable seeded_random_table(const FieldCtx& F, uint32_t seed) {
    std::mt19937 rng(seed);
    ValueTable t;
    t.ctx_id = F.id();
    t.values.resize(F.q());
    for (auto& v : t.values) v = rng() % F.q();
    return t;
}

// ---- criterion 1: cubic root trichotomy ------------------------------------

Outcome c1_cubic(bool) {
    Outcome o;
    uint64_t checked = 0;
    for (unsigned n = 2; n <= 12; ++n) {
        FieldCtx F = FieldCtx::make(2, n);
        for (uint32_t a = 1; a < F.q(); ++a) {
            CubicVerdict v = classify_cubic(F, a, false);
            unsigned brute = ref::cubic_root_count(F, a);
            if (v.root_count != brute) {
                o.fail(fmt("n=%u a=%s: criterion says %u roots, search finds %u", n,
                           F.elem_str(a).c_str(), v.root_count, brute));
                return o;
            }
            if (v.resolvent_zero != (brute == 3)) {
                o.fail(fmt("n=%u a=%s: resolvent-zero=%d but root count is %u", n,
                           F.elem_str(a).c_str(), int(v.resolvent_zero), brute));
                return o;
            }
            ++checked;
        }
    }
    o.note(fmt("%llu (n, a) pairs checked", (unsigned long long)checked));
    return o;
}

// ---- criterion 2: character-sum oracle -------------------------------------

Outcome c2_charsum(bool) {
    Outcome o;
    uint64_t checked = 0;

    // full (c, a, b) grids on two small fields
    for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 4}, {3, 2}}) {
        FieldCtx F = FieldCtx::make(p, n);
        ValueTable T = seeded_random_table(F, 0xC2000u + n);
        for (uint32_t c = 0; c < F.q(); ++c)
            for (uint32_t a = (c == 1 ? 1u : 0u); a < F.q(); ++a)
                for (uint32_t b = 0; b < F.q(); ++b) {
                    if (count_via_charsum(F, T, c, a, b) != cddt_entry(F, T, c, a, b)) {
                        o.fail(fmt("GF(%u^%u) full grid: mismatch at c=%u a=%u b=%u", p, n, c,
                                   a, b));
                        return o;
                    }
                    ++checked;
                }
    }

    // 10^4 random triples spread over GF(2^6) .. GF(2^10)
    for (unsigned n = 6; n <= 10; ++n) {
        FieldCtx F = FieldCtx::make(2, n);
        ValueTable T = seeded_random_table(F, 0xC2100u + n);
        std::mt19937 rng(0xC2200u + n);
        std::uniform_int_distribution<uint32_t> pick(0, F.q() - 1);
        for (int trial = 0; trial < 2000; ++trial) {
            uint32_t c = pick(rng), b = pick(rng);
            uint32_t a = pick(rng);
            if (c == 1 && a == 0) a = 1;
            if (count_via_charsum(F, T, c, a, b) != cddt_entry(F, T, c, a, b)) {
                o.fail(fmt("GF(2^%u): mismatch at c=%u a=%u b=%u", n, c, a, b));
                return o;
            }
            ++checked;
        }
    }
    o.note(fmt("%llu entries agreed exactly", (unsigned long long)checked));
    return o;
}

// ---- criterion 3: parseval + quadratic two-valued law ----------------------

Outcome c3_walsh(bool) {
    Outcome o;

    auto parseval_sweep = [&](unsigned p, unsigned lo, unsigned hi) {
        for (unsigned n = lo; n <= hi && o.pass; ++n) {
            FieldCtx F = FieldCtx::make(p, n);
            std::mt19937 rng(0xC30000u + p * 100 + n);
            for (int trial = 0; trial < 20; ++trial) {
                PValuedTable f(F.q());
                for (auto& v : f) v = uint8_t(rng() % p);
                int64_t sum = 0;
                for (const WalshPoint& w : walsh_spectrum(F, f)) sum += w.mag_sq(p);
                if (sum != int64_t(F.q()) * F.q()) {
                    o.fail(fmt("parseval violated on GF(%u^%u), trial %d: sum %lld", p, n,
                               trial, (long long)sum));
                    return;
                }
            }
        }
    };
    parseval_sweep(2, 2, 10);
    parseval_sweep(3, 2, 4);
    if (!o.pass) return o;

    auto quad_sweep = [&](unsigned p, std::vector<unsigned> degrees) {
        for (unsigned n : degrees) {
            if (!o.pass) return;
            FieldCtx F = FieldCtx::make(p, n);
            std::mt19937 rng(0xC31000u + p * 100 + n);
            for (int set = 0; set < 50; ++set) {
                std::vector<uint32_t> a(1 + rng() % (n / 2 + 1));
                for (auto& c : a) c = rng() % F.q();
                bool all_zero = true;
                for (uint32_t c : a) all_zero = all_zero && c == 0;
                if (all_zero) a[0] = 1 + rng() % (F.q() - 1);

                LinearizedMap L = quad_form_kernel(F, a);
                PValuedTable f = quad_trace_table(F, a);
                auto ker = L.kernel_elements(F);
                int64_t peak = 1;
                for (unsigned i = 0; i < F.n() + L.ell; ++i) peak *= p;

                auto spectrum = walsh_spectrum(F, f);
                for (uint32_t v = 0; v < F.q(); ++v) {
                    int64_t m = spectrum[v].mag_sq(p);
                    bool vanishes = true;
                    for (uint32_t x : ker)
                        if ((f[x] + p - F.abs_trace(F.mul(v, x))) % p != 0) {
                            vanishes = false;
                            break;
                        }
                    int64_t predicted = vanishes ? peak : 0;
                    if (m != predicted) {
                        o.fail(fmt("two-valued law violated on GF(%u^%u) set %d at v=%u: "
                                   "|W|^2=%lld, predicted %lld",
                                   p, n, set, v, (long long)m, (long long)predicted));
                        return;
                    }
                }
                // exercise the packaged single-point checker on a sample
                for (int probe = 0; probe < 4; ++probe)
                    if (!quad_walsh_law_check(F, a, rng() % F.q())) {
                        o.fail(fmt("packaged law check disagrees on GF(%u^%u) set %d", p, n,
                                   set));
                        return;
                    }
            }
        }
    };
    quad_sweep(2, {4, 6, 8, 10, 12});
    quad_sweep(3, {2, 4, 6});
    if (o.pass)
        o.note("parseval on 13 fields, two-valued law exhaustive in v on 8 fields");
    return o;
}

// ---- criterion 4: gold-pair vanishing soundness -----------------------------

Outcome c4_gold(bool) {
    Outcome o;
    uint64_t claims = 0, alphas = 0;
    for (unsigned k = 2; k <= 12; ++k) {
        FieldCtx F = FieldCtx::make(2, k);
        for (unsigned a = 0; a < k; ++a)
            for (unsigned b = a + 1; b <= k; ++b) {
                unsigned d1 = unsigned(std::gcd(uint64_t(b - a), uint64_t(k)));
                auto us = F.subfield_elements(d1);
                if (us.size() > 16) us.resize(16);
                for (uint32_t u : us) {
                    PValuedTable f = gold_pair_table(F, a, b, u);
                    auto spectrum = walsh_spectrum(F, f);
                    for (uint32_t alpha = 0; alpha < F.q(); ++alpha) {
                        GoldPairVerdict v = gold_pair_vanishing(F, a, b, u, alpha);
                        ++alphas;
                        if (!v.must_vanish) continue;
                        ++claims;
                        if (spectrum[alpha].mag_sq(2) != 0) {
                            o.fail(fmt("unsound claim: k=%u a=%u b=%u u=%s alpha=%s rule=%s",
                                       k, a, b, F.elem_str(u).c_str(),
                                       F.elem_str(alpha).c_str(), v.rule.c_str()));
                            return o;
                        }
                    }
                }
            }
    }
    o.note(fmt("%llu vanishing claims verified out of %llu predicate calls",
               (unsigned long long)claims, (unsigned long long)alphas));
    return o;
}

// ---- criterion 5: family bijectivity ----------------------------------------

Outcome c5_bijectivity(bool) {
    Outcome o;
    uint64_t instances = 0;
    auto sweep = [&](FamilyId id, unsigned m) {
        if (!o.pass) return;
        FieldCtx F = family_field(id, m);
        for (uint32_t d = 0; d < F.q(); ++d) {
            FamilyInstance inst = build_family(F, id, m, d);
            if (!inst.preconds_ok) continue;
            auto perm = is_permutation(compile(F, inst.spec));
            ++instances;
            if (!perm.is_permutation) {
                o.fail(fmt("%s m=%u delta=%s: not a permutation (F(%s) == F(%s))",
                           family_id_str(id).c_str(), m, F.elem_str(d).c_str(),
                           F.elem_str(perm.x1).c_str(), F.elem_str(perm.x2).c_str()));
                return;
            }
        }
    };
    for (unsigned m : {2u, 3u, 4u}) sweep(FamilyId::ZH31, m);
    for (unsigned m : {2u, 4u, 5u}) sweep(FamilyId::ZH21, m);
    for (unsigned m : {2u, 4u, 5u}) sweep(FamilyId::WBZ31, m);
    for (unsigned m : {2u, 3u}) sweep(FamilyId::LWC8, m);
    for (unsigned m : {1u, 2u}) sweep(FamilyId::LWC10, m);
    if (o.pass) o.note(fmt("%llu qualifying instances verified bijective",
                           (unsigned long long)instances));
    return o;
}

// ---- criteria 6-8, 10: verification drivers ---------------------------------

Outcome from_reports(std::vector<VerdictReport> reports) {
    Outcome o;
    for (const VerdictReport& r : reports) {
        if (r.pass) continue;
        for (const ClaimBlock& c : r.claims) {
            if (c.pass) continue;
            unsigned bad = 0;
            for (const GridCell& cell : c.cells) bad += cell.pass ? 0 : 1;
            o.fail(fmt("%s m=%d claim %s: %u failing cells", r.id.c_str(), r.m,
                       c.name.c_str(), bad));
        }
    }
    if (o.pass) {
        std::string ids;
        for (const VerdictReport& r : reports)
            ids += fmt("%s(m=%d) ", r.id.c_str(), r.m);
        o.note("green: " + ids);
    }
    return o;
}

Outcome c6_zh31(bool) {
    VerdictReport r2 = verify_zh31(2);
    VerdictReport r3 = verify_zh31(3);
    Outcome o = from_reports({r2, r3});
    bool attained = false;
    for (const ClaimBlock& c : r3.claims)
        if (c.name == "case2-offsubfield-max-attained" && c.pass && !c.cells.empty() &&
            c.cells[0].observed == 4)
            attained = true;
    if (!attained) o.fail("value 4 not attained at any case-2 (delta, c) for m=3");
    return o;
}

Outcome c7_zh21_wbz31(bool full) {
    std::vector<VerdictReport> rs;
    for (int m : {2, 4}) {
        rs.push_back(verify_zh21(m));
        rs.push_back(verify_wbz31(m));
    }
    if (full) {
        rs.push_back(verify_zh21(5));
        rs.push_back(verify_wbz31(5));
    }
    return from_reports(std::move(rs));
}

Outcome c8_lwc8(bool) { return from_reports({verify_lwc8(2), verify_lwc8(3)}); }

Outcome c10_bct(bool) {
    VerdictReport r = verify_bct_crosscheck();
    Outcome o = from_reports({r});
    bool asserted = false;
    for (const ClaimBlock& c : r.claims)
        if (c.name == "bct-equals-negddt" && c.pass) asserted = true;
    if (!asserted)
        o.fail("equality was not asserted: cube map not confirmed APN + bijective");
    else
        o.note("boomerang max == (-1)-DDT max, asserted under the APN + bijective gate");
    return o;
}

// ---- criterion 9: the published off-subfield grid, read literally -----------
//
// The family's own expansion gives F(X) - X = (X^(3^m) - X + delta)^4 * T
// with T the relative trace of delta.  A delta with T = 0 therefore yields
// F = X exactly, whose off-subfield uniformity is 1, yet such deltas pass
// the published "nonzero square" filter since 1 - 0^4 = 1.  The uniformity-3
// half of the claim is false for them, so this criterion is expected to
// stay red; the detail lines localize the failure to exactly that set.

Outcome c9_lwc10_literal(bool) {
    Outcome o;
    for (unsigned m : {1u, 2u}) {
        FieldCtx F = FieldCtx::make(3, 2 * m);
        auto sub = F.subfield_elements(m);
        std::vector<uint32_t> off;
        {
            std::vector<bool> in_sub(F.q(), false);
            for (uint32_t c : sub) in_sub[c] = true;
            for (uint32_t c = 0; c < F.q(); ++c)
                if (!in_sub[c]) off.push_back(c);
        }

        unsigned qualifying = 0, violating_deltas = 0;
        uint64_t violating_cells = 0;
        bool violators_all_trace_zero = true, violators_all_identity = true;
        bool subfield_ok = true, nonzero_trace_ok = true;

        for (uint32_t d = 0; d < F.q(); ++d) {
            FamilyInstance inst = build_lwc10(F, m, d);
            if (!inst.preconds[1].holds) continue;  // literal filter
            ++qualifying;
            ValueTable T = compile(F, inst.spec);

            for (uint32_t c : sub) {
                if (c == 1) continue;
                if (cdu_max(F, T, c) != 1) subfield_ok = false;
            }

            uint64_t bad_here = 0;
            for (uint32_t c : off)
                if (cdu_max(F, T, c) != 3) ++bad_here;
            if (bad_here == 0) continue;

            ++violating_deltas;
            violating_cells += bad_here;
            if (F.rel_trace(d, m) != 0) {
                violators_all_trace_zero = false;
                nonzero_trace_ok = false;
            }
            bool identity = true;
            for (uint32_t x = 0; x < F.q(); ++x)
                if (T.values[x] != x) { identity = false; break; }
            if (!identity) violators_all_identity = false;
        }

        if (violating_deltas == 0 && subfield_ok) {
            o.note(fmt("m=%u: clean over all %u qualifying deltas", m, qualifying));
            continue;
        }
        o.fail(fmt("m=%u: %u of %u qualifying deltas violate the off-subfield "
                   "uniformity-3 claim (%llu cells)",
                   m, violating_deltas, qualifying, (unsigned long long)violating_cells));
        if (!subfield_ok) o.note(fmt("m=%u: subfield PcN part also violated", m));
        else o.note(fmt("m=%u: subfield PcN part holds for every qualifying delta", m));
        if (violators_all_trace_zero && violators_all_identity)
            o.note(fmt("m=%u: every violating delta has relative trace zero, where the "
                       "member collapses to X (off-subfield uniformity 1, not 3)", m));
        if (nonzero_trace_ok)
            o.note(fmt("m=%u: restricted to nonzero-trace deltas the grid passes", m));
    }
    return o;
}

// ---- criterion 11: deterministic reports ------------------------------------

Outcome c11_determinism(bool) {
    Outcome o;
    std::string first = run_all_json(run_all("quick")).dump(2);
    std::string second = run_all_json(run_all("quick")).dump(2);
    if (first != second)
        o.fail(fmt("two quick runs differ: %zu vs %zu bytes", first.size(), second.size()));
    else
        o.note(fmt("byte-identical across runs (%zu bytes)", first.size()));
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    bool full = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--full") full = true;

    struct Row {
        int num;
        const char* label;
        double budget_s;  // 0 = no budget
        std::function<Outcome(bool)> fn;
    };
    const std::vector<Row> rows = {
        {1, "cubic root trichotomy vs brute force, n <= 12", 10, c1_cubic},
        {2, "character-sum oracle == direct difference counts", 60, c2_charsum},
        {3, "walsh parseval + quadratic two-valued law", 120, c3_walsh},
        {4, "gold-pair vanishing soundness, k <= 12", 120, c4_gold},
        {5, "family bijectivity across published sizes", 120, c5_bijectivity},
        {6, "zh31 uniformity grids, m in {2,3}, max 4 attained", 120, c6_zh31},
        {7, full ? "zh21 + wbz31 uniformity grids, m in {2,4,5}"
                 : "zh21 + wbz31 uniformity grids, m in {2,4}",
         300, c7_zh21_wbz31},
        {8, "lwc8 uniformity grids, m in {2,3}", 60, c8_lwc8},
        {9, "lwc10 published grid, literal reading, m in {1,2}", 60, c9_lwc10_literal},
        {10, "boomerang cross-check on the GF(5^3) cube map", 60, c10_bct},
        {11, "run-all quick JSON is byte-identical across runs", 0, c11_determinism},
    };

    int failures = 0;
    for (const Row& row : rows) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = row.fn(full);
        } catch (const std::exception& e) {
            o.pass = false;
            o.details.push_back(std::string("exception: ") + e.what());
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = row.budget_s == 0 || dt <= row.budget_s;
        bool ok = o.pass && in_budget;
        if (!ok) ++failures;

        if (row.budget_s > 0)
            printf("[%2d] %s  %-55s (%.1fs, budget %.0fs)\n", row.num, ok ? "PASS" : "FAIL",
                   row.label, dt, row.budget_s);
        else
            printf("[%2d] %s  %-55s (%.1fs)\n", row.num, ok ? "PASS" : "FAIL", row.label, dt);
        if (!in_budget) printf("        - budget exceeded\n");
        for (const std::string& d : o.details) printf("        - %s\n", d.c_str());
        fflush(stdout);
    }
    printf("criteria passed: %zu/%zu\n", rows.size() - size_t(failures), rows.size());
    return failures == 0 ? 0 : 1;
}
