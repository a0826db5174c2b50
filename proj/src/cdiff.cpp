#include "ffa/cdiff.hpp"

#include <algorithm>

#include <omp.h>

namespace ffa {

namespace {

void check_args(const FieldCtx& F, const ValueTable& T, uint32_t c, uint32_t a) {
    if (T.ctx_id != F.id()) throw Error("cdiff: table from another field");
    if (T.values.size() != F.q()) throw Error("cdiff: table length mismatch");
    if (c >= F.q()) throw Error("cdiff: c out of range");
    if (c == 1 && a == 0) throw Error("cdiff: a = 0 is excluded when c = 1");
}

// c*F(x) lookups amortized over a whole a-sweep.
std::vector<uint32_t> scaled_table(const FieldCtx& F, const ValueTable& T, uint32_t c) {
    std::vector<uint32_t> cf(F.q());
    for (uint32_t x = 0; x < F.q(); ++x) cf[x] = F.mul(c, T.values[x]);
    return cf;
}

}  // namespace

uint32_t cddt_entry(const FieldCtx& F, const ValueTable& T, uint32_t c, uint32_t a, uint32_t b) {
    check_args(F, T, c, a);
    uint32_t count = 0;
    for (uint32_t x = 0; x < F.q(); ++x)
        if (F.sub(T.values[F.add(x, a)], F.mul(c, T.values[x])) == b) ++count;
    return count;
}

std::vector<std::vector<uint32_t>> cddt_rows(const FieldCtx& F, const ValueTable& T, uint32_t c,
                                             std::vector<uint32_t>& a_order) {
    check_args(F, T, c, c == 1 ? 1 : 0);
    auto cf = scaled_table(F, T, c);
    a_order.clear();
    for (uint32_t a = 0; a < F.q(); ++a)
        if (!(c == 1 && a == 0)) a_order.push_back(a);
    std::vector<std::vector<uint32_t>> rows(a_order.size(), std::vector<uint32_t>(F.q(), 0));
    for (size_t i = 0; i < a_order.size(); ++i) {
        uint32_t a = a_order[i];
        for (uint32_t x = 0; x < F.q(); ++x)
            rows[i][F.sub(T.values[F.add(x, a)], cf[x])]++;
    }
    return rows;
}

CDdtSummary cdu(const FieldCtx& F, const ValueTable& T, uint32_t c) {
    check_args(F, T, c, c == 1 ? 1 : 0);
    CDdtSummary s;
    s.c = c;
    s.excluded_a0 = (c == 1);
    uint32_t q = F.q();
    auto cf = scaled_table(F, T, c);

    uint32_t a_begin = s.excluded_a0 ? 1 : 0;
    std::vector<uint32_t> row_max(q, 0);

    // pass 1: per-row maxima and the value histogram
    int nthreads = 1;
#ifdef _OPENMP
    nthreads = omp_get_max_threads();
#endif
    std::vector<std::map<uint32_t, uint64_t>> hists(static_cast<size_t>(nthreads));
#pragma omp parallel
    {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        std::vector<uint32_t> cnt(q);
        auto& hist = hists[size_t(tid)];
#pragma omp for schedule(static)
        for (int64_t ai = int64_t(a_begin); ai < int64_t(q); ++ai) {
            uint32_t a = uint32_t(ai);
            std::fill(cnt.begin(), cnt.end(), 0u);
            for (uint32_t x = 0; x < q; ++x) cnt[F.sub(T.values[F.add(x, a)], cf[x])]++;
            uint32_t mx = 0;
            for (uint32_t b = 0; b < q; ++b) {
                hist[cnt[b]]++;
                if (cnt[b] > mx) mx = cnt[b];
            }
            row_max[a] = mx;
        }
    }
    for (auto& h : hists)
        for (auto& [val, n] : h) s.histogram[val] += n;
    s.uniformity = *std::max_element(row_max.begin() + a_begin, row_max.end());

    // pass 2: lexicographically first witnesses, only rows attaining the max
    for (uint32_t a = a_begin; a < q && s.witnesses.size() < CDdtSummary::kWitnessCap; ++a) {
        if (row_max[a] != s.uniformity) continue;
        std::vector<uint32_t> cnt(q, 0);
        for (uint32_t x = 0; x < q; ++x) cnt[F.sub(T.values[F.add(x, a)], cf[x])]++;
        for (uint32_t b = 0; b < q && s.witnesses.size() < CDdtSummary::kWitnessCap; ++b)
            if (cnt[b] == s.uniformity) s.witnesses.emplace_back(a, b);
    }

    if (s.uniformity == 1) s.classification = "PcN";
    else if (s.uniformity == 2) s.classification = "APcN";
    else s.classification = std::to_string(s.uniformity);
    return s;
}

uint32_t cdu_max(const FieldCtx& F, const ValueTable& T, uint32_t c) {
    check_args(F, T, c, c == 1 ? 1 : 0);
    uint32_t q = F.q();
    auto cf = scaled_table(F, T, c);
    uint32_t a_begin = (c == 1) ? 1 : 0;
    uint32_t global_max = 0;

    if (F.p() == 2) {
        std::vector<uint32_t> cnt(q);
        for (uint32_t a = a_begin; a < q; ++a) {
            std::fill(cnt.begin(), cnt.end(), 0u);
            const uint32_t* tv = T.values.data();
            const uint32_t* cfp = cf.data();
            for (uint32_t x = 0; x < q; ++x) cnt[tv[x ^ a] ^ cfp[x]]++;
            for (uint32_t b = 0; b < q; ++b)
                if (cnt[b] > global_max) global_max = cnt[b];
        }
        return global_max;
    }

    std::vector<uint32_t> cnt(q);
    for (uint32_t a = a_begin; a < q; ++a) {
        std::fill(cnt.begin(), cnt.end(), 0u);
        for (uint32_t x = 0; x < q; ++x) cnt[F.sub(T.values[F.add(x, a)], cf[x])]++;
        for (uint32_t b = 0; b < q; ++b)
            if (cnt[b] > global_max) global_max = cnt[b];
    }
    return global_max;
}

bool is_pcn(const FieldCtx& F, const ValueTable& T, uint32_t c) {
    check_args(F, T, c, c == 1 ? 1 : 0);
    uint32_t q = F.q();
    auto cf = scaled_table(F, T, c);
    uint32_t a_begin = (c == 1) ? 1 : 0;
    // seen[y] holds the last row (a) that produced y; a repeat within one
    // row is a collision, i.e. some entry >= 2
    std::vector<uint32_t> seen(q, ~0u);

    if (F.p() == 2) {
        const uint32_t* tv = T.values.data();
        const uint32_t* cfp = cf.data();
        for (uint32_t a = a_begin; a < q; ++a)
            for (uint32_t x = 0; x < q; ++x) {
                uint32_t y = tv[x ^ a] ^ cfp[x];
                if (seen[y] == a) return false;
                seen[y] = a;
            }
        return true;
    }

    for (uint32_t a = a_begin; a < q; ++a)
        for (uint32_t x = 0; x < q; ++x) {
            uint32_t y = F.sub(T.values[F.add(x, a)], cf[x]);
            if (seen[y] == a) return false;
            seen[y] = a;
        }
    return true;
}

uint32_t count_via_charsum(const FieldCtx& F, const ValueTable& T, uint32_t c, uint32_t a,
                           uint32_t b) {
    check_args(F, T, c, a);
    uint32_t q = F.q();
    unsigned p = F.p();

    // D(x) = F(x+a) - cF(x) - b, then tally Tr(beta * D(x)) residues
    std::vector<uint32_t> D(q);
    for (uint32_t x = 0; x < q; ++x)
        D[x] = F.sub(F.sub(T.values[F.add(x, a)], F.mul(c, T.values[x])), b);

    std::vector<uint64_t> tally(p, 0);
    for (uint32_t beta = 0; beta < q; ++beta)
        for (uint32_t x = 0; x < q; ++x) tally[F.abs_trace(F.mul(beta, D[x]))]++;

    // sum_j tally[j] w^j must be a rational integer: all nonzero-index
    // tallies coincide, and the value is (tally[0] - tally[1]) (with the
    // convention tally[1] = 0 for p = 2 handled by the same formula).
    for (unsigned j = 2; j < p; ++j)
        if (tally[j] != tally[1])
            throw Error("charsum: character sum is not a rational integer");
    uint64_t num = tally[0] - tally[1];
    if (num % q != 0) throw Error("charsum: count is not divisible by q");
    return uint32_t(num / q);
}

BctSummary bct(const FieldCtx& F, const ValueTable& T) {
    if (T.ctx_id != F.id()) throw Error("bct: table from another field");
    auto perm = is_permutation(T);
    if (!perm.is_permutation) throw Error("bct: F must be a permutation");
    uint32_t q = F.q();
    std::vector<uint32_t> inv(q);
    for (uint32_t x = 0; x < q; ++x) inv[T.values[x]] = x;

    BctSummary s;
    for (uint32_t a = 1; a < q; ++a) {
        for (uint32_t b = 1; b < q; ++b) {
            uint32_t count = 0;
            for (uint32_t x = 0; x < q; ++x) {
                uint32_t lhs = F.sub(inv[F.add(T.values[F.add(x, a)], b)],
                                     inv[F.add(T.values[x], b)]);
                if (lhs == a) ++count;
            }
            if (count > s.uniformity) {
                s.uniformity = count;
                s.witnesses.clear();
            }
            if (count == s.uniformity && s.witnesses.size() < CDdtSummary::kWitnessCap)
                s.witnesses.emplace_back(a, b);
        }
    }
    return s;
}

}  // namespace ffa
