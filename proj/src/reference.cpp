#include "ffa/reference.hpp"

#include <algorithm>

namespace ffa::ref {

unsigned abs_trace_slow(const FieldCtx& F, uint32_t x) {
    uint32_t acc = 0, t = x;
    for (unsigned j = 0; j < F.n(); ++j) {
        acc = F.add(acc, t);
        uint32_t tp = t;
        for (unsigned i = 1; i < F.p(); ++i) tp = F.mul(tp, t);
        t = tp;
    }
    return acc;  // lands in GF(p), packed value equals the digit
}

WalshPoint walsh_point(const FieldCtx& F, const PValuedTable& f, uint32_t v) {
    if (f.size() != F.q()) throw Error("ref::walsh_point: table length mismatch");
    WalshPoint w;
    w.v = v;
    w.counts.assign(F.p(), 0);
    for (uint32_t x = 0; x < F.q(); ++x) {
        unsigned t = abs_trace_slow(F, F.mul(v, x));
        w.counts[(f[x] + F.p() - t) % F.p()]++;
    }
    return w;
}

std::vector<WalshPoint> walsh_spectrum(const FieldCtx& F, const PValuedTable& f) {
    std::vector<WalshPoint> out;
    out.reserve(F.q());
    for (uint32_t v = 0; v < F.q(); ++v) out.push_back(ref::walsh_point(F, f, v));
    return out;
}

uint32_t cdu_max(const FieldCtx& F, const ValueTable& T, uint32_t c) {
    uint32_t best = 0;
    for (uint32_t a = (c == 1) ? 1 : 0; a < F.q(); ++a)
        for (uint32_t b = 0; b < F.q(); ++b) {
            uint32_t count = 0;
            for (uint32_t x = 0; x < F.q(); ++x)
                if (F.sub(T.values[F.add(x, a)], F.mul(c, T.values[x])) == b) ++count;
            best = std::max(best, count);
        }
    return best;
}

unsigned cubic_root_count(const FieldCtx& F, uint32_t a) {
    unsigned count = 0;
    for (uint32_t x = 0; x < F.q(); ++x) {
        uint32_t x3 = F.mul(F.mul(x, x), x);
        if (F.add(F.add(x3, x), a) == 0) ++count;
    }
    return count;
}

uint32_t horner_eval(const FieldCtx& F, const std::vector<uint32_t>& coeffs, uint32_t x) {
    uint32_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = F.add(F.mul(acc, x), *it);
    return acc;
}

bool is_permutation_sorted(const ValueTable& t) {
    std::vector<uint32_t> copy = t.values;
    std::sort(copy.begin(), copy.end());
    for (size_t i = 0; i < copy.size(); ++i)
        if (copy[i] != i) return false;
    return true;
}

}  // namespace ffa::ref
