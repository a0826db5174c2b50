#include "ffa/cubic.hpp"

namespace ffa {

uint32_t cubic_resolvent_eval(const FieldCtx& F, unsigned k, uint32_t x) {
    if (k == 0) throw Error("resolvent index must be >= 1");
    if (k <= 2) return x;
    uint32_t prev2 = x, prev1 = x;  // q_1, q_2
    uint32_t xpow = x;              // x^(2^(k-3)), starts at k=3 with x^1
    for (unsigned i = 3; i <= k; ++i) {
        uint32_t cur = F.add(prev1, F.mul(xpow, prev2));
        prev2 = prev1;
        prev1 = cur;
        xpow = F.mul(xpow, xpow);
    }
    return prev1;
}

CubicVerdict classify_cubic(const FieldCtx& F, uint32_t a, bool with_roots) {
    if (F.p() != 2) throw Error("classify_cubic: characteristic-2 fields only");
    if (a == 0) throw Error("classify_cubic: a must be nonzero");
    CubicVerdict v;
    v.trace_criterion = F.abs_trace(F.add(F.inv(a), 1)) == 1;
    v.resolvent_zero = cubic_resolvent_eval(F, F.n(), a) == 0;
    if (v.trace_criterion) {
        v.branch = CubicVerdict::Branch::UniqueByTrace;
        v.root_count = 1;
    } else if (v.resolvent_zero) {
        v.branch = CubicVerdict::Branch::TripleByResolvent;
        v.root_count = 3;
    } else {
        v.branch = CubicVerdict::Branch::NoRoots;
        v.root_count = 0;
    }
    if (with_roots) {
        for (uint32_t x = 0; x < F.q(); ++x) {
            uint32_t val = F.add(F.add(F.mul(F.mul(x, x), x), x), a);
            if (val == 0) v.roots.push_back(x);
        }
    }
    return v;
}

}  // namespace ffa
