#pragma once

#include <vector>

#include "ffa/field.hpp"

namespace ffa {

// Trichotomy for X^3 + X + a over GF(2^n): the root count is 0, 1 or 3,
// decided by a trace criterion and by the vanishing of a recursively
// defined polynomial family q_k (q_1 = q_2 = X, q_k = q_{k-1} + X^{2^{k-3}} q_{k-2}).
struct CubicVerdict {
    enum class Branch { UniqueByTrace, TripleByResolvent, NoRoots };
    Branch branch = Branch::NoRoots;
    unsigned root_count = 0;          // from the criterion
    bool trace_criterion = false;     // Tr(a^{-1} + 1) == 1
    bool resolvent_zero = false;      // q_n(a) == 0
    std::vector<uint32_t> roots;      // found by direct search
};

// Value of q_k at x, via the two-term recurrence; O(k) multiplications.
uint32_t cubic_resolvent_eval(const FieldCtx& F, unsigned k, uint32_t x);

// a must be nonzero; the degenerate a = 0 factors as X(X+1)^2 and is the
// caller's business.  `with_roots` controls the direct search.
CubicVerdict classify_cubic(const FieldCtx& F, uint32_t a, bool with_roots = true);

}  // namespace ffa
