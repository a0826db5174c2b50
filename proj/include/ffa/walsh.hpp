#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffa/field.hpp"

namespace ffa {

// Table of a GF(p)-valued function on the field: q entries, each in [0, p).
using PValuedTable = std::vector<uint8_t>;

// One Walsh transform point, stored exactly as residue counts:
// counts[j] = #{x : f(x) - Tr(vx) == j (mod p)}.  The complex value is
// sum counts[j] * w^j with w a primitive p-th root of unity; for p = 2 the
// coefficient is counts[0] - counts[1], for p = 3 the squared magnitude
// is an integer quadratic form in the counts.  No floating point anywhere.
struct WalshPoint {
    uint32_t v = 0;
    std::vector<int64_t> counts;

    int64_t coeff2() const { return counts[0] - counts[1]; }
    int64_t mag_sq(unsigned p) const {
        if (p == 2) {
            int64_t w = coeff2();
            return w * w;
        }
        if (p == 3) {
            int64_t a = counts[0], b = counts[1], c = counts[2];
            return a * a + b * b + c * c - a * b - b * c - c * a;
        }
        throw Error("mag_sq implemented for p in {2,3}");
    }
};

WalshPoint walsh_point(const FieldCtx& F, const PValuedTable& f, uint32_t v);
// Full spectrum; p=2 uses a fast butterfly over the trace-form permutation,
// other p count per point (parallel over v).  Output indexed by v.
std::vector<WalshPoint> walsh_spectrum(const FieldCtx& F, const PValuedTable& f);

// f(x) = Tr(sum_i a_i x^(p^i + 1)) for a quadratic coefficient list a_0..a_m.
PValuedTable quad_trace_table(const FieldCtx& F, const std::vector<uint32_t>& a_coeffs);

// The symmetric linearized map attached to that quadratic form:
// L(x) = sum_i (a_i x^(p^i) + (a_i x)^(p^(n-i))), with its kernel over GF(p).
struct LinearizedMap {
    std::vector<uint32_t> a_coeffs;
    unsigned ell = 0;                    // kernel dimension
    std::vector<uint32_t> kernel_basis;  // packed elements, ell of them

    uint32_t eval(const FieldCtx& F, uint32_t x) const;
    std::vector<uint32_t> kernel_elements(const FieldCtx& F) const;  // all p^ell
};

LinearizedMap quad_form_kernel(const FieldCtx& F, const std::vector<uint32_t>& a_coeffs);

// Checks the two-valued law |W_f(v)|^2 in {0, p^(n+ell)} at one v:
// the value is p^(n+ell) exactly when f(x) - Tr(vx) vanishes on Ker(L).
bool quad_walsh_law_check(const FieldCtx& F, const std::vector<uint32_t>& a_coeffs, uint32_t v);

// Sufficient-condition predicate for W_{f_u}(alpha) = 0 where
// f_u(x) = Tr(u (x^(2^a+1) + x^(2^b+1))) on GF(2^k), 0 <= a < b.
// One-sided: MustVanish guarantees a zero; NoClaim asserts nothing.
struct GoldPairVerdict {
    bool must_vanish = false;
    std::string rule;          // which case decided
    bool beta_searched = false;
    bool beta_found = false;
    uint32_t beta = 0;
};

GoldPairVerdict gold_pair_vanishing(const FieldCtx& F, unsigned a, unsigned b, uint32_t u,
                                    uint32_t alpha);
PValuedTable gold_pair_table(const FieldCtx& F, unsigned a, unsigned b, uint32_t u);

}  // namespace ffa
