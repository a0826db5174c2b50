#pragma once

#include "ffa/cdiff.hpp"
#include "ffa/field.hpp"
#include "ffa/funcspec.hpp"
#include "ffa/walsh.hpp"

// Serial reference implementations, deliberately straightforward and
// independent of the table tricks in the main kernels (no shared fast
// paths, no OpenMP).  Tests compare the optimized engines against these;
// the benchmark target measures the gap.
namespace ffa::ref {

// Trace computed from scratch by repeated multiplication, no trace table.
unsigned abs_trace_slow(const FieldCtx& F, uint32_t x);

// Direct per-point Walsh summation over the whole field.
WalshPoint walsh_point(const FieldCtx& F, const PValuedTable& f, uint32_t v);
std::vector<WalshPoint> walsh_spectrum(const FieldCtx& F, const PValuedTable& f);

// c-differential uniformity by entrywise counting, O(q^3).
uint32_t cdu_max(const FieldCtx& F, const ValueTable& T, uint32_t c);

// Root count of X^3 + X + a by exhaustive search.
unsigned cubic_root_count(const FieldCtx& F, uint32_t a);

// Horner evaluation of an explicit coefficient vector (coeffs[i] on X^i).
uint32_t horner_eval(const FieldCtx& F, const std::vector<uint32_t>& coeffs, uint32_t x);

// Permutation test by sorting a copy of the table.
bool is_permutation_sorted(const ValueTable& t);

}  // namespace ffa::ref
