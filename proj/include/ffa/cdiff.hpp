#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffa/field.hpp"
#include "ffa/funcspec.hpp"

namespace ffa {

// Summary of the c-DDT of one function at one c.  Entries count solutions
// of F(x+a) - c F(x) = b; a = 0 is excluded exactly when c = 1 (there the
// row is the degenerate constant-0 map).
struct CDdtSummary {
    uint32_t c = 0;
    uint32_t uniformity = 0;
    bool excluded_a0 = false;
    std::map<uint32_t, uint64_t> histogram;  // entry value -> #(a,b) pairs
    std::vector<std::pair<uint32_t, uint32_t>> witnesses;  // lex-first (a,b) at max
    std::string classification;  // "PcN", "APcN", or the number

    static constexpr size_t kWitnessCap = 16;
};

uint32_t cddt_entry(const FieldCtx& F, const ValueTable& T, uint32_t c, uint32_t a, uint32_t b);

CDdtSummary cdu(const FieldCtx& F, const ValueTable& T, uint32_t c);

// Just the maximum entry, the tight loop used by grid drivers.
uint32_t cdu_max(const FieldCtx& F, const ValueTable& T, uint32_t c);

// True exactly when every admissible c-DDT entry is 1, i.e. each difference
// map x -> F(x+a) - cF(x) is a bijection.  Same answer as cdu_max(...) == 1
// but with collision early-exit and no per-row counter resets; the hot path
// of the uniformity-1 grid sweeps.
bool is_pcn(const FieldCtx& F, const ValueTable& T, uint32_t c);

// The same count as cddt_entry, computed through the additive-character
// identity q*N = sum over beta and x of chi(beta*(F(x+a) - cF(x) - b)),
// realized exactly by residue counting.  Exists as an independent oracle;
// throws if the identity does not produce an integer (an implementation
// bug by construction).
uint32_t count_via_charsum(const FieldCtx& F, const ValueTable& T, uint32_t c, uint32_t a,
                           uint32_t b);

// One full c-DDT row block per c: rows indexed by admissible a, columns by
// b.  Used for CSV dumps.
std::vector<std::vector<uint32_t>> cddt_rows(const FieldCtx& F, const ValueTable& T, uint32_t c,
                                             std::vector<uint32_t>& a_order);

struct BctSummary {
    uint32_t uniformity = 0;
    std::vector<std::pair<uint32_t, uint32_t>> witnesses;  // lex-first (a,b) at max
};

// Boomerang table max over a,b != 0; F must be a permutation.
BctSummary bct(const FieldCtx& F, const ValueTable& T);

}  // namespace ffa
