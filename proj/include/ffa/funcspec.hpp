#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ffa/field.hpp"

namespace ffa {

enum class TermKind { Constant, Monomial, TracePower, CompositePower };

class FuncSpec;

// One additive term of a FuncSpec.  `inner` is set for TracePower and
// CompositePower, null otherwise.
struct Term {
    TermKind kind = TermKind::Constant;
    FieldElem coeff;
    uint64_t exponent = 0;   // Monomial/TracePower: reduced; CompositePower: verbatim
    unsigned trace_to = 0;   // TracePower target subfield degree
    std::shared_ptr<const FuncSpec> inner;
};

// Symbolic function F: GF(p^n) -> GF(p^n), kept as a sum of terms.
// Monomial exponents e >= 1 are stored as ((e-1) mod (q-1)) + 1, which
// fixes the value at every point including 0; X^0 becomes a Constant at
// construction time.  CompositePower exponents are kept as written, with
// d = 0 rejected (0^0 has no sensible value there).
class FuncSpec {
  public:
    static FuncSpec constant(const FieldCtx& F, uint32_t value);
    static FuncSpec monomial(const FieldCtx& F, uint32_t coeff, uint64_t exponent);
    static FuncSpec identity(const FieldCtx& F);
    static FuncSpec trace_power(const FieldCtx& F, FuncSpec inner, unsigned subfield_m,
                                uint64_t exponent, uint32_t coeff = 1);
    static FuncSpec composite_power(const FieldCtx& F, FuncSpec base, uint64_t exponent,
                                    uint32_t coeff = 1);

    FuncSpec& append(FuncSpec other);  // termwise sum

    uint32_t eval_raw(const FieldCtx& F, uint32_t x) const;
    FieldElem eval(const FieldCtx& F, FieldElem x) const;
    std::string to_string(const FieldCtx& F) const;

    uint32_t ctx_id() const { return ctx_id_; }
    const std::vector<Term>& terms() const { return terms_; }

  private:
    uint32_t ctx_id_ = 0;
    std::vector<Term> terms_;
};

struct ValueTable {
    std::vector<uint32_t> values;
    uint32_t ctx_id = 0;
};

ValueTable compile(const FieldCtx& F, const FuncSpec& f);

struct PermutationCheck {
    bool is_permutation = false;
    // collision witness, valid when !is_permutation: x1 != x2, F(x1) == F(x2)
    uint32_t x1 = 0, x2 = 0;
};

PermutationCheck is_permutation(const ValueTable& t);

}  // namespace ffa
