#include "ffa/families.hpp"

#include "ffa/cubic.hpp"

namespace ffa {

std::string family_id_str(FamilyId id) {
    switch (id) {
        case FamilyId::ZH31: return "zh31";
        case FamilyId::ZH21: return "zh21";
        case FamilyId::WBZ31: return "wbz31";
        case FamilyId::LWC8: return "lwc8";
        case FamilyId::LWC10: return "lwc10";
    }
    throw Error("unknown family id");
}

FamilyId family_id_from_str(const std::string& s) {
    if (s == "zh31") return FamilyId::ZH31;
    if (s == "zh21") return FamilyId::ZH21;
    if (s == "wbz31") return FamilyId::WBZ31;
    if (s == "lwc8") return FamilyId::LWC8;
    if (s == "lwc10") return FamilyId::LWC10;
    throw Error("unknown family id: " + s);
}

namespace {

void expect_field(const FieldCtx& F, unsigned p, unsigned n, const char* who) {
    if (F.p() != p || F.n() != n)
        throw Error(std::string(who) + ": field must be GF(" + std::to_string(p) + "^" +
                    std::to_string(n) + ")");
}

// X^(p^m) + X + d  (via +(p-1)X for odd characteristic)
FuncSpec trinomial_base(const FieldCtx& F, unsigned m, uint32_t delta) {
    uint64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= F.p();
    FuncSpec base = FuncSpec::monomial(F, 1, pm);
    base.append(FuncSpec::monomial(F, F.neg(1), 1));
    base.append(FuncSpec::constant(F, delta));
    return base;
}

FamilyInstance one_power_family(const FieldCtx& F, FamilyId id, unsigned m, uint32_t delta,
                                uint64_t exponent) {
    FamilyInstance inst{id, m, delta, FuncSpec::composite_power(F, trinomial_base(F, m, delta),
                                                                exponent),
                        {}, false};
    inst.spec.append(FuncSpec::identity(F));
    return inst;
}

}  // namespace

FamilyInstance build_zh31(const FieldCtx& F, unsigned m, uint32_t delta) {
    if (m < 2) throw Error("zh31: m must be >= 2");
    expect_field(F, 2, 2 * m, "zh31");
    uint64_t e = (uint64_t(1) << (2 * m - 2)) + (uint64_t(1) << (m - 2)) + 1;
    FamilyInstance inst = one_power_family(F, FamilyId::ZH31, m, delta, e);

    bool in_sub = F.in_subfield(delta, m);
    inst.preconds.push_back({"delta-in-subfield", in_sub,
                             "delta " + F.elem_str(delta) + (in_sub ? " lies in" : " outside") +
                                 " GF(2^" + std::to_string(m) + ")"});
    // second branch: trace match plus nonvanishing resolvent at (d + d^(2^m))^-1
    unsigned tr_delta = F.abs_trace(delta);
    unsigned tr_one_sub = m % 2;  // absolute trace of 1 in GF(2^m)
    bool tr_match = tr_delta == tr_one_sub;
    inst.preconds.push_back(
        {"trace-match", tr_match,
         "Tr(delta)=" + std::to_string(tr_delta) + ", Tr_sub(1)=" + std::to_string(tr_one_sub)});
    bool res_ok = false;
    std::string res_ev = "not applicable: delta in subfield";
    if (!in_sub) {
        uint32_t s = F.add(delta, F.frob_pow(delta, m));  // nonzero off the subfield
        uint32_t r = cubic_resolvent_eval(F, m, F.inv(s));
        res_ok = r != 0;
        res_ev = "resolvent value " + F.elem_str(r);
    }
    inst.preconds.push_back({"resolvent-nonzero", res_ok, res_ev});
    inst.preconds_ok = in_sub || (tr_match && res_ok);
    return inst;
}

FamilyInstance build_zh21(const FieldCtx& F, unsigned m, uint32_t delta) {
    if (m < 2) throw Error("zh21: m must be >= 2");
    if (m % 3 == 0) throw Error("zh21: m divisible by 3 is outside the family");
    expect_field(F, 2, 2 * m, "zh21");
    uint64_t e = 3 * (uint64_t(1) << (2 * m - 2)) + (uint64_t(1) << (m - 2));
    FamilyInstance inst = one_power_family(F, FamilyId::ZH21, m, delta, e);
    inst.preconds.push_back({"any-delta", true, "no delta condition"});
    inst.preconds_ok = true;
    return inst;
}

FamilyInstance build_wbz31(const FieldCtx& F, unsigned m, uint32_t delta) {
    if (m < 2) throw Error("wbz31: m must be >= 2");
    if (m % 3 == 0) throw Error("wbz31: m divisible by 3 is outside the family");
    expect_field(F, 2, 2 * m, "wbz31");
    uint64_t e = 3 * (uint64_t(1) << (m - 2)) + (uint64_t(1) << (2 * m - 2));
    FamilyInstance inst = one_power_family(F, FamilyId::WBZ31, m, delta, e);
    inst.preconds.push_back({"any-delta", true, "no delta condition"});
    inst.preconds_ok = true;
    return inst;
}

FamilyInstance build_lwc8(const FieldCtx& F, unsigned m, uint32_t delta) {
    if (m < 1) throw Error("lwc8: m must be >= 1");
    expect_field(F, 2, 3 * m, "lwc8");
    uint64_t e1 = (uint64_t(1) << (2 * m + 1)) + (uint64_t(1) << m);
    uint64_t e2 = (uint64_t(1) << (2 * m)) + (uint64_t(1) << (m + 1));
    FamilyInstance inst{FamilyId::LWC8, m, delta,
                        FuncSpec::composite_power(F, trinomial_base(F, m, delta), e1),
                        {}, false};
    inst.spec.append(FuncSpec::composite_power(F, trinomial_base(F, m, delta), e2));
    inst.spec.append(FuncSpec::identity(F));
    uint32_t tr = F.rel_trace(delta, m);
    inst.preconds.push_back(
        {"relative-trace-zero", tr == 0, "Tr to GF(2^" + std::to_string(m) + ") = " + F.elem_str(tr)});
    inst.preconds_ok = tr == 0;
    return inst;
}

FamilyInstance build_lwc10(const FieldCtx& F, unsigned m, uint32_t delta) {
    if (m < 1) throw Error("lwc10: m must be >= 1");
    expect_field(F, 3, 2 * m, "lwc10");
    uint64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= 3;
    FamilyInstance inst{FamilyId::LWC10, m, delta,
                        FuncSpec::composite_power(F, trinomial_base(F, m, delta), pm + 4),
                        {}, false};
    inst.spec.append(FuncSpec::composite_power(F, trinomial_base(F, m, delta), 5));
    inst.spec.append(FuncSpec::identity(F));

    uint32_t tr = F.rel_trace(delta, m);
    uint32_t s = F.sub(1, F.pow(tr, 4));  // lands in GF(3^m)
    bool nonzero_square = s != 0 && F.pow(s, (pm - 1) / 2) == 1;
    bool square_or_zero = s == 0 || nonzero_square;
    std::string ev = "1 - Tr(delta)^4 = " + F.elem_str(s);
    inst.preconds.push_back({"square-in-subfield", square_or_zero, ev});
    inst.preconds.push_back({"nonzero-square-in-subfield", nonzero_square, ev});
    inst.preconds_ok = square_or_zero;
    return inst;
}

FamilyInstance build_family(const FieldCtx& F, FamilyId id, unsigned m, uint32_t delta) {
    switch (id) {
        case FamilyId::ZH31: return build_zh31(F, m, delta);
        case FamilyId::ZH21: return build_zh21(F, m, delta);
        case FamilyId::WBZ31: return build_wbz31(F, m, delta);
        case FamilyId::LWC8: return build_lwc8(F, m, delta);
        case FamilyId::LWC10: return build_lwc10(F, m, delta);
    }
    throw Error("unknown family id");
}

FieldCtx family_field(FamilyId id, unsigned m) {
    switch (id) {
        case FamilyId::ZH31:
        case FamilyId::ZH21:
        case FamilyId::WBZ31: return FieldCtx::make(2, 2 * m);
        case FamilyId::LWC8: return FieldCtx::make(2, 3 * m);
        case FamilyId::LWC10: return FieldCtx::make(3, 2 * m);
    }
    throw Error("unknown family id");
}

}  // namespace ffa
