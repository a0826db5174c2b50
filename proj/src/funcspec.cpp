#include "ffa/funcspec.hpp"

#include <sstream>

namespace ffa {

namespace {

uint64_t reduce_exponent(const FieldCtx& F, uint64_t e) {
    // value-preserving reduction for e >= 1: keeps 0^e = 0
    if (F.q() == 2) return 1;
    return (e - 1) % (F.q() - 1) + 1;
}

}  // namespace

FuncSpec FuncSpec::constant(const FieldCtx& F, uint32_t value) {
    FuncSpec s;
    s.ctx_id_ = F.id();
    Term t;
    t.kind = TermKind::Constant;
    t.coeff = F.el(value);
    s.terms_.push_back(std::move(t));
    return s;
}

FuncSpec FuncSpec::monomial(const FieldCtx& F, uint32_t coeff, uint64_t exponent) {
    if (exponent == 0) return constant(F, coeff);
    FuncSpec s;
    s.ctx_id_ = F.id();
    Term t;
    t.kind = TermKind::Monomial;
    t.coeff = F.el(coeff);
    t.exponent = reduce_exponent(F, exponent);
    s.terms_.push_back(std::move(t));
    return s;
}

FuncSpec FuncSpec::identity(const FieldCtx& F) { return monomial(F, 1, 1); }

FuncSpec FuncSpec::trace_power(const FieldCtx& F, FuncSpec inner, unsigned subfield_m,
                               uint64_t exponent, uint32_t coeff) {
    if (inner.ctx_id_ != F.id()) throw Error("trace_power: inner spec from another field");
    if (subfield_m == 0 || F.n() % subfield_m != 0)
        throw Error("trace_power: subfield degree must divide n");
    if (exponent == 0) throw Error("trace_power: exponent must be >= 1");
    FuncSpec s;
    s.ctx_id_ = F.id();
    Term t;
    t.kind = TermKind::TracePower;
    t.coeff = F.el(coeff);
    t.exponent = reduce_exponent(F, exponent);
    t.trace_to = subfield_m;
    t.inner = std::make_shared<const FuncSpec>(std::move(inner));
    s.terms_.push_back(std::move(t));
    return s;
}

FuncSpec FuncSpec::composite_power(const FieldCtx& F, FuncSpec base, uint64_t exponent,
                                   uint32_t coeff) {
    if (base.ctx_id_ != F.id()) throw Error("composite_power: base spec from another field");
    if (exponent == 0) throw Error("composite_power: exponent 0 would evaluate 0^0");
    FuncSpec s;
    s.ctx_id_ = F.id();
    Term t;
    t.kind = TermKind::CompositePower;
    t.coeff = F.el(coeff);
    t.exponent = exponent;
    t.inner = std::make_shared<const FuncSpec>(std::move(base));
    s.terms_.push_back(std::move(t));
    return s;
}

FuncSpec& FuncSpec::append(FuncSpec other) {
    if (terms_.empty() && ctx_id_ == 0) ctx_id_ = other.ctx_id_;
    if (other.ctx_id_ != ctx_id_) throw Error("append: specs from different fields");
    for (auto& t : other.terms_) terms_.push_back(std::move(t));
    return *this;
}

uint32_t FuncSpec::eval_raw(const FieldCtx& F, uint32_t x) const {
    if (ctx_id_ != F.id()) throw Error("eval: spec belongs to a different field");
    uint32_t acc = 0;
    for (const Term& t : terms_) {
        uint32_t val = 0;
        switch (t.kind) {
            case TermKind::Constant:
                val = t.coeff.v;
                break;
            case TermKind::Monomial:
                val = F.mul(t.coeff.v, F.pow(x, t.exponent));
                break;
            case TermKind::TracePower: {
                uint32_t inner = t.inner->eval_raw(F, x);
                uint32_t tr = F.rel_trace(inner, t.trace_to);
                val = F.mul(t.coeff.v, F.pow(tr, t.exponent));
                break;
            }
            case TermKind::CompositePower: {
                uint32_t base = t.inner->eval_raw(F, x);
                val = F.mul(t.coeff.v, F.pow(base, t.exponent));
                break;
            }
        }
        acc = F.add(acc, val);
    }
    return acc;
}

FieldElem FuncSpec::eval(const FieldCtx& F, FieldElem x) const {
    return F.el(eval_raw(F, F.raw(x)));
}

std::string FuncSpec::to_string(const FieldCtx& F) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool unit_coeff = t.coeff.v == 1;
        if (t.kind == TermKind::Constant) {
            os << F.elem_str(t.coeff.v);
            continue;
        }
        if (!unit_coeff) os << F.elem_str(t.coeff.v) << "*";
        switch (t.kind) {
            case TermKind::Monomial:
                os << "X";
                if (t.exponent != 1) os << "^" << t.exponent;
                break;
            case TermKind::TracePower:
                os << "Tr_" << t.trace_to << "(" << t.inner->to_string(F) << ")";
                if (t.exponent != 1) os << "^" << t.exponent;
                break;
            case TermKind::CompositePower:
                os << "(" << t.inner->to_string(F) << ")^" << t.exponent;
                break;
            default:
                break;
        }
    }
    return os.str();
}

ValueTable compile(const FieldCtx& F, const FuncSpec& f) {
    ValueTable t;
    t.ctx_id = F.id();
    t.values.resize(F.q());
#pragma omp parallel for schedule(static)
    for (int64_t x = 0; x < int64_t(F.q()); ++x)
        t.values[size_t(x)] = f.eval_raw(F, uint32_t(x));
    return t;
}

PermutationCheck is_permutation(const ValueTable& t) {
    PermutationCheck r;
    std::vector<uint32_t> first(t.values.size(), UINT32_MAX);
    for (uint32_t x = 0; x < t.values.size(); ++x) {
        uint32_t y = t.values[x];
        if (first[y] != UINT32_MAX) {
            r.is_permutation = false;
            r.x1 = first[y];
            r.x2 = x;
            return r;
        }
        first[y] = x;
    }
    r.is_permutation = true;
    return r;
}

}  // namespace ffa
