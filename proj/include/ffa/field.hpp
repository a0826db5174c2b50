#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of GF(p^n), packed as sum c_i * p^i of the coordinate digits
// (c_0 is the constant term of the representing polynomial).  Elements
// carry the id of the context that created them so that cross-field
// mixups fail loudly instead of producing garbage.
struct FieldElem {
    uint32_t v = 0;
    uint32_t ctx = 0;
    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// GF(p^n) with table-driven arithmetic.  Multiplication, inversion and
// powering go through exp/log tables built from a fixed primitive element,
// so construction is O(q) time and memory; q = p^n is capped at 2^20.
//
// The modulus defaults to the lexicographically least monic irreducible
// polynomial of degree n, coefficients compared from the constant term up.
// All derived data (generator, tables, traces) is deterministic given
// (p, n, modulus).
class FieldCtx {
  public:
    static constexpr uint32_t kMaxQ = 1u << 20;

    static FieldCtx make(unsigned p, unsigned n,
                         std::optional<std::vector<uint8_t>> modulus = std::nullopt);
    // Parses the serialized form "p,n,c0,c1,...,cn".
    static FieldCtx from_description(const std::string& line);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) = default;

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    uint32_t q() const { return q_; }
    uint32_t id() const { return id_; }
    const std::vector<uint8_t>& modulus() const { return mod_; }
    std::string description() const;

    uint32_t generator_raw() const { return gen_; }
    FieldElem generator() const { return {gen_, id_}; }
    FieldElem zero() const { return {0, id_}; }
    FieldElem one() const { return {1, id_}; }

    // --- raw (unchecked) ops on packed values; the hot-path interface ---
    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_tab_.empty()) return add_tab_[size_t(a) * q_ + b];
        return add_digits(a, b);
    }
    uint32_t neg(uint32_t a) const { return p_ == 2 ? a : neg_tab_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp2_[size_t(log_[a]) + log_[b]];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw Error("inverse of zero");
        return exp2_[(q_ - 1) - log_[a]];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        uint64_t r = e % (q_ - 1);
        return exp_[size_t(log_[a]) * r % (q_ - 1)];
    }
    // x^(p^j)
    uint32_t frob_pow(uint32_t x, unsigned j) const {
        if (x == 0) return 0;
        return exp_[size_t(log_[x]) * pj_mod_[j % n_] % (q_ - 1)];
    }
    uint32_t frob(uint32_t x) const { return frob_pow(x, 1); }

    uint32_t exp_of(uint32_t k) const { return exp_[k % (q_ - 1)]; }    // g^k
    uint32_t log_of(uint32_t a) const {
        if (a == 0) throw Error("log of zero");
        return log_[a];
    }

    // Absolute trace to GF(p), returned as a digit in [0, p).
    unsigned abs_trace(uint32_t x) const { return trace_tab_[x]; }
    // Relative trace onto the subfield GF(p^m); m must divide n.
    uint32_t rel_trace(uint32_t x, unsigned m) const;
    // Membership test for the subfield GF(p^m).
    bool in_subfield(uint32_t x, unsigned m) const;
    // All elements of GF(p^m) in packed order; m must divide n.
    std::vector<uint32_t> subfield_elements(unsigned m) const;

    std::vector<uint8_t> coords(uint32_t x) const;
    uint32_t from_coords(const std::vector<uint8_t>& c) const;

    // --- checked element interface ---
    FieldElem el(uint32_t packed) const {
        if (packed >= q_) throw Error("packed value out of range");
        return {packed, id_};
    }
    uint32_t raw(const FieldElem& e) const {
        if (e.ctx != id_) throw Error("element belongs to a different field");
        return e.v;
    }
    FieldElem add(FieldElem a, FieldElem b) const { return {add(raw(a), raw(b)), id_}; }
    FieldElem sub(FieldElem a, FieldElem b) const { return {sub(raw(a), raw(b)), id_}; }
    FieldElem mul(FieldElem a, FieldElem b) const { return {mul(raw(a), raw(b)), id_}; }
    FieldElem inv(FieldElem a) const { return {inv(raw(a)), id_}; }
    FieldElem pow(FieldElem a, uint64_t e) const { return {pow(raw(a), e), id_}; }

    // Short printable form: "0", "1" or "g^k".
    std::string elem_str(uint32_t x) const;

  private:
    FieldCtx(unsigned p, unsigned n, std::optional<std::vector<uint8_t>> modulus);

    uint32_t add_digits(uint32_t a, uint32_t b) const;
    uint32_t mul_poly(uint32_t a, uint32_t b) const;  // construction-time only
    uint32_t pow_poly(uint32_t a, uint64_t e) const;

    unsigned p_ = 0, n_ = 0;
    uint32_t q_ = 0, id_ = 0, gen_ = 0;
    std::vector<uint8_t> mod_;
    std::vector<uint32_t> exp_;    // exp_[k] = g^k, k in [0, q-1)
    std::vector<uint32_t> exp2_;   // doubled exp table, avoids a modulo in mul
    std::vector<uint32_t> log_;
    std::vector<uint8_t> trace_tab_;
    std::vector<uint32_t> neg_tab_;       // odd p only
    std::vector<uint32_t> add_tab_;       // odd p, small q only
    std::vector<uint64_t> pj_mod_;        // p^j mod (q-1), j in [0, n]
};

bool is_prime(uint64_t v);

}  // namespace ffa
