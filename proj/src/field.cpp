#include "ffa/field.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace ffa {

namespace {

std::atomic<uint32_t> g_next_ctx_id{1};

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

}  // namespace

bool is_prime(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

FieldCtx FieldCtx::make(unsigned p, unsigned n, std::optional<std::vector<uint8_t>> modulus) {
    return FieldCtx(p, n, std::move(modulus));
}

FieldCtx FieldCtx::from_description(const std::string& line) {
    std::vector<uint64_t> vals;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        unsigned long v = std::stoul(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw Error("bad field description token: " + tok);
        vals.push_back(v);
    }
    if (vals.size() < 2) throw Error("field description needs at least p,n");
    unsigned p = unsigned(vals[0]), n = unsigned(vals[1]);
    if (vals.size() == 2) return make(p, n);
    if (vals.size() != size_t(n) + 3)
        throw Error("field description needs n+1 modulus coefficients");
    std::vector<uint8_t> mod(vals.begin() + 2, vals.end());
    return make(p, n, std::move(mod));
}

std::string FieldCtx::description() const {
    std::ostringstream os;
    os << p_ << ',' << n_;
    for (uint8_t c : mod_) os << ',' << unsigned(c);
    return os.str();
}

std::string FieldCtx::elem_str(uint32_t x) const {
    if (x == 0) return "0";
    if (x == 1) return "1";
    return "g^" + std::to_string(log_[x]);
}

uint32_t FieldCtx::add_digits(uint32_t a, uint32_t b) const {
    uint32_t r = 0, mult = 1;
    while (a | b) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

// Plain polynomial multiplication mod the modulus, digit arithmetic
// throughout.  Only used while building the exp/log tables.
uint32_t FieldCtx::mul_poly(uint32_t a, uint32_t b) const {
    std::vector<unsigned> acc(2 * n_, 0);
    std::vector<unsigned> da(n_, 0), db(n_, 0);
    for (unsigned i = 0; i < n_; ++i) { da[i] = a % p_; a /= p_; }
    for (unsigned i = 0; i < n_; ++i) { db[i] = b % p_; b /= p_; }
    for (unsigned i = 0; i < n_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < n_; ++j)
            acc[i + j] = (acc[i + j] + da[i] * db[j]) % p_;
    }
    // reduce: X^n = -(mod_[0] + mod_[1] X + ... + mod_[n-1] X^(n-1))
    for (unsigned d = 2 * n_ - 1; d >= n_; --d) {
        unsigned c = acc[d];
        if (!c) continue;
        acc[d] = 0;
        for (unsigned j = 0; j < n_; ++j) {
            unsigned sub = (c * mod_[j]) % p_;
            acc[d - n_ + j] = (acc[d - n_ + j] + p_ - sub) % p_;
        }
    }
    uint32_t r = 0, mult = 1;
    for (unsigned i = 0; i < n_; ++i) { r += acc[i] * mult; mult *= p_; }
    return r;
}

uint32_t FieldCtx::pow_poly(uint32_t a, uint64_t e) const {
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul_poly(r, base);
        base = mul_poly(base, base);
        e >>= 1;
    }
    return r;
}

FieldCtx::FieldCtx(unsigned p, unsigned n, std::optional<std::vector<uint8_t>> modulus) {
    if (!is_prime(p)) throw Error("p must be prime");
    if (n < 1) throw Error("n must be >= 1");
    uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxQ) throw Error("field too large: p^n exceeds 2^20");
    }
    p_ = p;
    n_ = n;
    q_ = uint32_t(q);
    id_ = g_next_ctx_id.fetch_add(1);

    // Trial division against every monic polynomial of degree <= n/2.
    // Candidate moduli are scanned in lexicographic order with the constant
    // term as the most significant key, so the default choice is stable.
    auto divides = [&](const std::vector<uint8_t>& divisor, const std::vector<uint8_t>& poly) {
        std::vector<int> rem(poly.begin(), poly.end());
        int dd = int(divisor.size()) - 1;
        for (int d = int(rem.size()) - 1; d >= dd; --d) {
            int c = rem[d];
            if (!c) continue;
            // divisor is monic, so the quotient digit is just c
            for (int j = 0; j <= dd; ++j)
                rem[d - dd + j] = (rem[d - dd + j] + int(p) * c - c * divisor[j]) % int(p);
        }
        for (int d = 0; d < dd; ++d)
            if (rem[d]) return false;
        return true;
    };
    auto irreducible = [&](const std::vector<uint8_t>& poly) {
        unsigned deg = unsigned(poly.size()) - 1;
        if (deg == 1) return true;
        if (poly[0] == 0) return false;
        for (unsigned d = 1; d <= deg / 2; ++d) {
            uint64_t count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p;
            std::vector<uint8_t> div(d + 1, 0);
            div[d] = 1;
            for (uint64_t k = 0; k < count; ++k) {
                uint64_t t = k;
                // low-first lexicographic order within each degree
                for (unsigned i = 0; i < d; ++i) {
                    uint64_t scale = 1;
                    for (unsigned j = i + 1; j < d; ++j) scale *= p;
                    div[i] = uint8_t(t / scale);
                    t %= scale;
                }
                if (divides(div, poly)) return false;
            }
        }
        return true;
    };

    if (modulus) {
        mod_ = std::move(*modulus);
        if (mod_.size() != size_t(n) + 1) throw Error("modulus must have n+1 coefficients");
        for (uint8_t c : mod_)
            if (c >= p) throw Error("modulus coefficient out of range");
        if (mod_.back() != 1) throw Error("modulus must be monic");
        if (!irreducible(mod_)) throw Error("modulus is reducible");
    } else {
        uint64_t count = 1;
        for (unsigned i = 0; i < n; ++i) count *= p;
        std::vector<uint8_t> cand(n + 1, 0);
        cand[n] = 1;
        bool found = false;
        for (uint64_t k = 0; k < count && !found; ++k) {
            uint64_t t = k;
            for (unsigned i = 0; i < n; ++i) {
                uint64_t scale = 1;
                for (unsigned j = i + 1; j < n; ++j) scale *= p;
                cand[i] = uint8_t(t / scale);
                t %= scale;
            }
            if (irreducible(cand)) {
                mod_ = cand;
                found = true;
            }
        }
        if (!found) throw Error("no irreducible modulus found");  // unreachable
    }

    pj_mod_.resize(n_ + 1);
    uint64_t pj = 1;
    for (unsigned j = 0; j <= n_; ++j) {
        pj_mod_[j] = q_ > 2 ? pj % (q_ - 1) : 0;
        pj = pj * p_;
    }

    // Least primitive element by packed order.  Order is checked against
    // the prime factorization of q-1 using construction-time poly ops.
    auto factors = prime_factors(q_ - 1);
    gen_ = 0;
    for (uint32_t cand = 1; cand < q_; ++cand) {
        bool ok = pow_poly(cand, q_ - 1) == 1;
        for (uint64_t f : factors)
            if (!ok || pow_poly(cand, (q_ - 1) / f) == 1) { ok = false; break; }
        if (ok) { gen_ = cand; break; }
    }
    if (!gen_) throw Error("no primitive element found");  // unreachable

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, UINT32_MAX);
    uint32_t acc = 1;
    for (uint32_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = acc;
        if (log_[acc] != UINT32_MAX) throw Error("generator order check failed");
        log_[acc] = k;
        acc = mul_poly(acc, gen_);
    }
    if (acc != 1) throw Error("generator order check failed");
    exp2_.assign(2 * (q_ - 1), 0);
    for (uint32_t k = 0; k < 2 * (q_ - 1); ++k) exp2_[k] = exp_[k % (q_ - 1)];

    if (p_ != 2) {
        neg_tab_.assign(q_, 0);
        for (uint32_t x = 0; x < q_; ++x) {
            uint32_t r = 0, mult = 1, t = x;
            while (t) {
                uint32_t d = t % p_;
                r += (d ? p_ - d : 0) * mult;
                mult *= p_;
                t /= p_;
            }
            neg_tab_[x] = r;
        }
        if (q_ <= 1024) {
            add_tab_.assign(size_t(q_) * q_, 0);
            for (uint32_t a = 0; a < q_; ++a)
                for (uint32_t b = 0; b < q_; ++b)
                    add_tab_[size_t(a) * q_ + b] = add_digits(a, b);
        }
    }

    trace_tab_.assign(q_, 0);
    for (uint32_t x = 0; x < q_; ++x) {
        uint32_t t = 0;
        for (unsigned j = 0; j < n_; ++j) t = add(t, frob_pow(x, j));
        if (t >= p_) throw Error("trace landed outside the prime field");
        trace_tab_[x] = uint8_t(t);
    }
}

uint32_t FieldCtx::rel_trace(uint32_t x, unsigned m) const {
    if (m == 0 || n_ % m != 0) throw Error("rel_trace: m must divide n");
    uint32_t t = 0;
    for (unsigned i = 0; i < n_ / m; ++i) t = add(t, frob_pow(x, i * m));
    return t;
}

bool FieldCtx::in_subfield(uint32_t x, unsigned m) const {
    if (m == 0 || n_ % m != 0) throw Error("in_subfield: m must divide n");
    if (x == 0) return true;
    uint64_t sub_order = 1;
    for (unsigned i = 0; i < m; ++i) sub_order *= p_;
    uint32_t step = uint32_t((q_ - 1) / (sub_order - 1));
    return log_[x] % step == 0;
}

std::vector<uint32_t> FieldCtx::subfield_elements(unsigned m) const {
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < q_; ++x)
        if (in_subfield(x, m)) out.push_back(x);
    return out;
}

std::vector<uint8_t> FieldCtx::coords(uint32_t x) const {
    std::vector<uint8_t> c(n_, 0);
    for (unsigned i = 0; i < n_; ++i) { c[i] = uint8_t(x % p_); x /= p_; }
    return c;
}

uint32_t FieldCtx::from_coords(const std::vector<uint8_t>& c) const {
    if (c.size() != n_) throw Error("coordinate vector must have n entries");
    uint32_t r = 0, mult = 1;
    for (unsigned i = 0; i < n_; ++i) {
        if (c[i] >= p_) throw Error("coordinate out of range");
        r += c[i] * mult;
        mult *= p_;
    }
    return r;
}

}  // namespace ffa
