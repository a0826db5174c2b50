#include "ffa/walsh.hpp"

#include <numeric>

namespace ffa {

namespace {

unsigned v2(uint64_t x) { return x == 0 ? 64 : unsigned(__builtin_ctzll(x)); }

uint64_t gcd64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

void check_table(const FieldCtx& F, const PValuedTable& f) {
    if (f.size() != F.q()) throw Error("walsh: table length mismatch");
}

// Counts for W(v) by one pass over x.
void count_point(const FieldCtx& F, const PValuedTable& f, uint32_t v, int64_t* counts) {
    unsigned p = F.p();
    for (uint32_t x = 0; x < F.q(); ++x) {
        unsigned t = F.abs_trace(F.mul(v, x));
        counts[(f[x] + p - t) % p]++;
    }
}

// In-place Walsh-Hadamard butterfly on 2^n signed entries.
void fwht(std::vector<int64_t>& a) {
    for (size_t h = 1; h < a.size(); h <<= 1)
        for (size_t i = 0; i < a.size(); i += h << 1)
            for (size_t j = i; j < i + h; ++j) {
                int64_t x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
}

}  // namespace

WalshPoint walsh_point(const FieldCtx& F, const PValuedTable& f, uint32_t v) {
    check_table(F, f);
    WalshPoint w;
    w.v = v;
    w.counts.assign(F.p(), 0);
    count_point(F, f, v, w.counts.data());
    return w;
}

std::vector<WalshPoint> walsh_spectrum(const FieldCtx& F, const PValuedTable& f) {
    check_table(F, f);
    uint32_t q = F.q();
    std::vector<WalshPoint> out(q);

    if (F.p() == 2) {
        // Tr(vx) is the bilinear form v^T M x on coordinates, M[i][j] =
        // Tr(X^(i+j)); the spectrum is the plain Hadamard transform of
        // (-1)^f read off at index M*v.
        unsigned n = F.n();
        std::vector<uint32_t> rows(n, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (F.abs_trace(F.mul(1u << i, 1u << j))) rows[i] |= 1u << j;
        std::vector<int64_t> s(q);
        for (uint32_t x = 0; x < q; ++x) s[x] = f[x] ? -1 : 1;
        fwht(s);
        for (uint32_t v = 0; v < q; ++v) {
            uint32_t mv = 0;
            for (unsigned i = 0; i < n; ++i)
                mv |= uint32_t(__builtin_parity(rows[i] & v)) << i;
            int64_t w = s[mv];
            out[v].v = v;
            out[v].counts = {(int64_t(q) + w) / 2, (int64_t(q) - w) / 2};
        }
        return out;
    }

#pragma omp parallel for schedule(static)
    for (int64_t v = 0; v < int64_t(q); ++v) {
        out[size_t(v)].v = uint32_t(v);
        out[size_t(v)].counts.assign(F.p(), 0);
        count_point(F, f, uint32_t(v), out[size_t(v)].counts.data());
    }
    return out;
}

PValuedTable quad_trace_table(const FieldCtx& F, const std::vector<uint32_t>& a_coeffs) {
    PValuedTable f(F.q());
    std::vector<uint64_t> exps(a_coeffs.size());
    uint64_t pi = 1;
    for (size_t i = 0; i < a_coeffs.size(); ++i) {
        exps[i] = pi + 1;
        pi *= F.p();
    }
#pragma omp parallel for schedule(static)
    for (int64_t x = 0; x < int64_t(F.q()); ++x) {
        uint32_t acc = 0;
        for (size_t i = 0; i < a_coeffs.size(); ++i)
            acc = F.add(acc, F.mul(a_coeffs[i], F.pow(uint32_t(x), exps[i])));
        f[size_t(x)] = uint8_t(F.abs_trace(acc));
    }
    return f;
}

uint32_t LinearizedMap::eval(const FieldCtx& F, uint32_t x) const {
    uint32_t acc = 0;
    unsigned n = F.n();
    for (unsigned i = 0; i < a_coeffs.size(); ++i) {
        acc = F.add(acc, F.mul(a_coeffs[i], F.frob_pow(x, i)));
        acc = F.add(acc, F.frob_pow(F.mul(a_coeffs[i], x), (n - i) % n));
    }
    return acc;
}

std::vector<uint32_t> LinearizedMap::kernel_elements(const FieldCtx& F) const {
    std::vector<uint32_t> ker{0};
    ker.reserve(size_t(1) << ell);  // exact only for p=2, reserve is a hint
    for (uint32_t b : kernel_basis) {
        size_t sz = ker.size();
        for (unsigned mult = 1; mult < F.p(); ++mult) {
            uint32_t scaled = b;
            for (unsigned i = 1; i < mult; ++i) scaled = F.add(scaled, b);
            for (size_t i = 0; i < sz; ++i) ker.push_back(F.add(ker[i], scaled));
        }
    }
    return ker;
}

LinearizedMap quad_form_kernel(const FieldCtx& F, const std::vector<uint32_t>& a_coeffs) {
    if (F.n() % 2 != 0) throw Error("quad_form_kernel: needs even extension degree");
    if (a_coeffs.size() > size_t(F.n() / 2) + 1)
        throw Error("quad_form_kernel: coefficient list longer than n/2 + 1");
    LinearizedMap L;
    L.a_coeffs = a_coeffs;
    unsigned n = F.n(), p = F.p();

    // matrix of L in the coordinate basis, column j = coords(L(X^j))
    std::vector<std::vector<uint8_t>> M(n, std::vector<uint8_t>(n, 0));
    uint32_t basis = 1;
    for (unsigned j = 0; j < n; ++j) {
        auto img = F.coords(L.eval(F, basis));
        for (unsigned i = 0; i < n; ++i) M[i][j] = img[i];
        basis *= p;
    }

    // Gauss-Jordan over GF(p)
    std::vector<int> pivot_col_of_row(n, -1);
    std::vector<bool> col_has_pivot(n, false);
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned r = rank;
        while (r < n && M[r][col] == 0) ++r;
        if (r == n) continue;
        std::swap(M[r], M[rank]);
        unsigned inv_piv = 1;
        while ((inv_piv * M[rank][col]) % p != 1) ++inv_piv;
        for (unsigned j = 0; j < n; ++j) M[rank][j] = uint8_t((M[rank][j] * inv_piv) % p);
        for (unsigned i = 0; i < n; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            unsigned factor = M[i][col];
            for (unsigned j = 0; j < n; ++j)
                M[i][j] = uint8_t((M[i][j] + (p - factor) * M[rank][j]) % p);
        }
        pivot_col_of_row[rank] = int(col);
        col_has_pivot[col] = true;
        ++rank;
    }

    L.ell = n - rank;
    for (unsigned col = 0; col < n; ++col) {
        if (col_has_pivot[col]) continue;
        std::vector<uint8_t> vec(n, 0);
        vec[col] = 1;
        for (unsigned r = 0; r < rank; ++r) {
            unsigned pc = unsigned(pivot_col_of_row[r]);
            vec[pc] = uint8_t((p - M[r][col] % p) % p);
        }
        L.kernel_basis.push_back(F.from_coords(vec));
    }
    return L;
}

bool quad_walsh_law_check(const FieldCtx& F, const std::vector<uint32_t>& a_coeffs, uint32_t v) {
    LinearizedMap L = quad_form_kernel(F, a_coeffs);
    PValuedTable f = quad_trace_table(F, a_coeffs);
    bool vanishes_on_kernel = true;
    for (uint32_t x : L.kernel_elements(F)) {
        unsigned lhs = (f[x] + F.p() - F.abs_trace(F.mul(v, x))) % F.p();
        if (lhs != 0) { vanishes_on_kernel = false; break; }
    }
    int64_t predicted = 0;
    if (vanishes_on_kernel) {
        predicted = 1;
        for (unsigned i = 0; i < F.n() + L.ell; ++i) predicted *= F.p();
    }
    return walsh_point(F, f, v).mag_sq(F.p()) == predicted;
}

PValuedTable gold_pair_table(const FieldCtx& F, unsigned a, unsigned b, uint32_t u) {
    if (F.p() != 2) throw Error("gold_pair_table: characteristic 2 only");
    uint64_t e1 = (uint64_t(1) << a) + 1, e2 = (uint64_t(1) << b) + 1;
    PValuedTable f(F.q());
    for (uint32_t x = 0; x < F.q(); ++x)
        f[x] = uint8_t(F.abs_trace(F.mul(u, F.add(F.pow(x, e1), F.pow(x, e2)))));
    return f;
}

namespace {

// L_i(y) = y + y^(2^d) + y^(2^2d) + ... while the exponent stays <= k/2 - d.
uint32_t gold_l_eval(const FieldCtx& F, unsigned d, uint32_t y) {
    unsigned k = F.n();
    uint32_t acc = 0;
    for (unsigned e = 0; e + d <= k / 2; e += d) acc = F.add(acc, F.frob_pow(y, e));
    return acc;
}

struct GoldParams {
    unsigned k, d1, d2, nu, v2k;
};

// The u = 1 decision (three-way case split on the valuations).
GoldPairVerdict base_decide(const FieldCtx& F, const GoldParams& gp, unsigned a, unsigned b,
                            uint32_t y) {
    GoldPairVerdict v;
    bool middle = v2(b - a) == v2(b + a) && v2(b + a) + 1 == gp.v2k;
    if (!middle) {
        if (gp.v2k <= gp.nu) {
            bool in_both = F.rel_trace(y, gp.d1) == 0 && F.rel_trace(y, gp.d2) == 0;
            v.must_vanish = !in_both;
            v.rule = "outside-S-intersection";
        } else {
            v.must_vanish = gold_l_eval(F, gp.d1, gold_l_eval(F, gp.d2, y)) != 0;
            v.rule = "composed-L-nonzero";
        }
    } else {
        v.must_vanish = gold_l_eval(F, gp.d1, gold_l_eval(F, gp.d2, F.add(y, 1))) != 0;
        v.rule = "composed-L-shifted-nonzero";
    }
    return v;
}

}  // namespace

GoldPairVerdict gold_pair_vanishing(const FieldCtx& F, unsigned a, unsigned b, uint32_t u,
                                    uint32_t alpha) {
    if (F.p() != 2) throw Error("gold_pair_vanishing: characteristic 2 only");
    if (a >= b) throw Error("gold_pair_vanishing: need 0 <= a < b");
    unsigned k = F.n();
    GoldParams gp;
    gp.k = k;
    gp.d1 = unsigned(gcd64(b - a, k));
    gp.d2 = unsigned(gcd64(b + a, k));
    gp.nu = std::max(v2(b - a), v2(b + a));
    gp.v2k = v2(k);
    if (!F.in_subfield(u, gp.d1)) throw Error("gold_pair_vanishing: u outside GF(2^d1)");

    GoldPairVerdict v;
    if (u == 0) {
        v.rule = "u-zero-no-claim";
        return v;
    }
    if (u == 1) return base_decide(F, gp, a, b, alpha);

    bool exceptional = v2(a) == v2(b) && v2(b) < gp.v2k;
    if (!exceptional) {
        // reduce W_{f_u} to W_f at alpha/beta with u = beta^(2^a + 1)
        v.beta_searched = true;
        uint64_t e = (uint64_t(1) << a) + 1;
        for (uint32_t cand : F.subfield_elements(gp.d1)) {
            if (cand != 0 && F.pow(cand, e) == u) {
                v.beta_found = true;
                v.beta = cand;
                break;
            }
        }
        if (!v.beta_found) {
            v.rule = "beta-search-failed-no-claim";
            return v;
        }
        GoldPairVerdict base = base_decide(F, gp, a, b, F.div(alpha, v.beta));
        base.beta_searched = true;
        base.beta_found = true;
        base.beta = v.beta;
        base.rule = "beta-reduction;" + base.rule;
        return base;
    }

    // Exceptional valuation pattern: v2(a) == v2(b) < v2(k).  Shifted
    // variants of the S / composed-L tests overclaim here (direct spectra
    // refute them already at k = 4, 6, 8), so the only claim made is the one
    // provable outright: when k divides a + b, applying Frobenius to the
    // second term gives Tr(u x^(2^b+1)) == Tr(u^(2^a) x^(2^a+1)), so for u
    // fixed by that Frobenius power the two terms cancel, f_u is identically
    // zero, and its transform vanishes at every alpha != 0.
    if ((a + b) % k == 0 && F.frob_pow(u, a % k) == u) {
        v.must_vanish = alpha != 0;
        v.rule = "fused-cancellation";
        return v;
    }
    v.rule = "exceptional-valuation-no-claim";
    return v;
}

}  // namespace ffa
