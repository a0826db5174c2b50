// Compares the serial reference engines against the production kernels on
// the two hot paths: full Walsh spectra and c-differential uniformity grids.
// The reference implementations are the plain-loop versions the test suite
// trusts; the production side adds the FWHT butterfly, row counting, the
// collision early-exit, and OpenMP.
//
//   ./ffa_bench [--threads N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "ffa/cdiff.hpp"
#include "ffa/families.hpp"
#include "ffa/funcspec.hpp"
#include "ffa/parallel.hpp"
#include "ffa/reference.hpp"
#include "ffa/walsh.hpp"

using namespace ffa;

namespace {

template <typename Fn>
double best_ms(Fn&& fn, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ms < best) best = ms;
    }
    return best;
}

void row(const char* engine, const std::string& what, const std::string& result, double ms,
         double baseline_ms) {
    printf("  %-28s %-38s %-14s %9.2f ms", engine, what.c_str(), result.c_str(), ms);
    if (baseline_ms > 0) printf("  (%5.1fx)", baseline_ms / ms);
    printf("\n");
}

void bench_walsh(unsigned n, int ref_reps) {
    FieldCtx F = FieldCtx::make(2, n);
    std::mt19937 rng(0xB0B0 + n);
    PValuedTable f(F.q());
    for (auto& v : f) v = uint8_t(rng() & 1);

    std::string what = "walsh spectrum GF(2^" + std::to_string(n) + ")";
    int64_t check = 0;
    double ref_ms = best_ms(
        [&] {
            auto s = ref::walsh_spectrum(F, f);
            check = s[1].coeff2();
        },
        ref_reps);
    row("serial per-point", what, "W(g^0)=" + std::to_string(check), ref_ms, 0);
    double fast_ms = best_ms([&] {
        auto s = walsh_spectrum(F, f);
        if (s[1].coeff2() != check) throw Error("bench: engines disagree");
    });
    row("fwht butterfly", what, "agrees", fast_ms, ref_ms);
}

void bench_cdu(uint32_t c, const char* tag) {
    FieldCtx F = FieldCtx::make(2, 8);
    ValueTable T = compile(F, build_zh31(F, 4, 1).spec);

    std::string what = std::string("uniformity GF(2^8) ") + tag;
    uint32_t check = 0;
    double ref_ms = best_ms([&] { check = ref::cdu_max(F, T, c); });
    row("serial entrywise", what, "max=" + std::to_string(check), ref_ms, 0);
    double fast_ms = best_ms([&] {
        if (cdu_max(F, T, c) != check) throw Error("bench: engines disagree");
    });
    row("row counting", what, "agrees", fast_ms, ref_ms);
    double pcn_ms = best_ms([&] {
        if (is_pcn(F, T, c) != (check == 1)) throw Error("bench: engines disagree");
    });
    row("collision early-exit", what, check == 1 ? "pcn" : "not pcn", pcn_ms, ref_ms);
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--threads") set_threads(std::atoi(argv[i + 1]));

    printf("threads: %d\n\n", thread_count());
    printf("  %-28s %-38s %-14s %12s\n", "engine", "workload", "result", "time");

    bench_walsh(10, 3);
    bench_walsh(12, 1);
    printf("\n");

    FieldCtx F = FieldCtx::make(2, 8);
    uint32_t pcn_c = 0;
    for (uint32_t c : F.subfield_elements(4))
        if (c != 1) { pcn_c = c; break; }
    bench_cdu(pcn_c, "(pcn cell)");
    printf("\n");
    // first element outside the subfield: the uniformity-3+ regime
    uint32_t off_c = 0;
    for (uint32_t c = 2; c < F.q(); ++c)
        if (!F.in_subfield(c, 4)) { off_c = c; break; }
    bench_cdu(off_c, "(off-subfield cell)");
    return 0;
}
