#include "ffa/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>

#include "ffa/cdiff.hpp"
#include "ffa/families.hpp"
#include "ffa/funcspec.hpp"

namespace ffa {

using nlohmann::ordered_json;

std::string rel_str(Rel r) {
    switch (r) {
        case Rel::Eq: return "eq";
        case Rel::Le: return "le";
        case Rel::Ge: return "ge";
    }
    throw Error("unknown relation");
}

Rel rel_from_str(const std::string& s) {
    if (s == "eq") return Rel::Eq;
    if (s == "le") return Rel::Le;
    if (s == "ge") return Rel::Ge;
    throw Error("unknown relation: " + s);
}

bool rel_holds(Rel r, int64_t observed, int64_t expected) {
    switch (r) {
        case Rel::Eq: return observed == expected;
        case Rel::Le: return observed <= expected;
        case Rel::Ge: return observed >= expected;
    }
    return false;
}

void VerdictReport::finalize() {
    pass = true;
    for (auto& cl : claims) {
        cl.pass = true;
        for (auto& cell : cl.cells) {
            cell.pass = rel_holds(cl.rel, cell.observed, cl.expected);
            cl.pass = cl.pass && cell.pass;
        }
        pass = pass && cl.pass;
    }
}

ordered_json report_to_json(const VerdictReport& r, bool include_runtime) {
    ordered_json j;
    j["id"] = r.id;
    j["field"] = r.field;
    j["generator"] = r.generator;
    j["generator-coords"] = r.generator_coords;
    j["m"] = r.m;
    j["pass"] = r.pass;
    ordered_json claims = ordered_json::array();
    for (const auto& cl : r.claims) {
        ordered_json jc;
        jc["name"] = cl.name;
        jc["relation"] = rel_str(cl.rel);
        jc["expected"] = cl.expected;
        jc["pass"] = cl.pass;
        ordered_json cells = ordered_json::array();
        for (const auto& cell : cl.cells)
            cells.push_back(ordered_json{{"delta", cell.delta},
                                         {"c", cell.c},
                                         {"observed", cell.observed},
                                         {"pass", cell.pass}});
        jc["cells"] = std::move(cells);
        claims.push_back(std::move(jc));
    }
    j["claims"] = std::move(claims);
    ordered_json obs = ordered_json::array();
    for (const auto& o : r.observations)
        obs.push_back(ordered_json{{"name", o.name}, {"data", o.data}});
    j["observations"] = std::move(obs);
    if (include_runtime) j["runtime-ms"] = r.runtime_ms;
    return j;
}

VerdictReport report_from_json(const ordered_json& j) {
    VerdictReport r;
    r.id = j.at("id").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.generator = j.at("generator").get<std::string>();
    r.generator_coords = j.at("generator-coords").get<std::vector<uint8_t>>();
    r.m = j.at("m").get<int>();
    r.pass = j.at("pass").get<bool>();
    for (const auto& jc : j.at("claims")) {
        ClaimBlock cl;
        cl.name = jc.at("name").get<std::string>();
        cl.rel = rel_from_str(jc.at("relation").get<std::string>());
        cl.expected = jc.at("expected").get<int64_t>();
        cl.pass = jc.at("pass").get<bool>();
        for (const auto& je : jc.at("cells")) {
            GridCell cell;
            cell.delta = je.at("delta").get<std::string>();
            cell.c = je.at("c").get<std::string>();
            cell.observed = je.at("observed").get<int64_t>();
            cell.pass = je.at("pass").get<bool>();
            cl.cells.push_back(std::move(cell));
        }
        r.claims.push_back(std::move(cl));
    }
    for (const auto& jo : j.at("observations"))
        r.observations.push_back({jo.at("name").get<std::string>(), jo.at("data")});
    if (j.contains("runtime-ms")) r.runtime_ms = j.at("runtime-ms").get<int64_t>();
    return r;
}

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

VerdictReport report_shell(const std::string& id, const FieldCtx& F, int m) {
    VerdictReport r;
    r.id = id;
    r.field = F.description();
    r.generator = F.elem_str(F.generator_raw());
    r.generator_coords = F.coords(F.generator_raw());
    r.m = m;
    return r;
}

std::vector<uint32_t> without_one(std::vector<uint32_t> v) {
    v.erase(std::remove(v.begin(), v.end(), 1u), v.end());
    return v;
}

std::vector<uint32_t> complement_sorted(const FieldCtx& F, const std::vector<uint32_t>& sorted) {
    std::vector<uint32_t> out;
    size_t i = 0;
    for (uint32_t x = 0; x < F.q(); ++x) {
        if (i < sorted.size() && sorted[i] == x) {
            ++i;
            continue;
        }
        out.push_back(x);
    }
    return out;
}

// One claim's worth of grid cells to measure.
struct Sweep {
    std::string claim_name;
    Rel rel = Rel::Eq;
    int64_t expected = 0;
    std::vector<uint32_t> cs;
};

// Runs cdu_max over every (delta, c) cell of each sweep, compiling each
// family member once and reusing it across all c.  Cells land delta-major
// in the given orders, so output is schedule-independent.
std::vector<ClaimBlock> sweep_family(const FieldCtx& F, FamilyId id, unsigned m,
                                     const std::vector<uint32_t>& deltas,
                                     const std::vector<Sweep>& sweeps) {
    std::vector<ClaimBlock> out(sweeps.size());
    for (size_t s = 0; s < sweeps.size(); ++s) {
        out[s].name = sweeps[s].claim_name;
        out[s].rel = sweeps[s].rel;
        out[s].expected = sweeps[s].expected;
        out[s].cells.resize(deltas.size() * sweeps[s].cs.size());
    }
#pragma omp parallel for schedule(dynamic)
    for (int64_t di = 0; di < int64_t(deltas.size()); ++di) {
        uint32_t d = deltas[size_t(di)];
        FamilyInstance inst = build_family(F, id, m, d);
        ValueTable T = compile(F, inst.spec);
        for (size_t s = 0; s < sweeps.size(); ++s) {
            const auto& cs = sweeps[s].cs;
            // Claims of the form "uniformity == 1" dominate the grids; the
            // early-exit predicate settles those cells without tabulating,
            // and only a failing cell pays for the exact count.
            bool pcn_claim = sweeps[s].rel == Rel::Eq && sweeps[s].expected == 1;
            for (size_t ci = 0; ci < cs.size(); ++ci) {
                GridCell& cell = out[s].cells[size_t(di) * cs.size() + ci];
                cell.delta = F.elem_str(d);
                cell.c = F.elem_str(cs[ci]);
                cell.observed = pcn_claim && is_pcn(F, T, cs[ci])
                                    ? 1
                                    : int64_t(cdu_max(F, T, cs[ci]));
            }
        }
    }
    return out;
}

// Descriptive uniformity sweep (no assertion): histogram plus attained max.
Observation descriptive_sweep(const FieldCtx& F, FamilyId id, unsigned m,
                              const std::vector<uint32_t>& deltas,
                              const std::vector<uint32_t>& cs, const std::string& mode) {
    std::vector<uint32_t> u(deltas.size() * cs.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (int64_t di = 0; di < int64_t(deltas.size()); ++di) {
        FamilyInstance inst = build_family(F, id, m, deltas[size_t(di)]);
        ValueTable T = compile(F, inst.spec);
        for (size_t ci = 0; ci < cs.size(); ++ci)
            u[size_t(di) * cs.size() + ci] = cdu_max(F, T, cs[ci]);
    }
    std::map<uint32_t, uint64_t> hist;
    uint32_t mx = 0;
    for (uint32_t v : u) {
        hist[v]++;
        mx = std::max(mx, v);
    }
    ordered_json jh = ordered_json::object();
    for (const auto& [val, cnt] : hist) jh[std::to_string(val)] = cnt;
    ordered_json data;
    data["mode"] = mode;
    data["delta-count"] = deltas.size();
    data["c-count"] = cs.size();
    data["max"] = mx;
    data["uniformity-histogram"] = std::move(jh);
    return {"offsubfield-sweep", std::move(data)};
}

ordered_json elem_list(const FieldCtx& F, const std::vector<uint32_t>& xs, size_t cap = 64) {
    ordered_json a = ordered_json::array();
    for (size_t i = 0; i < xs.size() && i < cap; ++i) a.push_back(F.elem_str(xs[i]));
    return a;
}

}  // namespace

VerdictReport verify_zh31(int m) {
    if (m < 2 || m > 4) throw Error("zh31 driver: m must be in [2,4]");
    auto t0 = Clock::now();
    FieldCtx F = family_field(FamilyId::ZH31, unsigned(m));
    VerdictReport r = report_shell("zh31", F, m);

    std::vector<uint32_t> sub = F.subfield_elements(unsigned(m));
    std::vector<uint32_t> sub_c = without_one(sub);
    std::vector<uint32_t> off_c = complement_sorted(F, sub);

    // case 1: delta inside the subfield, unconditionally
    const std::vector<uint32_t>& case1 = sub;
    // case 2: delta outside, passing the trace and resolvent conditions
    std::vector<uint32_t> case2, rejected;
    for (uint32_t d : off_c) {
        FamilyInstance inst = build_zh31(F, unsigned(m), d);
        (inst.preconds_ok ? case2 : rejected).push_back(d);
    }

    auto c1 = sweep_family(F, FamilyId::ZH31, unsigned(m), case1,
                           {{"case1-subfield-pcn", Rel::Eq, 1, sub_c},
                            {"case1-offsubfield-apcn", Rel::Eq, 2, off_c}});
    auto c2 = sweep_family(F, FamilyId::ZH31, unsigned(m), case2,
                           {{"case2-subfield-pcn", Rel::Eq, 1, sub_c},
                            {"case2-offsubfield-bound", Rel::Le, 4, off_c}});

    int64_t mx = 0;
    const GridCell* mx_cell = nullptr;
    for (const auto& cell : c2[1].cells)
        if (cell.observed > mx) {
            mx = cell.observed;
            mx_cell = &cell;
        }

    r.claims = {c1[0], c1[1], c2[0], c2[1]};
    if (m == 3) {
        // the one m where attainment of the bound has a published witness
        r.claims.push_back({"case2-filter-nonempty",
                            Rel::Ge,
                            1,
                            {{"-", "-", int64_t(case2.size()), false}},
                            false});
        GridCell at = mx_cell ? *mx_cell : GridCell{"-", "-", 0, false};
        r.claims.push_back({"case2-offsubfield-max-attained", Rel::Eq, 4, {at}, false});
    }

    ordered_json qual;
    qual["count"] = case2.size();
    qual["deltas"] = elem_list(F, case2);
    if (case2.size() > 64) qual["truncated"] = true;
    r.observations.push_back({"case2-qualifying-deltas", std::move(qual)});
    if (mx_cell) {
        ordered_json jm;
        jm["max"] = mx;
        jm["witness-delta"] = mx_cell->delta;
        jm["witness-c"] = mx_cell->c;
        r.observations.push_back({"case2-offsubfield-max", std::move(jm)});
    }
    r.observations.push_back(
        {"offsubfield-delta-rejected", ordered_json{{"count", rejected.size()}}});

    r.finalize();
    r.runtime_ms = ms_since(t0);
    return r;
}

namespace {

// zh21 and wbz31 share the grid: no delta condition, assertion only on
// subfield c, off-subfield behaviour swept descriptively (full at m=2,
// a fixed 16x16 corner above that where the grid gets large).
VerdictReport verify_allc_family(FamilyId id, int m) {
    if (m != 2 && m != 4 && m != 5)
        throw Error(family_id_str(id) + " driver: m must be one of {2,4,5}");
    auto t0 = Clock::now();
    FieldCtx F = family_field(id, unsigned(m));
    VerdictReport r = report_shell(family_id_str(id), F, m);

    std::vector<uint32_t> sub = F.subfield_elements(unsigned(m));
    std::vector<uint32_t> sub_c = without_one(sub);
    std::vector<uint32_t> off_c = complement_sorted(F, sub);

    std::vector<uint32_t> deltas(F.q());
    for (uint32_t d = 0; d < F.q(); ++d) deltas[d] = d;

    auto claims =
        sweep_family(F, id, unsigned(m), deltas, {{"subfield-pcn", Rel::Eq, 1, sub_c}});
    r.claims = {claims[0]};

    if (m == 2) {
        r.observations.push_back(descriptive_sweep(F, id, unsigned(m), deltas, off_c, "full"));
    } else {
        std::vector<uint32_t> d16(deltas.begin(), deltas.begin() + 16);
        std::vector<uint32_t> c16(off_c.begin(), off_c.begin() + 16);
        r.observations.push_back(
            descriptive_sweep(F, id, unsigned(m), d16, c16, "first-16-by-16"));
    }

    r.finalize();
    r.runtime_ms = ms_since(t0);
    return r;
}

}  // namespace

VerdictReport verify_zh21(int m) { return verify_allc_family(FamilyId::ZH21, m); }

VerdictReport verify_wbz31(int m) { return verify_allc_family(FamilyId::WBZ31, m); }

VerdictReport verify_lwc8(int m) {
    if (m != 2 && m != 3) throw Error("lwc8 driver: m must be 2 or 3");
    auto t0 = Clock::now();
    FieldCtx F = family_field(FamilyId::LWC8, unsigned(m));
    VerdictReport r = report_shell("lwc8", F, m);

    std::vector<uint32_t> sub_c = without_one(F.subfield_elements(unsigned(m)));

    std::vector<uint32_t> qualifying, excluded;
    for (uint32_t d = 0; d < F.q(); ++d)
        (F.rel_trace(d, unsigned(m)) == 0 ? qualifying : excluded).push_back(d);

    auto claims = sweep_family(F, FamilyId::LWC8, unsigned(m), qualifying,
                               {{"subfield-pcn", Rel::Eq, 1, sub_c}});
    r.claims = {claims[0]};

    ordered_json jq;
    jq["count"] = qualifying.size();
    jq["complement-count"] = excluded.size();
    r.observations.push_back({"trace-zero-deltas", std::move(jq)});
    if (!excluded.empty()) {
        FamilyInstance inst = build_lwc8(F, unsigned(m), excluded.front());
        ordered_json je;
        je["delta"] = F.elem_str(excluded.front());
        je["precondition"] = inst.preconds.front().name;
        je["evidence"] = inst.preconds.front().evidence;
        r.observations.push_back({"excluded-delta-example", std::move(je)});
    }

    r.finalize();
    r.runtime_ms = ms_since(t0);
    return r;
}

VerdictReport verify_lwc10(int m) {
    if (m != 1 && m != 2) throw Error("lwc10 driver: m must be 1 or 2");
    auto t0 = Clock::now();
    FieldCtx F = family_field(FamilyId::LWC10, unsigned(m));
    VerdictReport r = report_shell("lwc10", F, m);

    std::vector<uint32_t> sub = F.subfield_elements(unsigned(m));
    std::vector<uint32_t> sub_c = without_one(sub);
    std::vector<uint32_t> off_c = complement_sorted(F, sub);

    // three delta classes: 1 - Tr(delta)^4 a nonzero square (asserted grid),
    // zero (boundary of the condition, swept descriptively), or a nonsquare
    std::vector<uint32_t> qualifying, boundary, nonsquare;
    for (uint32_t d = 0; d < F.q(); ++d) {
        FamilyInstance inst = build_lwc10(F, unsigned(m), d);
        bool nz_square = inst.preconds[1].holds;
        bool sq_or_zero = inst.preconds[0].holds;
        (nz_square ? qualifying : sq_or_zero ? boundary : nonsquare).push_back(d);
    }

    // Within the nonzero-square set the relative trace of delta splits the
    // behaviour: Tr != 0 gives the advertised uniformity-3 grid, while for
    // Tr == 0 the base t = X^(3^m) - X + delta keeps its values inside the
    // relative-trace-zero set, where t^(3^m+4) + t^5 vanishes identically --
    // the member IS the identity map and its off-subfield uniformity is 1.
    // The two subsets therefore carry separate claims.
    std::vector<uint32_t> qual_tr, qual_tr0;
    for (uint32_t d : qualifying)
        (F.rel_trace(d, unsigned(m)) != 0 ? qual_tr : qual_tr0).push_back(d);

    auto claims = sweep_family(F, FamilyId::LWC10, unsigned(m), qualifying,
                               {{"subfield-pcn", Rel::Eq, 1, sub_c}});
    auto claims_tr = sweep_family(F, FamilyId::LWC10, unsigned(m), qual_tr,
                                  {{"offsubfield-cdu-3-nonzero-trace", Rel::Eq, 3, off_c}});
    r.claims = {claims[0], claims_tr[0]};

    ClaimBlock collapse{"trace-zero-collapse-to-x", Rel::Eq, 1, {}, false};
    for (uint32_t d : qual_tr0) {
        FamilyInstance inst = build_lwc10(F, unsigned(m), d);
        ValueTable T = compile(F, inst.spec);
        bool is_x = true;
        for (uint32_t x = 0; x < F.q(); ++x) is_x = is_x && T.values[x] == x;
        collapse.cells.push_back({F.elem_str(d), "-", is_x ? 1 : 0, false});
    }
    r.claims.push_back(std::move(collapse));
    r.claims.push_back({"qualifying-nonempty",
                        Rel::Ge,
                        1,
                        {{"-", "-", int64_t(qualifying.size()), false}},
                        false});

    r.observations.push_back(
        {"delta-classes", ordered_json{{"qualifying", qualifying.size()},
                                       {"qualifying-nonzero-trace", qual_tr.size()},
                                       {"qualifying-trace-zero", qual_tr0.size()},
                                       {"square-zero", boundary.size()},
                                       {"nonsquare", nonsquare.size()}}});
    r.observations.push_back(
        {"trace-zero-qualifying-gap",
         ordered_json{{"deltas", elem_list(F, qual_tr0)},
                      {"offsubfield-uniformity", 1},
                      {"note", "these deltas pass the nonzero-square filter, but the member "
                               "reduces to X, so its off-subfield uniformity is 1, not 3"}}});

    // boundary deltas: no published claim; record what actually happens
    ordered_json jb = ordered_json::array();
    for (uint32_t d : boundary) {
        FamilyInstance inst = build_lwc10(F, unsigned(m), d);
        ValueTable T = compile(F, inst.spec);
        bool sub_pcn = true;
        for (uint32_t c : sub_c) sub_pcn = sub_pcn && cdu_max(F, T, c) == 1;
        uint32_t off_mx = 0;
        for (uint32_t c : off_c) off_mx = std::max(off_mx, cdu_max(F, T, c));
        jb.push_back(ordered_json{{"delta", F.elem_str(d)},
                                  {"permutation", is_permutation(T).is_permutation},
                                  {"subfield-pcn", sub_pcn},
                                  {"offsubfield-max", off_mx}});
    }
    r.observations.push_back({"square-zero-deltas", std::move(jb)});

    if (m == 2) {
        // A published worked example prints the formula with two different
        // deltas in one expression -- likely a typo for a single delta.
        // Run the formula as printed and both single-delta readings, and
        // report which ones reproduce the stated PcN set (the subfield
        // minus 1, stated basis-independently).
        uint32_t pm = 9;
        auto base = [&](uint32_t d) {
            FuncSpec b = FuncSpec::monomial(F, 1, pm);
            b.append(FuncSpec::monomial(F, F.neg(1), 1));
            b.append(FuncSpec::constant(F, d));
            return b;
        };
        uint32_t d10 = F.exp_of(10), d33 = F.exp_of(33);
        struct Reading {
            const char* name;
            uint32_t d1, d2;
        };
        const Reading readings[] = {
            {"as-printed-g10-g33", d10, d33}, {"uniform-g10", d10, d10}, {"uniform-g33", d33, d33}};

        std::vector<std::string> expected;
        for (uint32_t c : sub_c) expected.push_back(F.elem_str(c));

        ordered_json jr = ordered_json::array();
        for (const Reading& rd : readings) {
            FuncSpec spec = FuncSpec::composite_power(F, base(rd.d1), pm + 4);
            spec.append(FuncSpec::composite_power(F, base(rd.d2), 5));
            spec.append(FuncSpec::identity(F));
            ValueTable T = compile(F, spec);
            std::vector<std::string> pcn;
            for (uint32_t c = 0; c < F.q(); ++c)
                if (cdu_max(F, T, c) == 1) pcn.push_back(F.elem_str(c));
            jr.push_back(ordered_json{
                {"name", rd.name},
                {"delta1", F.elem_str(rd.d1)},
                {"delta2", F.elem_str(rd.d2)},
                {"delta1-qualifies", build_lwc10(F, unsigned(m), rd.d1).preconds[1].holds},
                {"delta2-qualifies", build_lwc10(F, unsigned(m), rd.d2).preconds[1].holds},
                {"permutation", is_permutation(T).is_permutation},
                {"pcn-set", pcn},
                {"matches-stated-set", pcn == expected}});
        }
        ordered_json jex;
        jex["stated-pcn-set"] = expected;
        jex["readings"] = std::move(jr);
        r.observations.push_back({"worked-example-readings", std::move(jex)});
    }

    r.finalize();
    r.runtime_ms = ms_since(t0);
    return r;
}

VerdictReport verify_bct_crosscheck() {
    auto t0 = Clock::now();
    FieldCtx F = FieldCtx::make(5, 3);
    VerdictReport r = report_shell("bct-crosscheck", F, 0);

    FuncSpec cube = FuncSpec::monomial(F, 1, 3);
    ValueTable T = compile(F, cube);
    uint32_t q = F.q();

    bool perm = is_permutation(T).is_permutation;
    uint32_t classical = cdu_max(F, T, 1);

    // max over a,b != 0 of the (-1)-differential table, computed entrywise
    uint32_t cneg = F.neg(1);
    uint32_t nd_max = 0, nd_a = 0, nd_b = 0;
    for (uint32_t a = 1; a < q; ++a)
        for (uint32_t b = 1; b < q; ++b) {
            uint32_t cnt = cddt_entry(F, T, cneg, a, b);
            if (cnt > nd_max) {
                nd_max = cnt;
                nd_a = a;
                nd_b = b;
            }
        }

    BctSummary bs = bct(F, T);

    r.observations.push_back({"permutation", ordered_json{{"holds", perm}}});
    r.observations.push_back({"classical-uniformity", ordered_json{{"value", classical}}});
    r.observations.push_back({"neg-ddt-max", ordered_json{{"value", nd_max},
                                                          {"witness-a", F.elem_str(nd_a)},
                                                          {"witness-b", F.elem_str(nd_b)}}});
    ordered_json jbct;
    jbct["value"] = bs.uniformity;
    if (!bs.witnesses.empty()) {
        jbct["witness-a"] = F.elem_str(bs.witnesses.front().first);
        jbct["witness-b"] = F.elem_str(bs.witnesses.front().second);
    }
    r.observations.push_back({"boomerang-uniformity", std::move(jbct)});

    // the equality is asserted only for a confirmed APN permutation; for
    // anything else it is a recorded comparison, not a gate
    if (perm && classical == 2) {
        r.claims.push_back({"bct-equals-negddt",
                            Rel::Eq,
                            int64_t(nd_max),
                            {{"x^3", F.elem_str(cneg), int64_t(bs.uniformity), false}},
                            false});
    } else {
        r.observations.push_back(
            {"equality-not-gated",
             ordered_json{{"reason", "cube map not confirmed APN bijective here"},
                          {"agrees", bs.uniformity == nd_max}}});
    }

    r.finalize();
    r.runtime_ms = ms_since(t0);
    return r;
}

VerdictReport verify_by_name(const std::string& name, int m) {
    if (name == "bct") return verify_bct_crosscheck();
    switch (family_id_from_str(name)) {
        case FamilyId::ZH31: return verify_zh31(m);
        case FamilyId::ZH21: return verify_zh21(m);
        case FamilyId::WBZ31: return verify_wbz31(m);
        case FamilyId::LWC8: return verify_lwc8(m);
        case FamilyId::LWC10: return verify_lwc10(m);
    }
    throw Error("unknown verification target: " + name);
}

RunAllResult run_all(const std::string& profile) {
    struct Job {
        const char* name;
        int m;
    };
    std::vector<Job> jobs;
    if (profile == "quick") {
        jobs = {{"zh31", 2}, {"zh21", 2}, {"wbz31", 2}, {"lwc8", 2}, {"lwc10", 1}, {"bct", 0}};
    } else if (profile == "full") {
        jobs = {{"zh31", 2},  {"zh31", 3},  {"zh21", 2},  {"zh21", 4}, {"zh21", 5},
                {"wbz31", 2}, {"wbz31", 4}, {"wbz31", 5}, {"lwc8", 2}, {"lwc8", 3},
                {"lwc10", 1}, {"lwc10", 2}, {"bct", 0}};
    } else {
        throw Error("unknown profile: " + profile + " (expected quick or full)");
    }
    RunAllResult out;
    out.profile = profile;
    out.pass = true;
    for (const Job& j : jobs) {
        out.reports.push_back(verify_by_name(j.name, j.m));
        out.pass = out.pass && out.reports.back().pass;
    }
    return out;
}

ordered_json run_all_json(const RunAllResult& r, bool include_runtime) {
    ordered_json j;
    j["profile"] = r.profile;
    j["pass"] = r.pass;
    ordered_json reps = ordered_json::array();
    for (const auto& rep : r.reports) reps.push_back(report_to_json(rep, include_runtime));
    j["reports"] = std::move(reps);
    return j;
}

}  // namespace ffa
