#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffa/cdiff.hpp"
#include "ffa/cubic.hpp"
#include "ffa/families.hpp"
#include "ffa/field.hpp"
#include "ffa/funcspec.hpp"
#include "ffa/parallel.hpp"
#include "ffa/parse.hpp"
#include "ffa/report.hpp"
#include "ffa/walsh.hpp"

using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::string field_line;
    bool json = false;
    std::string csv_path;
    int threads = 0;
};

ffa::FieldCtx need_field(const GlobalOpts& g) {
    if (g.field_line.empty())
        throw ffa::Error("this command needs --field p,n[,c0,...,cn]");
    return ffa::FieldCtx::from_description(g.field_line);
}

std::ofstream open_csv(const GlobalOpts& g) {
    std::ofstream out(g.csv_path);
    if (!out) throw ffa::Error("cannot open CSV path: " + g.csv_path);
    return out;
}

void reject_csv(const GlobalOpts& g, const char* verb) {
    if (!g.csv_path.empty())
        throw ffa::Error(std::string(verb) + " has no CSV dump; drop --csv");
}

void emit(const GlobalOpts& g, const ordered_json& j) {
    if (g.json) std::cout << j.dump(2) << "\n";
}

std::string poly_str(const std::vector<uint8_t>& coeffs) {
    std::string s;
    for (int i = int(coeffs.size()) - 1; i >= 0; --i) {
        if (!coeffs[size_t(i)]) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(coeffs[0]);
            continue;
        }
        if (coeffs[size_t(i)] != 1) s += std::to_string(coeffs[size_t(i)]) + "*";
        s += i == 1 ? "X" : "X^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

ordered_json coords_json(const ffa::FieldCtx& F, uint32_t x) {
    ordered_json a = ordered_json::array();
    for (uint8_t d : F.coords(x)) a.push_back(d);
    return a;
}

// ---- field ----

int cmd_field(const GlobalOpts& g) {
    ffa::FieldCtx F = need_field(g);
    reject_csv(g, "field");
    std::vector<unsigned> degrees;
    for (unsigned m = 1; m <= F.n(); ++m)
        if (F.n() % m == 0) degrees.push_back(m);

    if (g.json) {
        ordered_json j;
        j["p"] = F.p();
        j["n"] = F.n();
        j["q"] = F.q();
        j["description"] = F.description();
        j["modulus"] = poly_str(F.modulus());
        ordered_json mc = ordered_json::array();
        for (uint8_t c : F.modulus()) mc.push_back(c);
        j["modulus-coeffs"] = std::move(mc);
        j["generator"] =
            ordered_json{{"packed", F.generator_raw()}, {"coords", coords_json(F, F.generator_raw())}};
        j["generator-trace"] = F.abs_trace(F.generator_raw());
        j["subfield-degrees"] = degrees;
        emit(g, j);
        return 0;
    }
    std::cout << "GF(" << F.p() << "^" << F.n() << ")  q = " << F.q() << "\n";
    std::cout << "description: " << F.description() << "\n";
    std::cout << "modulus: " << poly_str(F.modulus()) << "\n";
    std::cout << "generator: packed " << F.generator_raw() << ", coords [";
    auto gc = F.coords(F.generator_raw());
    for (size_t i = 0; i < gc.size(); ++i) std::cout << (i ? "," : "") << unsigned(gc[i]);
    std::cout << "]\n";
    std::cout << "trace(g) = " << F.abs_trace(F.generator_raw()) << "\n";
    std::cout << "subfield degrees:";
    for (unsigned m : degrees) std::cout << " " << m;
    std::cout << "\n";
    return 0;
}

// ---- func ----

int cmd_func(const GlobalOpts& g, const std::string& spec_text, const std::string& eval_at,
             bool table) {
    ffa::FieldCtx F = need_field(g);
    ffa::FuncSpec f = ffa::parse_funcspec(F, spec_text);
    ffa::ValueTable T = ffa::compile(F, f);
    ffa::PermutationCheck perm = ffa::is_permutation(T);

    if (!g.csv_path.empty()) {
        auto out = open_csv(g);
        out << "x,Fx\n";
        for (uint32_t x = 0; x < F.q(); ++x) out << x << "," << T.values[x] << "\n";
    }

    ordered_json j;
    j["spec"] = f.to_string(F);
    j["permutation"] = perm.is_permutation;
    if (!perm.is_permutation)
        j["collision"] = ordered_json{{"x1", F.elem_str(perm.x1)}, {"x2", F.elem_str(perm.x2)}};
    if (!eval_at.empty()) {
        uint32_t x = ffa::parse_elem(F, eval_at);
        uint32_t y = f.eval_raw(F, x);
        j["eval"] = ordered_json{{"x", F.elem_str(x)}, {"value", F.elem_str(y)},
                                 {"value-packed", y}};
    }
    if (g.json) {
        emit(g, j);
        return 0;
    }

    std::cout << "spec: " << j["spec"].get<std::string>() << "\n";
    std::cout << "permutation: " << (perm.is_permutation ? "yes" : "no") << "\n";
    if (!perm.is_permutation)
        std::cout << "  collision: F(" << F.elem_str(perm.x1) << ") = F(" << F.elem_str(perm.x2)
                  << ")\n";
    if (!eval_at.empty())
        std::cout << "F(" << j["eval"]["x"].get<std::string>()
                  << ") = " << j["eval"]["value"].get<std::string>() << "\n";
    if (table) {
        uint32_t shown = F.q();
        if (F.q() > 256 && g.csv_path.empty()) shown = 256;
        for (uint32_t x = 0; x < shown; ++x)
            std::cout << "  F(" << F.elem_str(x) << ") = " << F.elem_str(T.values[x]) << "\n";
        if (shown < F.q()) std::cout << "  ... truncated; use --csv for the full table\n";
    }
    return 0;
}

// ---- cubic ----

const char* branch_str(ffa::CubicVerdict::Branch b) {
    switch (b) {
        case ffa::CubicVerdict::Branch::UniqueByTrace: return "unique-root";
        case ffa::CubicVerdict::Branch::TripleByResolvent: return "three-roots";
        case ffa::CubicVerdict::Branch::NoRoots: return "no-roots";
    }
    return "?";
}

int cmd_cubic(const GlobalOpts& g, const std::string& a_text, bool with_roots) {
    ffa::FieldCtx F = need_field(g);
    reject_csv(g, "cubic");
    uint32_t a = ffa::parse_elem(F, a_text);
    ffa::CubicVerdict v = ffa::classify_cubic(F, a, with_roots);

    if (g.json) {
        ordered_json j;
        j["a"] = F.elem_str(a);
        j["branch"] = branch_str(v.branch);
        j["root-count"] = v.root_count;
        j["trace-criterion"] = v.trace_criterion;
        j["resolvent-zero"] = v.resolvent_zero;
        if (with_roots) {
            ordered_json roots = ordered_json::array();
            for (uint32_t r : v.roots) roots.push_back(F.elem_str(r));
            j["roots"] = std::move(roots);
        }
        emit(g, j);
        return 0;
    }
    std::cout << "X^3 + X + " << F.elem_str(a) << " over GF(2^" << F.n() << ")\n";
    std::cout << "branch: " << branch_str(v.branch) << "  root-count: " << v.root_count << "\n";
    std::cout << "trace-criterion: " << (v.trace_criterion ? "yes" : "no")
              << "  resolvent-zero: " << (v.resolvent_zero ? "yes" : "no") << "\n";
    if (with_roots) {
        std::cout << "roots:";
        for (uint32_t r : v.roots) std::cout << " " << F.elem_str(r);
        std::cout << "\n";
    }
    return 0;
}

// ---- walsh ----

ffa::PValuedTable prime_valued_table(const ffa::FieldCtx& F, const ffa::ValueTable& T) {
    ffa::PValuedTable f(F.q());
    for (uint32_t x = 0; x < F.q(); ++x) {
        if (T.values[x] >= F.p())
            throw ffa::Error(
                "walsh: the function is not GF(p)-valued at x = " + F.elem_str(x) +
                "; wrap it as Tr_1(...)");
        f[x] = uint8_t(T.values[x]);
    }
    return f;
}

ordered_json point_json(const ffa::FieldCtx& F, const ffa::WalshPoint& w) {
    ordered_json j;
    j["v"] = w.v;
    j["counts"] = w.counts;
    if (F.p() == 2) j["coeff"] = w.coeff2();
    j["mag-sq"] = w.mag_sq(F.p());
    return j;
}

int cmd_walsh(const GlobalOpts& g, const std::string& func_text, const std::string& v_text) {
    ffa::FieldCtx F = need_field(g);
    ffa::FuncSpec spec = ffa::parse_funcspec(F, func_text);
    ffa::PValuedTable f = prime_valued_table(F, ffa::compile(F, spec));

    std::vector<ffa::WalshPoint> pts;
    if (!v_text.empty()) {
        pts.push_back(ffa::walsh_point(F, f, ffa::parse_elem(F, v_text)));
    } else {
        pts = ffa::walsh_spectrum(F, f);
    }

    if (!g.csv_path.empty()) {
        auto out = open_csv(g);
        out << "v";
        for (unsigned r = 0; r < F.p(); ++r) out << ",count" << r;
        out << ",mag_sq\n";
        for (const auto& w : pts) {
            out << w.v;
            for (int64_t cnt : w.counts) out << "," << cnt;
            out << "," << w.mag_sq(F.p()) << "\n";
        }
    }

    if (g.json) {
        ordered_json j;
        j["func"] = spec.to_string(F);
        ordered_json arr = ordered_json::array();
        for (const auto& w : pts) arr.push_back(point_json(F, w));
        j["points"] = std::move(arr);
        emit(g, j);
        return 0;
    }

    std::cout << "f = " << spec.to_string(F) << "\n";
    if (pts.size() == 1 || F.q() <= 64) {
        for (const auto& w : pts) {
            std::cout << "v=" << F.elem_str(w.v) << "  counts:";
            for (int64_t cnt : w.counts) std::cout << " " << cnt;
            if (F.p() == 2) std::cout << "  W = " << w.coeff2();
            std::cout << "  |W|^2 = " << w.mag_sq(F.p()) << "\n";
        }
    } else {
        std::map<int64_t, uint64_t> hist;
        for (const auto& w : pts) hist[w.mag_sq(F.p())]++;
        std::cout << "|W|^2 histogram over " << pts.size() << " points:\n";
        for (const auto& [val, cnt] : hist) std::cout << "  " << val << " : " << cnt << "\n";
    }
    return 0;
}

// ---- cdu ----

std::vector<uint32_t> parse_c_spec(const ffa::FieldCtx& F, const std::string& spec) {
    if (spec == "all") {
        std::vector<uint32_t> cs(F.q());
        for (uint32_t c = 0; c < F.q(); ++c) cs[c] = c;
        return cs;
    }
    if (spec.rfind("subfield:", 0) == 0) {
        unsigned m = unsigned(std::stoul(spec.substr(9)));
        return F.subfield_elements(m);
    }
    return {ffa::parse_elem(F, spec)};
}

int cmd_cdu(const GlobalOpts& g, const std::string& func_text, const std::string& c_spec) {
    ffa::FieldCtx F = need_field(g);
    ffa::FuncSpec spec = ffa::parse_funcspec(F, func_text);
    ffa::ValueTable T = ffa::compile(F, spec);
    std::vector<uint32_t> cs = parse_c_spec(F, c_spec);

    std::ofstream csv;
    if (!g.csv_path.empty()) csv = open_csv(g);

    ordered_json arr = ordered_json::array();
    for (uint32_t c : cs) {
        ffa::CDdtSummary s = ffa::cdu(F, T, c);
        if (csv.is_open()) {
            std::vector<uint32_t> a_order;
            auto rows = ffa::cddt_rows(F, T, c, a_order);
            for (size_t i = 0; i < rows.size(); ++i) {
                csv << c << "," << a_order[i];
                for (uint32_t cnt : rows[i]) csv << "," << cnt;
                csv << "\n";
            }
        }
        if (g.json) {
            ordered_json j;
            j["c"] = F.elem_str(c);
            j["c-packed"] = c;
            j["uniformity"] = s.uniformity;
            j["classification"] = s.classification;
            j["excluded-a0"] = s.excluded_a0;
            ordered_json h = ordered_json::object();
            for (const auto& [val, cnt] : s.histogram) h[std::to_string(val)] = cnt;
            j["histogram"] = std::move(h);
            ordered_json w = ordered_json::array();
            for (const auto& [a, b] : s.witnesses)
                w.push_back(ordered_json{{"a", F.elem_str(a)}, {"b", F.elem_str(b)}});
            j["witnesses"] = std::move(w);
            arr.push_back(std::move(j));
        } else {
            std::cout << "c=" << F.elem_str(c) << "  uniformity=" << s.uniformity << "  ["
                      << s.classification << "]";
            if (!s.witnesses.empty()) {
                const auto& [a, b] = s.witnesses.front();
                std::cout << "  first witness (a,b)=(" << F.elem_str(a) << "," << F.elem_str(b)
                          << ")";
            }
            std::cout << "\n";
        }
    }
    if (g.json) emit(g, arr);
    return 0;
}

// ---- family ----

int cmd_family_build(const GlobalOpts& g, const std::string& id_text, int m,
                     const std::string& delta_text) {
    ffa::FamilyId id = ffa::family_id_from_str(id_text);
    ffa::FieldCtx F = g.field_line.empty() ? ffa::family_field(id, unsigned(m))
                                           : ffa::FieldCtx::from_description(g.field_line);
    reject_csv(g, "family");
    uint32_t delta = ffa::parse_elem(F, delta_text);
    ffa::FamilyInstance inst = ffa::build_family(F, id, unsigned(m), delta);
    ffa::PermutationCheck perm = ffa::is_permutation(ffa::compile(F, inst.spec));

    if (g.json) {
        ordered_json j;
        j["family"] = ffa::family_id_str(id);
        j["m"] = m;
        j["field"] = F.description();
        j["delta"] = F.elem_str(delta);
        j["spec"] = inst.spec.to_string(F);
        ordered_json pre = ordered_json::array();
        for (const auto& p : inst.preconds)
            pre.push_back(
                ordered_json{{"name", p.name}, {"holds", p.holds}, {"evidence", p.evidence}});
        j["preconditions"] = std::move(pre);
        j["preconditions-ok"] = inst.preconds_ok;
        j["permutation"] = perm.is_permutation;
        emit(g, j);
        return 0;
    }
    std::cout << "family " << ffa::family_id_str(id) << "  m=" << m << "  field "
              << F.description() << "\n";
    std::cout << "spec: " << inst.spec.to_string(F) << "\n";
    for (const auto& p : inst.preconds)
        std::cout << "precondition " << p.name << ": " << (p.holds ? "yes" : "no") << "  ("
                  << p.evidence << ")\n";
    std::cout << "preconditions: " << (inst.preconds_ok ? "satisfied" : "not satisfied") << "\n";
    std::cout << "permutation: " << (perm.is_permutation ? "yes" : "no") << "\n";
    return 0;
}

// ---- verify / run-all ----

void print_report_text(const ffa::VerdictReport& r) {
    std::cout << r.id << "  m=" << r.m << "  field " << r.field << "\n";
    for (const auto& cl : r.claims) {
        std::cout << "  claim " << cl.name << ": " << ffa::rel_str(cl.rel) << " " << cl.expected
                  << " over " << cl.cells.size() << " cell" << (cl.cells.size() == 1 ? "" : "s")
                  << ": " << (cl.pass ? "pass" : "FAIL") << "\n";
        if (!cl.pass) {
            size_t shown = 0;
            for (const auto& cell : cl.cells) {
                if (cell.pass) continue;
                std::cout << "    delta=" << cell.delta << " c=" << cell.c
                          << " observed=" << cell.observed << "\n";
                if (++shown == 8) break;
            }
        }
    }
    for (const auto& o : r.observations) std::cout << "  observation " << o.name << "\n";
    std::cout << "  runtime: " << r.runtime_ms << " ms\n";
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const GlobalOpts& g, const std::string& id_text, int m) {
    reject_csv(g, "verify");
    ffa::VerdictReport r = ffa::verify_by_name(id_text, m);
    if (g.json)
        emit(g, ffa::report_to_json(r, false));
    else
        print_report_text(r);
    return r.pass ? 0 : 1;
}

int cmd_run_all(const GlobalOpts& g, const std::string& profile) {
    reject_csv(g, "run-all");
    ffa::RunAllResult res = ffa::run_all(profile);
    if (g.json) {
        emit(g, ffa::run_all_json(res, false));
    } else {
        for (const auto& r : res.reports)
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " m=" << r.m << "  ("
                      << r.runtime_ms << " ms)\n";
        std::cout << (res.pass ? "PASS" : "FAIL") << "  profile=" << res.profile << "\n";
    }
    return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-field function analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--field", g.field_line, "field description p,n[,c0,...,cn]");
    app.add_flag("--json", g.json, "emit JSON");
    app.add_option("--csv", g.csv_path, "also write a CSV dump to this path");
    app.add_option("--threads", g.threads, "worker thread count")->envname("FFA_THREADS");

    auto* sc_field = app.add_subcommand("field", "describe a field");

    auto* sc_func = app.add_subcommand("func", "parse and test a function");
    std::string func_spec, func_eval;
    bool func_table = false;
    sc_func->add_option("--spec", func_spec, "function text")->required();
    sc_func->add_option("--eval", func_eval, "evaluate at this element");
    sc_func->add_flag("--table", func_table, "print the value table");

    auto* sc_cubic = app.add_subcommand("cubic", "classify X^3 + X + a over GF(2^n)");
    std::string cubic_a;
    bool cubic_no_roots = false;
    sc_cubic->add_option("--a", cubic_a, "the constant a")->required();
    sc_cubic->add_flag("--no-roots", cubic_no_roots, "skip the explicit root search");

    auto* sc_walsh = app.add_subcommand("walsh", "Walsh spectrum of a GF(p)-valued function");
    std::string walsh_func, walsh_v;
    sc_walsh->add_option("--func", walsh_func, "function text (GF(p)-valued)")->required();
    sc_walsh->add_option("--v", walsh_v, "single spectrum point");

    auto* sc_cdu = app.add_subcommand("cdu", "c-differential uniformity");
    std::string cdu_func, cdu_c = "all";
    sc_cdu->add_option("--func", cdu_func, "function text")->required();
    sc_cdu->add_option("--c", cdu_c, "c selector: all | subfield:m | element");

    auto* sc_family = app.add_subcommand("family", "permutation family constructions");
    sc_family->require_subcommand(1);
    auto* sc_build = sc_family->add_subcommand("build", "build one instance");
    std::string fam_id, fam_delta;
    int fam_m = 0;
    sc_build->add_option("--id", fam_id, "zh31|zh21|wbz31|lwc8|lwc10")->required();
    sc_build->add_option("--m", fam_m, "subfield degree")->required();
    sc_build->add_option("--delta", fam_delta, "the delta element")->required();

    auto* sc_verify = app.add_subcommand("verify", "run one verification driver");
    std::string ver_id;
    int ver_m = 2;
    sc_verify->add_option("--id", ver_id, "zh31|zh21|wbz31|lwc8|lwc10|bct")->required();
    sc_verify->add_option("--m", ver_m, "subfield degree (ignored for bct)");

    auto* sc_run_all = app.add_subcommand("run-all", "run every verification driver");
    std::string profile = "quick";
    sc_run_all->add_option("--profile", profile, "quick | full");

    CLI11_PARSE(app, argc, argv);

    ffa::set_threads(g.threads);

    try {
        if (sc_field->parsed()) return cmd_field(g);
        if (sc_func->parsed()) return cmd_func(g, func_spec, func_eval, func_table);
        if (sc_cubic->parsed()) return cmd_cubic(g, cubic_a, !cubic_no_roots);
        if (sc_walsh->parsed()) return cmd_walsh(g, walsh_func, walsh_v);
        if (sc_cdu->parsed()) return cmd_cdu(g, cdu_func, cdu_c);
        if (sc_family->parsed()) return cmd_family_build(g, fam_id, fam_m, fam_delta);
        if (sc_verify->parsed()) return cmd_verify(g, ver_id, ver_m);
        if (sc_run_all->parsed()) return cmd_run_all(g, profile);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
