#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ffa/field.hpp"

namespace ffa {

// One (delta, c) cell of a verification grid: the measured uniformity and
// whether it met the claim it was checked under.  Scalar claims (counts,
// attained maxima) use "-" for the slots that do not apply.
struct GridCell {
    std::string delta;
    std::string c;
    int64_t observed = 0;
    bool pass = false;
};

enum class Rel { Eq, Le, Ge };

std::string rel_str(Rel r);
Rel rel_from_str(const std::string& s);
bool rel_holds(Rel r, int64_t observed, int64_t expected);

// A single asserted statement: every cell's observed value must stand in
// `rel` to `expected`.
struct ClaimBlock {
    std::string name;
    Rel rel = Rel::Eq;
    int64_t expected = 0;
    std::vector<GridCell> cells;
    bool pass = false;
};

// Side measurement carried for the record but never gated on.
struct Observation {
    std::string name;
    nlohmann::ordered_json data;
};

// Outcome of one verification driver.  Reproducible bit for bit given the
// same field description line; the generator and modulus in use are stamped
// in so element names like g^43 are auditable.
struct VerdictReport {
    std::string id;
    std::string field;      // "p,n,c0,...,cn"
    std::string generator;  // elem_str of the generator
    std::vector<uint8_t> generator_coords;
    int m = 0;
    std::vector<ClaimBlock> claims;
    std::vector<Observation> observations;
    bool pass = false;       // conjunction over claims
    int64_t runtime_ms = 0;  // wall clock; excluded from canonical JSON

    void finalize();  // recompute claim passes and the top-level verdict
};

nlohmann::ordered_json report_to_json(const VerdictReport& r, bool include_runtime = false);
VerdictReport report_from_json(const nlohmann::ordered_json& j);

// Family-keyed verification drivers.  Each sweeps the published (delta, c)
// grid exhaustively over the family's field at subfield degree m, measures
// c-differential uniformity per cell and asserts the published behaviour;
// off-claim regions are swept descriptively into observations.
VerdictReport verify_zh31(int m);   // m in [2,4]: case split over delta
VerdictReport verify_zh21(int m);   // m in {2,4,5}: all delta, subfield c
VerdictReport verify_wbz31(int m);  // same grid shape as zh21
VerdictReport verify_lwc8(int m);   // m in {2,3}: trace-zero delta
VerdictReport verify_lwc10(int m);  // m in {1,2}: nonzero-square delta

// Cross-check of the c-differential machinery against an independently
// computed boomerang table for the cube map on GF(5^3).  The equality is
// asserted only once the suite itself confirms the map bijective with
// classical uniformity 2; otherwise everything is recorded as observation.
VerdictReport verify_bct_crosscheck();

// name is a family id ("zh31", ..., "lwc10") or "bct".
VerdictReport verify_by_name(const std::string& name, int m);

struct RunAllResult {
    std::string profile;
    std::vector<VerdictReport> reports;
    bool pass = false;
};

RunAllResult run_all(const std::string& profile);  // "quick" | "full"
nlohmann::ordered_json run_all_json(const RunAllResult& r, bool include_runtime = false);

}  // namespace ffa
