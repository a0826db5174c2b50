#pragma once

#include <string>
#include <vector>

#include "ffa/field.hpp"
#include "ffa/funcspec.hpp"

namespace ffa {

enum class FamilyId { ZH31, ZH21, WBZ31, LWC8, LWC10 };

std::string family_id_str(FamilyId id);
FamilyId family_id_from_str(const std::string& s);

struct PrecondItem {
    std::string name;
    bool holds = false;
    std::string evidence;
};

// A constructed family member: the symbolic spec plus the recorded
// precondition checks.  Construction never fails on a bad delta; failed
// preconditions just mean the bijectivity guarantee is off.
struct FamilyInstance {
    FamilyId id;
    unsigned m = 0;
    uint32_t delta = 0;
    FuncSpec spec;
    std::vector<PrecondItem> preconds;
    bool preconds_ok = false;
};

// F = (X^(2^m) + X + d)^(2^(2m-2) + 2^(m-2) + 1) + X on GF(2^(2m)), m >= 2.
FamilyInstance build_zh31(const FieldCtx& F, unsigned m, uint32_t delta);
// F = (X^(2^m) + X + d)^(3*2^(2m-2) + 2^(m-2)) + X on GF(2^(2m)), m >= 2, 3 does not divide m.
FamilyInstance build_zh21(const FieldCtx& F, unsigned m, uint32_t delta);
// F = (X^(2^m) + X + d)^(3*2^(m-2) + 2^(2m-2)) + X, conditions as zh21.
FamilyInstance build_wbz31(const FieldCtx& F, unsigned m, uint32_t delta);
// F = t^(2^(2m+1)+2^m) + t^(2^(2m)+2^(m+1)) + X, t = X^(2^m)+X+d, on GF(2^(3m)).
FamilyInstance build_lwc8(const FieldCtx& F, unsigned m, uint32_t delta);
// F = t^(3^m+4) + t^5 + X, t = X^(3^m) - X + d, on GF(3^(2m)).
FamilyInstance build_lwc10(const FieldCtx& F, unsigned m, uint32_t delta);

FamilyInstance build_family(const FieldCtx& F, FamilyId id, unsigned m, uint32_t delta);

// The field a family instance lives in, for CLI use when --field is absent.
FieldCtx family_field(FamilyId id, unsigned m);

}  // namespace ffa
