#pragma once

#include <string>

#include "ffa/field.hpp"
#include "ffa/funcspec.hpp"

namespace ffa {

// Parses the textual function grammar (see docs/funcspec-grammar.md).
// Examples: "X^3", "(X^p3 + X + g^43)^19 + X", "Tr_2(X^5) + g^7*X".
FuncSpec parse_funcspec(const FieldCtx& F, const std::string& text);

// Parses one field element: "g^7", "g", "17", or "[1,0,1]".
uint32_t parse_elem(const FieldCtx& F, const std::string& text);

}  // namespace ffa
