#pragma once

#include "sv/variety.hpp"

#include <string>

namespace sv {

// Textual surface syntax.
//
// Variety:   n=<int>(,<int>)*;k=<int>(,<int>)*          e.g.  n=2,1;k=1,2
// Sheaf:     expr   := term ("+" term)*
//            term   := [mult "*"] atom        (mult a positive integer)
//            atom   := factor ("x" factor)*
//            factor := "O" "(" int ")"  |  "Om" "(" "a=" int ";" "t=" int ")"
// Whitespace is allowed between tokens.  Sheaf parsing needs the variety for
// the per-slot ambient dimensions and checks arity and form-index ranges.
// All syntax problems raise ParseError carrying the byte offset.

SegreVeronese parse_variety(const std::string& text);
FormalSheaf parse_sheaf(const std::string& text, const SegreVeronese& X);

std::string print_variety(const SegreVeronese& X);
std::string print_factor(const FactorSheaf& f); // O(t) when p = 0, else Om(a=p;t=t)
std::string print_atom(const BoxAtom& a);
std::string print_sheaf(const FormalSheaf& V);

} // namespace sv
