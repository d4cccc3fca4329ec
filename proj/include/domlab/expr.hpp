#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "domlab/abelian.hpp"
#include "domlab/free_group.hpp"

namespace domlab {

/// Result of parsing a group expression.
using GroupExpression = std::variant<AbelianGroup, FreeGroup>;

/// Parses the group grammar (whitespace-insensitive):
///   expr := sum | free | "1"
///   sum  := term ("+" term)*
///   term := "Z" ("_" INT)? ("^" INT)?   Z infinite cyclic, Z_m cyclic of
///                                       order m >= 2 (composites split and
///                                       canonicalized), ^k multiplicity
///   free := "F" "_" INT                 free group, rank >= 0
///   "1"  := the trivial group (stands alone only)
/// Abelian results come back canonicalized. Throws SyntaxError (with byte
/// position) for malformed text; ValueError for Z_0, Z_1, ^0, a modulus
/// above 2^63-1 or a free rank above 2^31-1. Free terms inside sums are
/// rejected.
GroupExpression parse_expression(std::string_view text);

/// Canonical display form; reparsing yields an equal expression.
std::string render(const GroupExpression& g);

}  // namespace domlab
