// Weights of formulas and of sets of formulas relative to a world.
//
// A formula weight lists, shell by shell from the innermost sphere outward,
// how many worlds satisfy the formula. Fewer satisfiers at the first
// differing shell means a higher (more implausible) weight.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cpcf/formula.h"
#include "cpcf/model.h"
#include "cpcf/tags.h"

namespace cpcf {

struct FormulaWeight {
  std::vector<std::uint32_t> counts;
  bool operator==(const FormulaWeight&) const = default;
};

// Member weights, heaviest first.
struct SetWeight {
  std::vector<FormulaWeight> parts;
  bool operator==(const SetWeight&) const = default;
};

FormulaWeight weight_of_extension(const Chain& chain, WorldSet ext);
FormulaWeight weight_of_formula(const SphereModel& m, WorldId x, const Formula& a, UpdateTag u);

// less: wa has strictly lower weight than wb. Throws std::invalid_argument
// when the lengths differ.
std::strong_ordering cmp_xel(const FormulaWeight& wa, const FormulaWeight& wb);

// greater: a is strictly more significant than b.
std::strong_ordering cmp_significance(const SphereModel& m, WorldId x, const Formula& a, const Formula& b,
                                      UpdateTag u);

SetWeight make_set_weight(std::vector<FormulaWeight> parts);
SetWeight weight_of_set(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u);

// Lexicographic over the descending lists; a proper prefix is lower.
std::strong_ordering cmp_lex(const SetWeight& wg, const SetWeight& wd);

std::string to_string(const FormulaWeight& w);
std::string to_string(const SetWeight& w);

}  // namespace cpcf
