// Forcing, agreement and disagreement sets, paired subsets and the
// maximal cp-set.

#pragma once

#include <vector>

#include "cpcf/formula.h"
#include "cpcf/model.h"
#include "cpcf/tags.h"

namespace cpcf {

struct WorldProfile {
  WorldId world;
  CpSet forcing;
  CpSet agreement;
  CpSet disagreement;
};

WorldProfile profile(const SphereModel& m, WorldId x, WorldId y, const CpSet& g, UpdateTag u);
CpSet forcing_complement(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u);

// Throws std::invalid_argument for a non-paired set. Subsets are listed by
// increasing bitmask over the dual pairs, starting with the empty set.
std::vector<CpSet> paired_subsets(const CpSet& g);

// Members grouped as (A, dual A) with A the lexically first of the two.
std::vector<std::pair<Formula, Formula>> dual_pairs(const CpSet& g);

// How to treat a dual pair of equal weight: Definition keeps the member
// that x falsifies, BothMembers keeps the pair.
enum class TieRule { Definition, BothMembers };

CpSet maximal_cp_set(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u,
                     TieRule tie = TieRule::Definition);

CpSet set_union(const CpSet& a, const CpSet& b);
CpSet set_difference(const CpSet& a, const CpSet& b);
bool is_subset(const CpSet& a, const CpSet& b);

}  // namespace cpcf
