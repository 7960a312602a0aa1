// Model-relative elimination of non-empty cp-sets. The result depends on
// the model and world it was built for and is only claimed to agree with
// the input at that world.

#pragma once

#include <cstddef>
#include <stdexcept>

#include "cpcf/formula.h"
#include "cpcf/model.h"
#include "cpcf/tags.h"

namespace cpcf {

class TranslateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Translation of a <=[g] b at (m, x) under the disagreement update. Requires
// modal-free cp-levels: cpl(a) = cpl(b) = 0 and g paired and non-empty.
Formula hat(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g);

struct StarStats {
  std::size_t replacements = 0;
  std::size_t rounds = 0;
};

// Replaces cp-plausibility nodes innermost first until no non-empty cp-set
// is left. Counterfactuals with a non-empty cp-set must be rewritten into
// plausibility form first. Tag i is rejected on weakly centered models.
Formula star(const SphereModel& m, WorldId x, const Formula& f, UpdateTag u = UpdateTag::d,
             StarStats* stats = nullptr);

}  // namespace cpcf
