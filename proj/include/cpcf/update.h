// Implausibility, agreement and disagreement updates of S(x).

#pragma once

#include <vector>

#include "cpcf/formula.h"
#include "cpcf/model.h"
#include "cpcf/tags.h"
#include "cpcf/weights.h"

namespace cpcf {

struct RankRow {
  WorldId world;
  std::vector<std::size_t> relevant;  // indices into the cp-set members
  SetWeight weight;
  std::size_t origrank;
  std::size_t level;
};

struct UpdateTrace {
  std::vector<Formula> members;
  std::vector<RankRow> rows;  // in final rank order
  Chain chain;
  bool x_forced = false;  // weakly centered i-update moved x inward
};

// Core ranking on extensions. member_ext[k] holds the worlds satisfying the
// k-th cp-set member; only worlds of S(x) and x itself are consulted.
Chain rank_chain(const Chain& chain, WorldId x, const std::vector<WorldSet>& member_ext, UpdateTag u,
                 Centering centering, UpdateTrace* trace = nullptr);

// Pairedness is not checked here; evaluation checks it.
SphereModel update(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u);
Chain updated_chain(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u);
UpdateTrace update_trace(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u);

std::string format_update_trace(const SphereModel& m, const UpdateTrace& t, UpdateTag u);

}  // namespace cpcf
