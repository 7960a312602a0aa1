// Rival ways to prioritise worlds for a cp-counterfactual: strict ceteris
// paribus, naive counting and maximal supersets. Operands and cp-set members
// are evaluated at worlds of the given model; none of these evaluators
// require the cp-set to be paired.

#pragma once

#include <vector>

#include "cpcf/formula.h"
#include "cpcf/model.h"

namespace cpcf {

bool eval_strict(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g);
bool eval_naive_counting(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g);
bool eval_maximal_supersets(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g);
// Disagreement update followed by the Lewis clause, without a pairing check.
bool eval_disagreement(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g);

Chain naive_counting_chain(const SphereModel& m, WorldId x, const CpSet& g);

struct ComparisonRow {
  Formula antecedent;
  Formula consequent;
  CpSet cpset;
  bool cp = false;
  bool nc = false;
  bool ms = false;
  bool dis = false;
  bool paired = true;
};

std::vector<ComparisonRow> comparison_table(const SphereModel& m, WorldId x,
                                            const std::vector<ComparisonRow>& rows);
std::string format_comparison_table(const std::vector<ComparisonRow>& rows);

struct NcDemoReport {
  SphereModel augmented;
  Chain naive_chain;
  Chain agreement_chain;  // restricted to the original worlds
  bool chains_equal = false;
  std::vector<std::pair<bool, bool>> verdicts;  // (naive counting, agreement) per formula pair
  bool verdicts_equal = true;
};

// Requires a paired cp-set of literals.
NcDemoReport nc_as_agreement_demo(const SphereModel& m, WorldId x, const CpSet& g,
                                  const std::vector<std::pair<Formula, Formula>>& formulas = {});

}  // namespace cpcf
