#include "cpcf/translate.h"

#include <algorithm>

#include "cpcf/cpsets.h"
#include "cpcf/eval.h"
#include "cpcf/weights.h"

namespace cpcf {

namespace {

// Conjunction of the members of s that hold at x.
Formula forcing_conj(const SphereModel& m, WorldId x, const CpSet& s) {
  std::vector<Formula> parts;
  for (const auto& member : s)
    if (sat(m, x, member, UpdateTag::d)) parts.push_back(member);
  return big_conj(parts);
}

}  // namespace

Formula hat(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g) {
  if (cpl(a) != 0 || cpl(b) != 0) throw TranslateError("operands of the translated node contain cp-sets");
  if (g.empty()) throw TranslateError("hat needs a non-empty cp-set");
  if (!is_paired(g)) throw TranslateError("cp-set " + print(g) + " is not paired");
  for (const auto& member : g)
    if (cpl(member) != 0) throw TranslateError("cp-set member " + print(member) + " contains cp-sets");

  const std::vector<CpSet> lambdas = paired_subsets(g);
  std::vector<SetWeight> weights;
  std::vector<Formula> a_part, b_part;
  for (const auto& l : lambdas) {
    weights.push_back(weight_of_set(m, x, l, UpdateTag::d));
    const Formula agree = forcing_conj(m, x, set_difference(g, l));
    a_part.push_back(conj(a, agree));
    b_part.push_back(conj(b, agree));
  }

  std::vector<Formula> outer;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    std::vector<Formula> guards, options;
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      const auto c = cmp_lex(weights[j], weights[k]);
      if (c < 0) guards.push_back(neg(possibly(a_part[j])));
      if (c <= 0) options.push_back(a_part[j]);
    }
    outer.push_back(Formula::implies(big_conj(guards), Formula::plausibility(big_disj(options), CpSet{}, b_part[k])));
  }
  return big_conj(outer);
}

namespace {

struct Starrer {
  const SphereModel& m;
  WorldId x;
  StarStats stats;
  std::size_t depth = 0;

  Formula run(const Formula& f, std::size_t level) {
    switch (f.kind()) {
      case Kind::Atom:
      case Kind::Falsum:
        return f;
      case Kind::Implies:
        return Formula::implies(run(f.lhs(), level), run(f.rhs(), level));
      case Kind::Counterfactual:
        if (!f.cpset().empty())
          throw TranslateError("counterfactual " + print(f) + " has a cp-set; rewrite into plausibility form first");
        return Formula::counterfactual(run(f.lhs(), level), f.cpset(), run(f.rhs(), level));
      case Kind::Plausibility: {
        if (f.cpset().empty()) return Formula::plausibility(run(f.lhs(), level), f.cpset(), run(f.rhs(), level));
        for (const auto& member : f.cpset())
          if (cpl(member) != 0) throw TranslateError("cp-set member " + print(member) + " contains cp-sets");
        const Formula lhs = run(f.lhs(), level + 1);
        const Formula rhs = run(f.rhs(), level + 1);
        ++stats.replacements;
        depth = std::max(depth, level + 1);
        return hat(m, x, lhs, rhs, f.cpset());
      }
    }
    return f;
  }
};

}  // namespace

Formula star(const SphereModel& m, WorldId x, const Formula& f, UpdateTag u, StarStats* stats) {
  if (u == UpdateTag::i && m.centering() == Centering::Weak)
    throw TranslateError("translation under the implausibility update is not available on weakly centered models");
  if (x >= m.num_worlds()) throw std::out_of_range("unknown world");
  Starrer s{m, x, {}};
  Formula out = s.run(f, 0);
  s.stats.rounds = s.depth;
  if (stats) *stats = s.stats;
  return out;
}

}  // namespace cpcf
