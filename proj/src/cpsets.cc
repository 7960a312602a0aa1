#include "cpcf/cpsets.h"

#include <algorithm>
#include <stdexcept>

#include "cpcf/eval.h"
#include "cpcf/weights.h"

namespace cpcf {

WorldProfile profile(const SphereModel& m, WorldId x, WorldId y, const CpSet& g, UpdateTag u) {
  if (x >= m.num_worlds() || y >= m.num_worlds()) throw std::out_of_range("unknown world");
  std::vector<Formula> forcing, agree, disagree;
  for (const auto& member : g) {
    const bool at_y = sat(m, y, member, u);
    const bool at_x = sat(m, x, member, u);
    if (at_y) forcing.push_back(member);
    (at_x == at_y ? agree : disagree).push_back(member);
  }
  return {y, CpSet(std::move(forcing)), CpSet(std::move(agree)), CpSet(std::move(disagree))};
}

CpSet forcing_complement(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u) {
  std::vector<Formula> out;
  for (const auto& member : g)
    if (!sat(m, x, member, u)) out.push_back(member);
  return CpSet(std::move(out));
}

std::vector<std::pair<Formula, Formula>> dual_pairs(const CpSet& g) {
  if (!is_paired(g)) throw std::invalid_argument("cp-set " + print(g) + " is not paired");
  std::vector<std::pair<Formula, Formula>> pairs;
  std::vector<bool> used(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Formula d = dual(g[i]);
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!used[j] && g[j] == d) {
        used[j] = true;
        break;
      }
    }
    pairs.emplace_back(g[i], d);
  }
  return pairs;
}

std::vector<CpSet> paired_subsets(const CpSet& g) {
  const auto pairs = dual_pairs(g);
  if (pairs.size() >= 20) throw std::invalid_argument("cp-set too large for subset enumeration");
  std::vector<CpSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<Formula> members;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) {
        members.push_back(pairs[k].first);
        members.push_back(pairs[k].second);
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

CpSet maximal_cp_set(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u, TieRule tie) {
  std::vector<Formula> out;
  for (const auto& [a, abar] : dual_pairs(g)) {
    const auto c = cmp_xel(weight_of_formula(m, x, abar, u), weight_of_formula(m, x, a, u));
    if (c < 0) {
      out.push_back(a);
    } else if (c > 0) {
      out.push_back(abar);
    } else if (tie == TieRule::BothMembers) {
      out.push_back(a);
      out.push_back(abar);
    } else {
      out.push_back(sat(m, x, abar, u) ? a : abar);
    }
  }
  return CpSet(std::move(out));
}

CpSet set_union(const CpSet& a, const CpSet& b) {
  std::vector<Formula> v = a.members();
  v.insert(v.end(), b.begin(), b.end());
  return CpSet(std::move(v));
}

CpSet set_difference(const CpSet& a, const CpSet& b) {
  std::vector<Formula> v;
  for (const auto& f : a)
    if (!b.contains(f)) v.push_back(f);
  return CpSet(std::move(v));
}

bool is_subset(const CpSet& a, const CpSet& b) {
  return std::all_of(a.begin(), a.end(), [&](const Formula& f) { return b.contains(f); });
}

}  // namespace cpcf
