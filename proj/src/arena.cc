#include "cpcf/arena.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

#include "cpcf/eval.h"
#include "cpcf/update.h"

namespace cpcf {

namespace {

// Plain satisfaction; the arena never meets non-empty cp-sets inside
// operands of the comparison rows, and the tag is irrelevant otherwise.
WorldSet ext_of(const SphereModel& m, const Formula& f, WorldSet where) {
  return extension(m, f, UpdateTag::d, where);
}

struct Agreement {
  WorldSet reach;
  std::vector<std::uint64_t> agree;  // bitmask over cp-set members, per world id
};

Agreement agreement_masks(const SphereModel& m, WorldId x, const CpSet& g) {
  if (g.size() > 64) throw std::invalid_argument("cp-set too large");
  Agreement out;
  out.reach = m.reach(x);
  out.agree.assign(m.num_worlds(), 0);
  const WorldSet where = out.reach | WorldSet::single(x);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const WorldSet e = ext_of(m, g[k], where);
    for (WorldId y : out.reach.members()) {
      if (e.contains(y) == e.contains(x)) out.agree[y] |= std::uint64_t{1} << k;
    }
  }
  return out;
}

Chain chain_from_keys(const std::vector<WorldId>& order, const std::function<bool(WorldId, WorldId)>& strictly_before) {
  Chain out;
  WorldSet acc;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && strictly_before(order[i - 1], order[i])) out.push_back(acc);
    acc.insert(order[i]);
  }
  if (!acc.empty()) out.push_back(acc);
  return out;
}

}  // namespace

bool eval_strict(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g) {
  const Agreement ag = agreement_masks(m, x, g);
  const std::uint64_t full = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
  WorldSet candidates;
  for (WorldId y : ag.reach.members())
    if (ag.agree[y] == full) candidates.insert(y);
  Chain chain;
  for (WorldSet s : m.spheres(x)) {
    WorldSet r = s & candidates;
    if (!r.empty() && (chain.empty() || chain.back() != r)) chain.push_back(r);
  }
  return lewis_counterfactual(chain, ext_of(m, a, candidates), ext_of(m, b, candidates));
}

Chain naive_counting_chain(const SphereModel& m, WorldId x, const CpSet& g) {
  const Agreement ag = agreement_masks(m, x, g);
  auto key = [&](WorldId y) { return std::make_pair(-std::popcount(ag.agree[y]), m.rank(x, y)); };
  std::vector<WorldId> order = ag.reach.members();
  std::stable_sort(order.begin(), order.end(), [&](WorldId l, WorldId r) { return key(l) < key(r); });
  return chain_from_keys(order, [&](WorldId l, WorldId r) { return key(l) < key(r); });
}

bool eval_naive_counting(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g) {
  const Chain chain = naive_counting_chain(m, x, g);
  const WorldSet reach = m.reach(x);
  return lewis_counterfactual(chain, ext_of(m, a, reach), ext_of(m, b, reach));
}

bool eval_maximal_supersets(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g) {
  const Agreement ag = agreement_masks(m, x, g);
  auto leq = [&](WorldId y, WorldId v) {
    const std::uint64_t ay = ag.agree[y], av = ag.agree[v];
    if (ay == av) return m.rank(x, y) <= m.rank(x, v);
    return (av & ~ay) == 0;  // A(v) strictly inside A(y)
  };
  const WorldSet ea = ext_of(m, a, ag.reach);
  const WorldSet eb = ext_of(m, b, ag.reach);
  const auto a_worlds = ea.members();
  for (WorldId w : a_worlds) {
    bool found = false;
    for (WorldId v : a_worlds) {
      if (!leq(v, w)) continue;
      bool all_b = true;
      for (WorldId z : a_worlds) {
        if (leq(z, v) && !eb.contains(z)) {
          all_b = false;
          break;
        }
      }
      if (all_b) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool eval_disagreement(const SphereModel& m, WorldId x, const Formula& a, const Formula& b, const CpSet& g) {
  const Chain chain = updated_chain(m, x, g, UpdateTag::d);
  const SphereModel next = m.with_spheres(x, chain);
  WorldSet reach;
  for (WorldSet s : chain) reach |= s;
  return lewis_counterfactual(chain, ext_of(next, a, reach), ext_of(next, b, reach));
}

std::vector<ComparisonRow> comparison_table(const SphereModel& m, WorldId x, const std::vector<ComparisonRow>& rows) {
  std::vector<ComparisonRow> out;
  for (ComparisonRow r : rows) {
    r.cp = eval_strict(m, x, r.antecedent, r.consequent, r.cpset);
    r.nc = eval_naive_counting(m, x, r.antecedent, r.consequent, r.cpset);
    r.ms = eval_maximal_supersets(m, x, r.antecedent, r.consequent, r.cpset);
    r.paired = is_paired(r.cpset);
    r.dis = r.paired ? sat(m, x, Formula::counterfactual(r.antecedent, r.cpset, r.consequent), UpdateTag::d)
                     : eval_disagreement(m, x, r.antecedent, r.consequent, r.cpset);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_comparison_table(const std::vector<ComparisonRow>& rows) {
  auto tf = [](bool v) { return v ? "true" : "false"; };
  std::string out = "counterfactual\tCP\tNC\tMS\tDIS\n";
  for (const auto& r : rows) {
    out += print(Formula::counterfactual(r.antecedent, r.cpset, r.consequent)) + "\t" + tf(r.cp) + "\t" + tf(r.nc) +
           "\t" + tf(r.ms) + "\t" + tf(r.dis) + (r.paired ? "" : " (unpaired)") + "\n";
  }
  return out;
}

NcDemoReport nc_as_agreement_demo(const SphereModel& m, WorldId x, const CpSet& g,
                                  const std::vector<std::pair<Formula, Formula>>& formulas) {
  std::set<std::string> atoms;
  for (const auto& member : g) {
    const Formula& core = member.is_negation() ? member.negated() : member;
    if (core.kind() != Kind::Atom) throw std::invalid_argument("companion worlds need a cp-set of literals");
    atoms.insert(core.name());
  }
  if (!is_paired(g)) throw std::invalid_argument("cp-set " + print(g) + " is not paired");

  const std::size_t n = m.num_worlds();
  const WorldSet reach = m.reach(x);
  const auto originals = reach.members();
  if (n + originals.size() > kMaxWorlds) throw std::invalid_argument("model too large for companion worlds");

  // Companion of the k-th reachable world gets id n + k.
  std::vector<std::string> names = m.world_names();
  std::vector<WorldId> companion(n, 0);
  for (std::size_t k = 0; k < originals.size(); ++k) {
    companion[originals[k]] = static_cast<WorldId>(n + k);
    names.push_back(m.world_name(originals[k]) + "~");
  }
  std::map<std::string, WorldSet> val;
  for (const auto& [atom, ext] : m.valuation()) {
    WorldSet e = ext;
    for (WorldId v : originals) {
      if (ext.contains(v) != static_cast<bool>(atoms.count(atom))) e.insert(companion[v]);
    }
    val[atom] = e;
  }
  for (const auto& atom : atoms) {
    if (!val.count(atom)) {
      WorldSet e;
      for (WorldId v : originals) e.insert(companion[v]);
      val[atom] = e;
    }
  }
  std::vector<Chain> systems = m.systems();
  for (WorldSet& s : systems[x]) {
    for (WorldId v : s.members()) s.insert(companion[v]);
  }
  for (std::size_t k = 0; k < originals.size(); ++k) systems.push_back({WorldSet::single(static_cast<WorldId>(n + k))});

  NcDemoReport rep{SphereModel(std::move(names), std::move(val), std::move(systems), Centering::Weak), {}, {}, false,
                   {}, true};
  const SphereModel& aug = rep.augmented;

  std::vector<WorldSet> member_ext;
  for (const auto& member : g) member_ext.push_back(ext_of(aug, member, aug.reach(x)));
  const Chain full = rank_chain(aug.spheres(x), x, member_ext, UpdateTag::a, Centering::Weak);
  for (WorldSet s : full) {
    WorldSet r = s & reach;
    if (!r.empty() && (rep.agreement_chain.empty() || rep.agreement_chain.back() != r)) rep.agreement_chain.push_back(r);
  }
  rep.naive_chain = naive_counting_chain(m, x, g);
  rep.chains_equal = rep.naive_chain == rep.agreement_chain;
  for (const auto& [a, b] : formulas) {
    const bool nc = eval_naive_counting(m, x, a, b, g);
    const bool ag = lewis_counterfactual(rep.agreement_chain, ext_of(m, a, reach), ext_of(m, b, reach));
    rep.verdicts.emplace_back(nc, ag);
    rep.verdicts_equal = rep.verdicts_equal && nc == ag;
  }
  return rep;
}

}  // namespace cpcf
