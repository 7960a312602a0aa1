// Reference implementations used as test oracles. They follow the textbook
// definitions step by step and share nothing with the library beyond the
// model, formula and world-set types.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "cpcf/formula.h"
#include "cpcf/model.h"
#include "cpcf/tags.h"

namespace oracle {

using cpcf::Chain;
using cpcf::Formula;
using cpcf::Kind;
using cpcf::SphereModel;
using cpcf::UpdateTag;
using cpcf::WorldId;
using cpcf::WorldSet;

using Weight = std::vector<std::uint32_t>;
using SetWeight = std::vector<Weight>;

inline bool sat(const SphereModel& m, WorldId x, const Formula& f, UpdateTag u);

// Shell counts: the innermost sphere, then each growth step. A repeated
// sphere repeats the previous count.
inline Weight weight(const SphereModel& m, WorldId x, const Formula& f, UpdateTag u) {
  const Chain& c = m.spheres(x);
  Weight w;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0 && c[i] == c[i - 1]) {
      w.push_back(w.back());
      continue;
    }
    std::uint32_t n = 0;
    for (WorldId v = 0; v < m.num_worlds(); ++v) {
      const bool in_shell = c[i].contains(v) && (i == 0 || !c[i - 1].contains(v));
      if (in_shell && oracle::sat(m, v, f, u)) ++n;
    }
    w.push_back(n);
  }
  return w;
}

// -1 when a is strictly lighter than b, 0 when equal, 1 when heavier.
inline int compare_weight(const Weight& a, const Weight& b) {
  for (std::size_t l = 0; l < std::min(a.size(), b.size()); ++l) {
    if (a[l] != b[l]) return a[l] > b[l] ? -1 : 1;
  }
  return 0;
}

inline SetWeight set_weight(const SphereModel& m, WorldId x, const std::vector<Formula>& g, UpdateTag u) {
  SetWeight out;
  for (const auto& f : g) out.push_back(weight(m, x, f, u));
  // Heaviest first, by repeated selection.
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (compare_weight(out[j], out[best]) > 0) best = j;
    std::swap(out[i], out[best]);
  }
  return out;
}

inline int compare_set_weight(const SetWeight& a, const SetWeight& b) {
  for (std::size_t l = 0; l < std::min(a.size(), b.size()); ++l) {
    const int c = compare_weight(a[l], b[l]);
    if (c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

// Members of g selected per world by the update tag.
inline std::vector<Formula> relevant(const SphereModel& m, WorldId x, WorldId y, const std::vector<Formula>& g,
                                     UpdateTag u) {
  std::vector<Formula> out;
  for (const auto& f : g) {
    const bool at_y = oracle::sat(m, y, f, u);
    const bool keep = u == UpdateTag::i ? at_y : u == UpdateTag::a ? at_y == oracle::sat(m, x, f, u) : at_y != oracle::sat(m, x, f, u);
    if (keep) out.push_back(f);
  }
  return out;
}

// Sphere construction by weight thresholds, then refinement by original
// sphere inclusion, exactly as the update is stated.
inline Chain updated_chain(const SphereModel& m, WorldId x, const std::vector<Formula>& g, UpdateTag u) {
  const Chain& old = m.spheres(x);
  WorldSet reach;
  for (WorldSet s : old) reach |= s;
  const std::vector<WorldId> worlds = reach.members();
  std::vector<SetWeight> wy;
  for (WorldId y : worlds) wy.push_back(set_weight(m, x, relevant(m, x, y, g, u), u));

  // Thresholds in the order their spheres grow.
  std::vector<SetWeight> levels;
  for (const auto& w : wy) {
    bool seen = false;
    for (const auto& l : levels) seen = seen || compare_set_weight(l, w) == 0;
    if (!seen) levels.push_back(w);
  }
  const int dir = u == UpdateTag::a ? -1 : 1;
  std::sort(levels.begin(), levels.end(),
            [&](const SetWeight& l, const SetWeight& r) { return dir * compare_set_weight(l, r) < 0; });

  auto below = [&](WorldId y, WorldId yp) {  // every original sphere holding yp holds y
    for (WorldSet a : old)
      if (a.contains(yp) && !a.contains(y)) return false;
    return true;
  };

  std::set<std::uint64_t> spheres;
  WorldSet prev;
  for (const auto& n : levels) {
    WorldSet sigma;
    for (std::size_t k = 0; k < worlds.size(); ++k)
      if (dir * compare_set_weight(wy[k], n) <= 0) sigma.insert(worlds[k]);
    WorldSet cur = prev;
    while (cur != sigma) {
      const WorldSet rest = sigma - cur;
      WorldSet add;
      for (WorldId y : rest.members()) {
        bool all = true;
        for (WorldId yp : rest.members()) all = all && below(y, yp);
        if (all) add.insert(y);
      }
      cur |= add;
      spheres.insert(cur.bits());
    }
    prev = sigma;
  }
  Chain out;
  for (std::uint64_t b : spheres) out.push_back(WorldSet(b));
  std::sort(out.begin(), out.end(), [](WorldSet l, WorldSet r) { return l.size() < r.size(); });
  if (u == UpdateTag::i && m.centering() == cpcf::Centering::Weak) {
    for (WorldSet& s : out) s.insert(x);
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

inline bool lewis_would(const Chain& c, WorldSet a, WorldSet b) {
  for (WorldSet s : c) {
    if ((s & a).empty()) continue;
    return (s & a).subset_of(b);
  }
  return true;
}

inline bool lewis_plausible(const Chain& c, WorldSet a, WorldSet b) {
  for (WorldSet s : c)
    if (!(s & b).empty() && (s & a).empty()) return false;
  return true;
}

inline WorldSet ext(const SphereModel& m, const Formula& f, UpdateTag u) {
  WorldSet out;
  for (WorldId v = 0; v < m.num_worlds(); ++v)
    if (oracle::sat(m, v, f, u)) out.insert(v);
  return out;
}

// Every cp-operator rebuilds S(x) in the current model and evaluates its
// operands there.
inline bool sat(const SphereModel& m, WorldId x, const Formula& f, UpdateTag u) {
  switch (f.kind()) {
    case Kind::Atom: return m.valuation(f.name()).contains(x);
    case Kind::Falsum: return false;
    case Kind::Implies: return !oracle::sat(m, x, f.lhs(), u) || oracle::sat(m, x, f.rhs(), u);
    case Kind::Counterfactual:
    case Kind::Plausibility: {
      const SphereModel next = m.with_spheres(x, updated_chain(m, x, f.cpset().members(), u));
      const WorldSet a = ext(next, f.lhs(), u);
      const WorldSet b = ext(next, f.rhs(), u);
      const Chain& c = next.spheres(x);
      return f.kind() == Kind::Counterfactual ? lewis_would(c, a, b) : lewis_plausible(c, a, b);
    }
  }
  return false;
}

}  // namespace oracle
