#include "cpcf/eval.h"

#include "cpcf/update.h"

namespace cpcf {

bool lewis_counterfactual(const Chain& chain, WorldSet a, WorldSet b) {
  for (WorldSet sphere : chain) {
    WorldSet hits = sphere & a;
    if (!hits.empty()) return hits.subset_of(b);
  }
  return true;
}

bool lewis_plausibility(const Chain& chain, WorldSet a, WorldSet b) {
  for (WorldSet sphere : chain) {
    if (sphere.intersects(b) && !sphere.intersects(a)) return false;
  }
  return true;
}

namespace {

[[noreturn]] void unpaired(const CpSet& g) { throw EvalError("cp-set " + print(g) + " is not paired"); }

class Pointwise {
 public:
  Pointwise(UpdateTag u, Variant v) : u_(u), v_(v) {}

  bool sat(const SphereModel& m, WorldId x, const Formula& f, EvalStep* t) {
    if (x >= m.num_worlds()) throw std::out_of_range("unknown world");
    if (t) {
      t->world = x;
      t->formula = print(f);
      t->generation = m.generation();
    }
    bool verdict = false;
    switch (f.kind()) {
      case Kind::Atom:
        verdict = m.valuation(f.name()).contains(x);
        break;
      case Kind::Falsum:
        verdict = false;
        break;
      case Kind::Implies:
        verdict = !sat(m, x, f.lhs(), child(t)) || sat(m, x, f.rhs(), child(t));
        break;
      case Kind::Counterfactual:
      case Kind::Plausibility:
        verdict = modal(m, x, f, t);
        break;
    }
    if (t) t->verdict = verdict;
    return verdict;
  }

  WorldSet ext(const SphereModel& m, const Formula& f, WorldSet where, EvalStep* t) {
    WorldSet out;
    for (WorldId y : where.members()) {
      if (sat(m, y, f, child(t))) out.insert(y);
    }
    return out;
  }

  Chain updated(const SphereModel& m, WorldId x, const CpSet& g) {
    const WorldSet where = m.reach(x) | WorldSet::single(x);
    std::vector<WorldSet> member_ext;
    for (const auto& member : g) member_ext.push_back(ext(m, member, where, nullptr));
    return rank_chain(m.spheres(x), x, member_ext, u_, m.centering());
  }

 private:
  static EvalStep* child(EvalStep* t) {
    if (!t) return nullptr;
    t->children.emplace_back();
    return &t->children.back();
  }

  bool modal(const SphereModel& m, WorldId x, const Formula& f, EvalStep* t) {
    const CpSet& g = f.cpset();
    if (!g.empty() && !is_paired(g)) unpaired(g);

    SphereModel inner = m;
    Chain chain = m.spheres(x);
    if (!g.empty()) {
      switch (v_) {
        case Variant::a:
          chain = updated(m, x, g);
          break;
        case Variant::b:
          inner = m.with_spheres(x, updated(m, x, g));
          chain = inner.spheres(x);
          break;
        case Variant::c: {
          std::vector<Chain> systems;
          for (WorldId y = 0; y < m.num_worlds(); ++y) systems.push_back(updated(m, y, g));
          inner = m.with_systems(std::move(systems));
          chain = inner.spheres(x);
          break;
        }
      }
      if (t) {
        t->note = std::string("update ") + to_string(u_) + " by " + print(g) + ", variant " + to_string(v_) +
                  ", operands in generation " + std::to_string(inner.generation());
      }
    }
    if (t) t->spheres = chain;

    WorldSet reach;
    for (WorldSet s : chain) reach |= s;
    // Worlds outside every sphere never matter to the clause.
    const WorldSet ea = ext(inner, f.lhs(), reach, t);
    const WorldSet eb = ext(inner, f.rhs(), reach, t);
    return f.kind() == Kind::Counterfactual ? lewis_counterfactual(chain, ea, eb) : lewis_plausibility(chain, ea, eb);
  }

  UpdateTag u_;
  Variant v_;
};

void format_step(const SphereModel& m, const EvalStep& s, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += "@" + (s.world < m.num_worlds() ? m.world_name(s.world) : std::to_string(s.world)) + " " + s.formula +
         " : " + (s.verdict ? "true" : "false") + "  [gen " + std::to_string(s.generation) + "]";
  if (!s.spheres.empty()) out += "  spheres " + format_chain(m, s.spheres);
  if (!s.note.empty()) out += "  (" + s.note + ")";
  out += '\n';
  for (const auto& c : s.children) format_step(m, c, depth + 1, out);
}

}  // namespace

bool sat(const SphereModel& m, WorldId x, const Formula& f, UpdateTag u, EvalStep* trace) {
  return Pointwise(u, Variant::b).sat(m, x, f, trace);
}

bool sat_variant(const SphereModel& m, WorldId x, const Formula& f, UpdateTag u, Variant v, EvalStep* trace) {
  return Pointwise(u, v).sat(m, x, f, trace);
}

bool valid_in_model(const SphereModel& m, const Formula& f, UpdateTag u) {
  Pointwise p(u, Variant::b);
  for (WorldId x = 0; x < m.num_worlds(); ++x) {
    if (!p.sat(m, x, f, nullptr)) return false;
  }
  return true;
}

WorldSet extension(const SphereModel& m, const Formula& f, UpdateTag u, WorldSet where) {
  return Pointwise(u, Variant::b).ext(m, f, where, nullptr);
}

std::string format_trace(const SphereModel& m, const EvalStep& step) {
  std::string out;
  format_step(m, step, 0, out);
  return out;
}

// {{{ ExtensionEvaluator

bool ExtensionEvaluator::modal_free(const Formula& f) {
  auto it = modal_free_.find(f.node());
  if (it != modal_free_.end()) return it->second.first;
  const bool free = modal_depth(f) == 0;
  modal_free_.emplace(f.node(), std::make_pair(free, f));
  return free;
}

WorldSet ExtensionEvaluator::extension(const SphereModel& m, const Formula& f) {
  const Key key{m.generation(), f.node()};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.ext;

  const WorldSet all = m.worlds();
  WorldSet out;
  switch (f.kind()) {
    case Kind::Atom:
      out = m.valuation(f.name()) & all;
      break;
    case Kind::Falsum:
      break;
    case Kind::Implies:
      out = (all - extension(m, f.lhs())) | extension(m, f.rhs());
      break;
    case Kind::Counterfactual:
    case Kind::Plausibility: {
      const CpSet& g = f.cpset();
      const bool cf = f.kind() == Kind::Counterfactual;
      auto clause = [cf](const Chain& c, WorldSet a, WorldSet b) {
        return cf ? lewis_counterfactual(c, a, b) : lewis_plausibility(c, a, b);
      };
      if (g.empty()) {
        const WorldSet ea = extension(m, f.lhs()), eb = extension(m, f.rhs());
        for (WorldId y = 0; y < m.num_worlds(); ++y)
          if (clause(m.spheres(y), ea, eb)) out.insert(y);
        break;
      }
      if (!is_paired(g)) unpaired(g);
      std::vector<WorldSet> member_ext;
      for (const auto& member : g) member_ext.push_back(extension(m, member));
      const bool flat = modal_free(f.lhs()) && modal_free(f.rhs());
      WorldSet ea, eb;
      if (flat) ea = extension(m, f.lhs()), eb = extension(m, f.rhs());
      for (WorldId y = 0; y < m.num_worlds(); ++y) {
        Chain c = rank_chain(m.spheres(y), y, member_ext, u_, m.centering());
        if (!flat) {
          SphereModel next = m.with_spheres(y, c);
          ea = extension(next, f.lhs());
          eb = extension(next, f.rhs());
        }
        if (clause(c, ea, eb)) out.insert(y);
      }
      break;
    }
  }
  memo_.emplace(key, Entry{out, f});
  return out;
}

void ExtensionEvaluator::clear() {
  memo_.clear();
  modal_free_.clear();
}

// }}}

}  // namespace cpcf
