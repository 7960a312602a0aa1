#include "cpcf/search.h"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

#include "cpcf/update.h"

namespace cpcf {

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void extend_chain(Chain& cur, std::size_t n, std::size_t max_spheres, std::vector<Chain>& out) {
  out.push_back(cur);
  if (max_spheres != 0 && cur.size() >= max_spheres) return;
  const WorldSet last = cur.back();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const WorldSet s(bits);
    if (last.subset_of(s) && s != last) {
      cur.push_back(s);
      extend_chain(cur, n, max_spheres, out);
      cur.pop_back();
    }
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a != 0 && b > cap / a) throw EnumerationOverflow("model count exceeds the enumeration cap");
  return a * b;
}

}  // namespace

std::vector<Chain> candidate_chains(std::size_t n, WorldId x, Centering c, std::size_t max_spheres) {
  if (n == 0 || n > 16 || x >= n) throw std::invalid_argument("chain enumeration needs 1 to 16 worlds");
  std::vector<Chain> out;
  Chain cur;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const WorldSet s(bits);
    if (!s.contains(x)) continue;
    if (c == Centering::Centered && s != WorldSet::single(x)) continue;
    cur.push_back(s);
    extend_chain(cur, n, max_spheres, out);
    cur.pop_back();
  }
  return out;
}

ModelEnumeration::ModelEnumeration(EnumerationBounds bounds) : bounds_(std::move(bounds)) {
  if (bounds_.max_worlds == 0) throw std::invalid_argument("max_worlds must be at least 1");
  if (bounds_.max_worlds > 8) throw EnumerationOverflow("enumeration is limited to 8 worlds");
  for (std::size_t n = 1; n <= bounds_.max_worlds; ++n) {
    Block b{n, total_, 0, {}};
    const std::size_t bits = n * bounds_.atoms.size();
    if (bits >= 63) throw EnumerationOverflow("too many valuations");
    b.valuations = std::uint64_t{1} << bits;
    std::uint64_t count = b.valuations;
    for (WorldId x = 0; x < n; ++x) {
      b.chains.push_back(candidate_chains(n, x, bounds_.centering, bounds_.max_spheres));
      count = checked_mul(count, b.chains.back().size(), bounds_.cap);
    }
    total_ += count;
    if (total_ > bounds_.cap) throw EnumerationOverflow("model count exceeds the enumeration cap");
    blocks_.push_back(std::move(b));
  }
}

SphereModel ModelEnumeration::at(std::uint64_t index) const {
  if (index >= total_) throw std::out_of_range("model index out of range");
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t i, const Block& b) { return i < b.first; });
  const Block& b = *std::prev(it);
  std::uint64_t local = index - b.first;
  const std::uint64_t val = local % b.valuations;
  local /= b.valuations;

  std::vector<Chain> systems;
  for (std::size_t x = 0; x < b.worlds; ++x) {
    const auto& options = b.chains[x];
    systems.push_back(options[local % options.size()]);
    local /= options.size();
  }
  std::vector<std::string> names;
  for (std::size_t w = 0; w < b.worlds; ++w) names.push_back("w" + std::to_string(w));
  std::map<std::string, WorldSet> valuation;
  for (std::size_t a = 0; a < bounds_.atoms.size(); ++a) {
    valuation[bounds_.atoms[a]] = WorldSet((val >> (a * b.worlds)) & WorldSet::first_n(b.worlds).bits());
  }
  return SphereModel(std::move(names), std::move(valuation), std::move(systems), bounds_.centering);
}

void ModelEnumeration::for_each(const std::function<void(std::uint64_t, const SphereModel&)>& fn) const {
  for (std::uint64_t i = 0; i < total_; ++i) fn(i, at(i));
}

std::vector<SphereModel> enumerate_models(const EnumerationBounds& bounds) {
  ModelEnumeration e(bounds);
  std::vector<SphereModel> out;
  out.reserve(e.size());
  e.for_each([&](std::uint64_t, const SphereModel& m) { out.push_back(m); });
  return out;
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<CpSet> literal_cpsets(const std::vector<std::string>& atoms, std::size_t max_pairs) {
  std::vector<CpSet> out;
  if (atoms.size() >= 20) throw std::invalid_argument("too many atoms");
  for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_pairs) continue;
    std::vector<Formula> members;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      if (mask >> k & 1) {
        members.push_back(Formula::atom(atoms[k]));
        members.push_back(neg(Formula::atom(atoms[k])));
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

std::vector<Formula> generate_corpus(const CorpusOptions& options) {
  const std::vector<CpSet> cpsets = options.cpsets.empty() ? literal_cpsets(options.atoms, 2) : options.cpsets;

  std::vector<Formula> out;
  std::vector<std::size_t> depth;
  std::unordered_set<Formula, FormulaHash> seen;
  std::vector<std::vector<std::size_t>> by_size(options.max_size + 1);

  auto emit = [&](Formula f, std::size_t size, std::size_t d) {
    if (d > 2 || (d == 2 && size > options.nested_max_size)) return;
    if (!seen.insert(f).second) return;
    by_size[size].push_back(out.size());
    out.push_back(std::move(f));
    depth.push_back(d);
  };

  if (options.max_size >= 1) {
    for (const auto& a : options.atoms) emit(Formula::atom(a), 1, 0);
    emit(Formula::falsum(), 1, 0);
  }
  for (std::size_t s = 2; s <= options.max_size; ++s) {
    for (std::size_t i : by_size[s - 1]) emit(neg(out[i]), s, depth[i]);
    for (std::size_t l = 1; l + 1 < s; ++l) {
      const std::size_t r = s - 1 - l;
      for (std::size_t i : by_size[l]) {
        for (std::size_t j : by_size[r]) {
          const Formula a = out[i], b = out[j];
          const std::size_t d = std::max(depth[i], depth[j]);
          emit(conj(a, b), s, d);
          emit(disj(a, b), s, d);
          emit(Formula::implies(a, b), s, d);
          for (const auto& g : cpsets) {
            if (options.counterfactuals) emit(Formula::counterfactual(a, g, b), s, d + 1);
            if (options.plausibility) emit(Formula::plausibility(a, g, b), s, d + 1);
          }
        }
      }
    }
  }
  if (options.min_modal_depth > 0) {
    std::vector<Formula> kept;
    for (std::size_t k = 0; k < out.size(); ++k)
      if (depth[k] >= options.min_modal_depth) kept.push_back(out[k]);
    return kept;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared-node evaluation

std::optional<std::uint32_t> FormulaDag::find(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t FormulaDag::add_cpset(const CpSet& g) {
  for (std::uint32_t k = 0; k < cpsets_.size(); ++k)
    if (cpsets_[k] == g) return k;
  std::vector<std::uint32_t> members;
  bool flat = true;
  for (const auto& m : g) {
    members.push_back(add(m));
    flat = flat && nodes_[members.back()].modal_free;
  }
  cpsets_.push_back(g);
  member_nodes_.push_back(std::move(members));
  tabulated_.push_back(flat);
  return static_cast<std::uint32_t>(cpsets_.size() - 1);
}

std::uint32_t FormulaDag::add(const Formula& f) {
  if (auto it = index_.find(f); it != index_.end()) return it->second;
  Node n{f.kind(), 0, 0, 0, true, 0, f};
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Falsum:
      break;
    case Kind::Implies:
      n.lhs = add(f.lhs());
      n.rhs = add(f.rhs());
      n.modal_free = nodes_[n.lhs].modal_free && nodes_[n.rhs].modal_free;
      n.cpl = nodes_[n.lhs].cpl + nodes_[n.rhs].cpl;
      break;
    case Kind::Counterfactual:
    case Kind::Plausibility:
      n.lhs = add(f.lhs());
      n.rhs = add(f.rhs());
      n.cpset = add_cpset(f.cpset());
      n.modal_free = false;
      n.cpl = cpl(f);
      break;
  }
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(n));
  index_.emplace(f, id);
  return id;
}

DagEvaluator::DagEvaluator(const FormulaDag& dag, UpdateTag u) : dag_(dag), u_(u), fallback_(u) {}

const Chain& DagEvaluator::chain(std::uint32_t k, WorldId y) {
  if (!chain_ready_[k][y]) {
    const CpSet& g = dag_.cpsets()[k];
    if (g.empty()) {
      chains_[k][y] = model_->spheres(y);
    } else {
      if (!dag_.tabulated(k)) throw std::logic_error("cp-set members are not modal-free");
      if (!is_paired(g)) throw EvalError("cp-set " + print(g) + " is not paired");
      std::vector<WorldSet> member_ext;
      for (std::uint32_t node : dag_.members(k)) member_ext.push_back(ext_[node]);
      chains_[k][y] = rank_chain(model_->spheres(y), y, member_ext, u_, model_->centering());
    }
    chain_ready_[k][y] = true;
  }
  return chains_[k][y];
}

void DagEvaluator::compile() {
  std::map<std::string, std::uint32_t> atom_index;
  for (std::uint32_t i = static_cast<std::uint32_t>(steps_.size()); i < dag_.size(); ++i) {
    const auto& node = dag_.node(i);
    Step st{Op::Falsum, node.lhs, node.rhs, node.cpset};
    switch (node.kind) {
      case Kind::Atom: {
        auto it = std::find(atoms_.begin(), atoms_.end(), node.formula.name());
        st.aux = static_cast<std::uint32_t>(it - atoms_.begin());
        if (it == atoms_.end()) atoms_.push_back(node.formula.name());
        st.op = Op::Atom;
        break;
      }
      case Kind::Falsum:
        break;
      case Kind::Implies:
        st.op = Op::Implies;
        break;
      case Kind::Counterfactual:
      case Kind::Plausibility: {
        const bool direct = dag_.cpsets()[node.cpset].empty() ||
                            (dag_.tabulated(node.cpset) && dag_.node(node.lhs).modal_free &&
                             dag_.node(node.rhs).modal_free);
        st.op = !direct ? Op::Fallback : node.kind == Kind::Counterfactual ? Op::Counterfactual : Op::Plausibility;
        break;
      }
    }
    steps_.push_back(st);
  }
}

WorldSet DagEvaluator::modal(Op op, std::uint32_t k, WorldSet a, WorldSet b) {
  constexpr std::uint64_t kFilled = std::uint64_t{1} << 63;
  std::uint64_t* slot = nullptr;
  if (side_ != 0) {
    const std::size_t o = op == Op::Counterfactual ? 0 : 1;
    slot = &table_[((o * dag_.cpsets().size() + k) * side_ + a.bits()) * side_ + b.bits()];
    if (*slot & kFilled) return WorldSet(*slot & ~kFilled);
  }
  WorldSet e;
  for (WorldId y = 0; y < model_->num_worlds(); ++y) {
    const Chain& c = chain(k, y);
    if (op == Op::Counterfactual ? lewis_counterfactual(c, a, b) : lewis_plausibility(c, a, b)) e.insert(y);
  }
  if (slot) *slot = e.bits() | kFilled;
  return e;
}

void DagEvaluator::run(const SphereModel& m) {
  if (m.num_worlds() > 63) throw std::invalid_argument("too many worlds for shared-node evaluation");
  if (steps_.size() != dag_.size()) compile();
  model_ = &m;
  const std::size_t n = m.num_worlds();
  const WorldSet all = m.worlds();
  const std::size_t k_count = dag_.cpsets().size();
  ext_.resize(dag_.size());
  chains_.assign(k_count, std::vector<Chain>(n));
  chain_ready_.assign(k_count, std::vector<bool>(n, false));
  side_ = n <= 6 ? std::size_t{1} << n : 0;
  if (side_ != 0) table_.assign(2 * k_count * side_ * side_, 0);
  fallback_.clear();
  std::vector<WorldSet> atom_ext;
  for (const auto& a : atoms_) atom_ext.push_back(m.valuation(a) & all);

  const Step* steps = steps_.data();
  WorldSet* ext = ext_.data();
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& st = steps[i];
    switch (st.op) {
      case Op::Atom:
        ext[i] = atom_ext[st.aux];
        break;
      case Op::Falsum:
        ext[i] = WorldSet{};
        break;
      case Op::Implies:
        ext[i] = (all - ext[st.lhs]) | ext[st.rhs];
        break;
      case Op::Counterfactual:
      case Op::Plausibility:
        ext[i] = modal(st.op, st.aux, ext[st.lhs], ext[st.rhs]);
        break;
      case Op::Fallback:
        ext[i] = fallback_.extension(m, dag_.node(static_cast<std::uint32_t>(i)).formula);
        break;
    }
  }
}

// ---------------------------------------------------------------------------
// Axioms

const char* to_string(Schema s) {
  switch (s) {
    case Schema::cpr: return "cpr";
    case Schema::cpa: return "cpa";
    case Schema::tr: return "tr";
    case Schema::co: return "co";
    case Schema::w: return "w";
    case Schema::c: return "c";
  }
  return "?";
}

const char* to_string(AxiomSystem s) { return s == AxiomSystem::VW ? "VW" : "VC"; }

std::vector<Schema> schemata(AxiomSystem s) {
  std::vector<Schema> out{Schema::cpr, Schema::cpa, Schema::tr, Schema::co, Schema::w};
  if (s == AxiomSystem::VC) out.push_back(Schema::c);
  return out;
}

namespace {

bool prop_eval(const Formula& f, const std::map<std::string, bool>& v) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = v.find(f.name());
      return it != v.end() && it->second;
    }
    case Kind::Falsum:
      return false;
    case Kind::Implies:
      return !prop_eval(f.lhs(), v) || prop_eval(f.rhs(), v);
    default:
      throw std::invalid_argument("propositional evaluation of a modal formula");
  }
}

bool tautology(const Formula& f) {
  std::set<std::string> atoms;
  collect_atoms(f, atoms);
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size()); ++bits) {
    std::map<std::string, bool> v;
    for (std::size_t k = 0; k < names.size(); ++k) v[names[k]] = bits >> k & 1;
    if (!prop_eval(f, v)) return false;
  }
  return true;
}

Formula le(const Formula& a, const Formula& b) { return Formula::plausibility(a, CpSet{}, b); }

}  // namespace

std::vector<AxiomInstance> axiom_instances(Schema s, const std::vector<Formula>& pool) {
  std::vector<Formula> out;
  switch (s) {
    case Schema::cpr:
      for (const auto& a : pool)
        for (const auto& b : pool)
          if (modal_depth(a) == 0 && modal_depth(b) == 0 && tautology(Formula::implies(b, a))) out.push_back(le(a, b));
      break;
    case Schema::cpa:
      for (const auto& a : pool)
        for (const auto& b : pool) out.push_back(disj(le(a, disj(a, b)), le(b, disj(a, b))));
      break;
    case Schema::tr:
      for (const auto& a : pool)
        for (const auto& b : pool)
          for (const auto& c : pool) out.push_back(Formula::implies(conj(le(a, b), le(b, c)), le(a, c)));
      break;
    case Schema::co:
      for (const auto& a : pool)
        for (const auto& b : pool) out.push_back(disj(le(a, b), le(b, a)));
      break;
    case Schema::w:
      for (const auto& a : pool) out.push_back(Formula::implies(a, le(a, top())));
      break;
    case Schema::c:
      for (const auto& a : pool) out.push_back(Formula::implies(le(a, top()), a));
      break;
  }
  std::vector<AxiomInstance> inst;
  for (auto& f : out) {
    const bool base = cpl(f) == 0;
    inst.push_back({s, std::move(f), base});
  }
  return inst;
}

std::vector<Formula> axiom_pool(const std::vector<std::string>& atoms, bool with_cp) {
  if (atoms.empty()) throw std::invalid_argument("axiom pool needs at least one atom");
  const Formula p = Formula::atom(atoms[0]);
  const Formula q = Formula::atom(atoms.size() > 1 ? atoms[1] : atoms[0]);
  std::vector<Formula> pool{p, neg(p), q, neg(q), Formula::falsum(), top(), conj(p, q), disj(p, neg(q)),
                            Formula::counterfactual(p, CpSet{}, q), Formula::plausibility(q, CpSet{}, p)};
  if (with_cp) {
    pool.push_back(Formula::counterfactual(p, CpSet({q, neg(q)}), q));
    pool.push_back(Formula::plausibility(neg(p), CpSet({p, neg(p)}), q));
  }
  std::vector<Formula> out;
  for (auto& f : pool)
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  return out;
}

AxiomReport check_axioms(const EnumerationBounds& bounds, AxiomSystem system, UpdateTag u,
                         const std::vector<AxiomInstance>& instances, std::size_t keep) {
  AxiomReport rep;
  rep.system = system;
  rep.tag = u;
  const auto allowed = schemata(system);
  FormulaDag dag;
  std::vector<std::pair<const AxiomInstance*, std::uint32_t>> roots;
  for (const auto& inst : instances) {
    if (std::find(allowed.begin(), allowed.end(), inst.schema) == allowed.end()) continue;
    roots.emplace_back(&inst, dag.add(inst.formula));
  }
  DagEvaluator ev(dag, u);
  std::size_t kept_base = 0, kept_cp = 0;
  ModelEnumeration models(bounds);
  models.for_each([&](std::uint64_t idx, const SphereModel& m) {
    ++rep.models;
    ev.run(m);
    const WorldSet all = m.worlds();
    for (const auto& [inst, node] : roots) {
      ++rep.checks;
      const WorldSet e = ev.ext(node);
      if (e == all) continue;
      std::size_t& kept = inst->base ? kept_base : kept_cp;
      (inst->base ? rep.base_failures : rep.cp_failures)++;
      if (kept < keep) {
        ++kept;
        const WorldId w = (all - e).members().front();
        rep.failures.push_back({inst->schema, inst->base, idx, save_model(m), m.world_name(w), print(inst->formula)});
      }
    }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Countermodels

std::optional<Countermodel> find_countermodel(const Formula& f, const EnumerationBounds& bounds, UpdateTag u) {
  ModelEnumeration models(bounds);
  ExtensionEvaluator ev(u);
  for (std::uint64_t i = 0; i < models.size(); ++i) {
    const SphereModel m = models.at(i);
    const WorldSet bad = m.worlds() - ev.extension(m, f);
    ev.clear();
    if (!bad.empty()) return Countermodel{i, m, bad.members().front()};
  }
  return std::nullopt;
}

std::optional<VariantWitness> find_variant_divergence(const std::vector<Formula>& formulas,
                                                      const EnumerationBounds& bounds, UpdateTag u) {
  ModelEnumeration models(bounds);
  for (std::uint64_t i = 0; i < models.size(); ++i) {
    const SphereModel m = models.at(i);
    for (const auto& f : formulas) {
      for (WorldId x = 0; x < m.num_worlds(); ++x) {
        const bool a = sat_variant(m, x, f, u, Variant::a);
        const bool b = sat(m, x, f, u);
        const bool c = sat_variant(m, x, f, u, Variant::c);
        if (a != b || b != c) return VariantWitness{i, m, x, f, a, b, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace cpcf
