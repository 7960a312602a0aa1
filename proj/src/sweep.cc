#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "cpcf/cpsets.h"
#include "cpcf/search.h"
#include "cpcf/translate.h"
#include "cpcf/update.h"
#include "cpcf/weights.h"

namespace cpcf {

namespace {

enum Check {
  kAD,
  kID,
  kGammaMax,
  kSymmetry,
  kMonotonicity,
  kDuality,
  kComplement,
  kValidity,
  kInterdef,
  kTranslation,
  kTranslationTags,
  kTranslationNested,
  kPreservation,
  kCheckCount
};

const char* kCheckNames[kCheckCount] = {
    "a=d",          "i=d",           "gamma-max",   "symmetry",          "monotonicity", "duality",
    "complement",   "valid-i-vs-d",  "interdefinability", "translation", "translation-a-i", "translation-nested",
    "preservation",
};

CpSet intersect(const CpSet& a, const CpSet& b) { return set_difference(a, set_difference(a, b)); }

bool lewis(Kind k, const Chain& c, WorldSet a, WorldSet b) {
  return k == Kind::Counterfactual ? lewis_counterfactual(c, a, b) : lewis_plausibility(c, a, b);
}

class Sweeper {
 public:
  Sweeper(const EnumerationBounds& bounds, const SweepOptions& opt) : bounds_(bounds), opt_(opt) {
    report_.bounds = bounds;
    report_.checks.resize(kCheckCount);
    for (int c = 0; c < kCheckCount; ++c) report_.checks[c].name = kCheckNames[c];
    const bool centered = bounds.centering == Centering::Centered;
    report_.checks[kID].asserted = centered;
    report_.checks[kValidity].asserted = false;
    report_.checks[kTranslation].asserted = true;
    report_.checks[kTranslationNested].asserted = true;

    corpus_ = generate_corpus(opt.corpus);
    report_.corpus_size = corpus_.size();
    for (const auto& f : corpus_) roots_.push_back(dag_.add(f));
    if (opt.interdefinability || opt.translation) {
      for (const auto& f : corpus_) {
        to_pl_.push_back(dag_.add(rewrite_cf_to_pl(f)));
        to_cf_.push_back(dag_.add(rewrite_pl_to_cf(f)));
      }
    }
    if (opt.translation) prepare_translation();
    literal_sets_ = opt.corpus.cpsets.empty() ? literal_cpsets(opt.corpus.atoms, 2) : opt.corpus.cpsets;
    for (const auto& a : opt.corpus.atoms) {
      pool_.push_back(Formula::atom(a));
      pool_.push_back(neg(Formula::atom(a)));
    }
    pool_.push_back(top());
    pool_.push_back(Formula::falsum());
    valid_.assign(3, std::vector<bool>(corpus_.size(), true));
  }

  SweepReport run() {
    if (bounds_.max_worlds > 6) throw std::invalid_argument("theorem sweeps are limited to 6 worlds");
    const auto start = std::chrono::steady_clock::now();
    ModelEnumeration models(bounds_);
    DagEvaluator ev_i(dag_, UpdateTag::i), ev_a(dag_, UpdateTag::a), ev_d(dag_, UpdateTag::d);
    DagEvaluator* evs[3] = {&ev_i, &ev_a, &ev_d};
    const std::uint64_t stride = std::max<std::size_t>(1, opt_.model_stride);
    for (std::uint64_t idx = 0; idx < models.size(); idx += stride) {
      const SphereModel m = models.at(idx);
      ++report_.models;
      if (opt_.theorems || opt_.interdefinability || opt_.translation)
        for (auto* ev : evs) ev->run(m);
      if (opt_.theorems) theorems(idx, m, evs);
      if (opt_.interdefinability) interdefinability(idx, m, evs);
      if (opt_.translation) translation(idx, m, ev_a, ev_d, ev_i);
      if (opt_.preservation) preservation(idx, m);
      if (opt_.progress && report_.models % 1000 == 0) opt_.progress(idx + 1, models.size());
    }
    if (opt_.theorems) finish_validity();
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!opt_.theorems) drop({kAD, kID, kGammaMax, kSymmetry, kMonotonicity, kDuality, kComplement, kValidity});
    if (!opt_.interdefinability) drop({kInterdef});
    if (!opt_.translation) drop({kTranslation, kTranslationTags, kTranslationNested});
    if (!opt_.preservation) drop({kPreservation});
    return report_;
  }

 private:
  void drop(std::initializer_list<int> checks) {
    for (int c : checks) report_.checks[c].name.clear();
  }

  void record(int check, std::uint64_t idx, const SphereModel& m, WorldId w, const std::string& formula,
              const std::string& detail) {
    auto& t = report_.checks[check];
    ++t.violations;
    if (t.witnesses.size() < opt_.keep)
      t.witnesses.push_back({t.name, idx, save_model(m), m.world_name(w), formula, detail});
  }

  void compare_roots(int check, std::uint64_t idx, const SphereModel& m, const std::vector<std::uint32_t>& lhs,
                     const DagEvaluator& el, const std::vector<std::uint32_t>& rhs, const DagEvaluator& er,
                     const std::string& detail) {
    auto& t = report_.checks[check];
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      ++t.checked;
      const WorldSet a = el.ext(lhs[k]), b = er.ext(rhs[k]);
      if (a != b) {
        const WorldId w = WorldSet(a.bits() ^ b.bits()).members().front();
        record(check, idx, m, w, print(corpus_[k]), detail);
      }
    }
  }

  // ---- theorem checks ----------------------------------------------------

  void theorems(std::uint64_t idx, const SphereModel& m, DagEvaluator* evs[3]) {
    compare_roots(kAD, idx, m, roots_, *evs[1], roots_, *evs[2], "");
    compare_roots(kID, idx, m, roots_, *evs[0], roots_, *evs[2], "");
    const WorldSet all = m.worlds();
    for (int t = 0; t < 3; ++t)
      for (std::size_t k = 0; k < roots_.size(); ++k)
        if (valid_[t][k] && evs[t]->ext(roots_[k]) != all) valid_[t][k] = false;

    // Realized extensions and a representative formula for each.
    realized_.clear();
    std::uint64_t modal_free_seen = 0, any_seen = 0;
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      const std::uint64_t e = evs[2]->ext(roots_[k]).bits();
      if (!(modal_free_seen >> e & 1) && dag_.node(roots_[k]).modal_free) {
        modal_free_seen |= std::uint64_t{1} << e;
        realized_.emplace_back(e, corpus_[k]);
      }
      for (int t = 0; t < 3; ++t) any_seen |= std::uint64_t{1} << evs[t]->ext(roots_[k]).bits();
    }
    std::vector<WorldSet> seen_any;
    for (std::uint64_t e = 0; e < 64; ++e)
      if (any_seen >> e & 1) seen_any.push_back(WorldSet(e));

    const UpdateTag tags[3] = {UpdateTag::i, UpdateTag::a, UpdateTag::d};
    for (WorldId x = 0; x < m.num_worlds(); ++x) {
      gamma_max(idx, m, x, evs);
      symmetry(idx, m, x, seen_any);
      monotonicity(idx, m, x);
      for (UpdateTag u : tags) {
        for (const auto& g : literal_sets_) {
          if (g.empty()) continue;
          duality_and_complement(idx, m, x, g, u);
        }
      }
    }
  }

  void gamma_max(std::uint64_t idx, const SphereModel& m, WorldId x, DagEvaluator* evs[3]) {
    const UpdateTag tags[3] = {UpdateTag::i, UpdateTag::a, UpdateTag::d};
    auto& t = report_.checks[kGammaMax];
    for (std::uint32_t k = 0; k < dag_.cpsets().size(); ++k) {
      const CpSet& g = dag_.cpsets()[k];
      if (g.empty() || !dag_.tabulated(k)) continue;
      for (int ti = 0; ti < 3; ++ti) {
        const UpdateTag u = tags[ti];
        const CpSet gm = maximal_cp_set(m, x, g, u, opt_.tie);
        std::vector<WorldSet> member_ext;
        for (const auto& member : gm) member_ext.push_back(extension(m, member, u, m.worlds()));
        const Chain with_max = rank_chain(m.spheres(x), x, member_ext, u, m.centering());
        const Chain& with_g = evs[ti]->chain(k, x);
        for (const auto& [ea, fa] : realized_) {
          for (const auto& [eb, fb] : realized_) {
            for (Kind kind : {Kind::Counterfactual, Kind::Plausibility}) {
              ++t.checked;
              if (lewis(kind, with_g, WorldSet(ea), WorldSet(eb)) != lewis(kind, with_max, WorldSet(ea), WorldSet(eb))) {
                const Formula f = kind == Kind::Counterfactual ? Formula::counterfactual(fa, g, fb)
                                                               : Formula::plausibility(fa, g, fb);
                record(kGammaMax, idx, m, x, print(f), std::string("u=") + to_string(u) + " max=" + print(gm));
              }
            }
          }
        }
      }
    }
  }

  void symmetry(std::uint64_t idx, const SphereModel& m, WorldId x, const std::vector<WorldSet>& exts) {
    auto& t = report_.checks[kSymmetry];
    const Chain& c = m.spheres(x);
    const WorldSet all = m.worlds();
    std::vector<FormulaWeight> w, wbar;
    for (WorldSet e : exts) {
      w.push_back(weight_of_extension(c, e));
      wbar.push_back(weight_of_extension(c, all - e));
    }
    for (std::size_t a = 0; a < exts.size(); ++a) {
      for (std::size_t b = 0; b < exts.size(); ++b) {
        ++t.checked;
        if (cmp_xel(w[b], w[a]) <= 0 && !(cmp_xel(wbar[a], wbar[b]) <= 0)) {
          record(kSymmetry, idx, m, x, "", "extensions " + format_set(m, exts[a]) + " and " + format_set(m, exts[b]));
        }
      }
    }
  }

  void monotonicity(std::uint64_t idx, const SphereModel& m, WorldId x) {
    auto& t = report_.checks[kMonotonicity];
    std::vector<FormulaWeight> w;
    for (const auto& f : pool_) w.push_back(weight_of_formula(m, x, f, UpdateTag::d));
    const std::size_t n = pool_.size();
    std::vector<SetWeight> sw(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < sw.size(); ++mask) {
      std::vector<FormulaWeight> parts;
      for (std::size_t k = 0; k < n; ++k)
        if (mask >> k & 1) parts.push_back(w[k]);
      sw[mask] = make_set_weight(std::move(parts));
    }
    for (std::size_t big = 0; big < sw.size(); ++big) {
      for (std::size_t small = big;; small = (small - 1) & big) {
        ++t.checked;
        if (cmp_lex(sw[small], sw[big]) > 0) {
          record(kMonotonicity, idx, m, x, "", "subset mask " + std::to_string(small) + " of " + std::to_string(big));
        }
        if (small == 0) break;
      }
    }
  }

  void duality_and_complement(std::uint64_t idx, const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u) {
    auto& dual_t = report_.checks[kDuality];
    auto& comp_t = report_.checks[kComplement];
    const std::string tag = std::string("u=") + to_string(u) + " set=" + print(g);
    const auto reach = m.reach(x).members();
    std::vector<WorldProfile> prof;
    std::vector<SetWeight> wd, wa;
    for (WorldId y : reach) {
      prof.push_back(profile(m, x, y, g, u));
      wd.push_back(weight_of_set(m, x, prof.back().disagreement, u));
      wa.push_back(weight_of_set(m, x, prof.back().agreement, u));
    }
    for (std::size_t a = 0; a < reach.size(); ++a) {
      for (std::size_t b = 0; b < reach.size(); ++b) {
        ++dual_t.checked;
        if ((cmp_lex(wd[a], wd[b]) <= 0) != (cmp_lex(wa[b], wa[a]) <= 0)) {
          record(kDuality, idx, m, x, "", tag + " worlds " + m.world_name(reach[a]) + "," + m.world_name(reach[b]));
        }
      }
    }

    const CpSet fx = profile(m, x, x, g, u).forcing;
    const CpSet fxc = forcing_complement(m, x, g, u);
    const auto lambdas = paired_subsets(g);
    for (std::size_t a = 0; a < reach.size(); ++a) {
      const WorldId y = reach[a];
      const auto& p = prof[a];
      const CpSet fy = p.forcing;
      const CpSet fyc = set_difference(g, fy);
      auto fail = [&](const std::string& clause) {
        record(kComplement, idx, m, x, "", tag + " world " + m.world_name(y) + " " + clause);
      };
      comp_t.checked += 2;
      if (!(p.agreement == set_union(intersect(fx, fy), intersect(fxc, fyc)))) fail("clause 1");
      if (!(p.disagreement == set_union(intersect(fx, fyc), intersect(fxc, fy)))) fail("clause 2");
      for (const auto& l : lambdas) {
        comp_t.checked += 3;
        const bool d_in = is_subset(p.disagreement, l);
        if (sat(m, y, big_conj(intersect(fx, set_difference(g, l)).members()), u) != d_in)
          fail("clause 3 for " + print(l));
        if (sat(m, y, big_conj(intersect(fx, l).members()), u) != is_subset(l, p.agreement))
          fail("clause 4 for " + print(l));
        if (d_in && cmp_lex(wd[a], weight_of_set(m, x, l, u)) > 0) fail("clause 5 for " + print(l));
      }
    }
  }

  void finish_validity() {
    auto& t = report_.checks[kValidity];
    for (std::size_t k = 0; k < corpus_.size(); ++k) {
      ++t.checked;
      if (valid_[0][k] != valid_[2][k]) {
        ++t.violations;
        if (t.witnesses.size() < opt_.keep) {
          t.witnesses.push_back({t.name, 0, "", "", print(corpus_[k]),
                                 valid_[0][k] ? "valid under i only" : "valid under d only"});
        }
      }
    }
  }

  // ---- interdefinability ---------------------------------------------------

  void interdefinability(std::uint64_t idx, const SphereModel& m, DagEvaluator* evs[3]) {
    for (int t = 0; t < 3; ++t) {
      const DagEvaluator* ev = evs[t];
      const std::string u = std::string("u=") + to_string(ev->tag());
      compare_roots(kInterdef, idx, m, roots_, *ev, to_pl_, *ev, u + " rewrite=pl");
      compare_roots(kInterdef, idx, m, roots_, *ev, to_cf_, *ev, u + " rewrite=cf");
    }
  }

  // ---- translation ---------------------------------------------------------

  // Flat: every cp-node sits under Boolean connectives only.
  bool flat(std::uint32_t i) const {
    const auto& n = dag_.node(i);
    if (n.cpl == 0) return true;
    if (n.kind == Kind::Implies) return flat(n.lhs) && flat(n.rhs);
    return n.kind == Kind::Plausibility && dag_.node(n.lhs).cpl == 0 && dag_.node(n.rhs).cpl == 0 &&
           dag_.tabulated(n.cpset);
  }

  void prepare_translation() {
    std::vector<bool> mark(dag_.size(), false);
    for (std::size_t k = 0; k < corpus_.size(); ++k) {
      if (dag_.node(to_pl_[k]).cpl > opt_.translation_cpl) continue;
      if (!flat(to_pl_[k])) {
        nested_roots_.push_back(k);
        continue;
      }
      star_roots_.push_back(k);
      std::vector<std::uint32_t> stack{to_pl_[k]};
      while (!stack.empty()) {
        const std::uint32_t i = stack.back();
        stack.pop_back();
        if (mark[i] || dag_.node(i).cpl == 0) continue;
        mark[i] = true;
        const auto& n = dag_.node(i);
        if (n.kind == Kind::Implies) {
          stack.push_back(n.lhs);
          stack.push_back(n.rhs);
        }
      }
    }
    for (std::uint32_t i = 0; i < dag_.size(); ++i)
      if (mark[i]) star_nodes_.push_back(i);
    star_ext_.assign(dag_.size(), WorldSet{});
  }

  bool hat_verdict(const SphereModel& m, WorldId x, std::uint32_t node, const DagEvaluator& ev_d) {
    const auto& n = dag_.node(node);
    const std::size_t side = std::size_t{1} << m.num_worlds();
    const std::size_t key =
        ((static_cast<std::size_t>(n.cpset) * m.num_worlds() + x) * side + ev_d.ext(n.lhs).bits()) * side +
        ev_d.ext(n.rhs).bits();
    std::int8_t& slot = hat_memo_[key];
    if (slot < 0) {
      const Formula h = hat(m, x, dag_.node(n.lhs).formula, dag_.node(n.rhs).formula, dag_.cpsets()[n.cpset]);
      slot = sat(m, x, h, UpdateTag::d) ? 1 : 0;
    }
    return slot != 0;
  }

  void translation(std::uint64_t idx, const SphereModel& m, const DagEvaluator& ev_a, const DagEvaluator& ev_d,
                   const DagEvaluator& ev_i) {
    const std::size_t n = m.num_worlds();
    const WorldSet all = m.worlds();
    const std::size_t side = std::size_t{1} << n;
    hat_memo_.assign(dag_.cpsets().size() * n * side * side, -1);
    auto st = [&](std::uint32_t i) { return dag_.node(i).cpl == 0 ? ev_d.ext(i) : star_ext_[i]; };
    for (std::uint32_t i : star_nodes_) {
      const auto& node = dag_.node(i);
      if (node.kind == Kind::Implies) {
        star_ext_[i] = (all - st(node.lhs)) | st(node.rhs);
      } else {
        WorldSet e;
        for (WorldId x = 0; x < n; ++x)
          if (hat_verdict(m, x, i, ev_d)) e.insert(x);
        star_ext_[i] = e;
      }
    }
    auto& t = report_.checks[kTranslation];
    auto& tt = report_.checks[kTranslationTags];
    const bool centered = m.centering() == Centering::Centered;
    for (std::size_t k : star_roots_) {
      const WorldSet s = st(to_pl_[k]);
      ++t.checked;
      if (s != ev_d.ext(roots_[k])) {
        record(kTranslation, idx, m, WorldSet(s.bits() ^ ev_d.ext(roots_[k]).bits()).members().front(),
               print(corpus_[k]), "u=d");
      }
      ++tt.checked;
      if (s != ev_a.ext(roots_[k])) {
        record(kTranslationTags, idx, m, WorldSet(s.bits() ^ ev_a.ext(roots_[k]).bits()).members().front(),
               print(corpus_[k]), "u=a");
      }
      if (centered) {
        ++tt.checked;
        if (s != ev_i.ext(roots_[k])) {
          record(kTranslationTags, idx, m, WorldSet(s.bits() ^ ev_i.ext(roots_[k]).bits()).members().front(),
                 print(corpus_[k]), "u=i");
        }
      }
    }
    if (opt_.direct_stride != 0 && idx % opt_.direct_stride == 0) direct_translation(idx, m, ev_d);
    nested_translation(idx, m, ev_d);
  }

  // Nested cp-nodes: star() anchored at each world, evaluated with sat().
  void nested_translation(std::uint64_t idx, const SphereModel& m, const DagEvaluator& ev_d) {
    auto& t = report_.checks[kTranslationNested];
    for (std::size_t k : nested_roots_) {
      const Formula pl = rewrite_cf_to_pl(corpus_[k]);
      for (WorldId x = 0; x < m.num_worlds(); ++x) {
        ++t.checked;
        const Formula s = star(m, x, pl);
        if (cpl(s) != 0 || sat(m, x, s, UpdateTag::d) != ev_d.ext(roots_[k]).contains(x))
          record(kTranslationNested, idx, m, x, print(corpus_[k]), "u=d");
      }
    }
  }

  // Builds star() for a spread of formulas and evaluates it with sat().
  void direct_translation(std::uint64_t idx, const SphereModel& m, const DagEvaluator& ev_d) {
    auto& t = report_.checks[kTranslation];
    const std::size_t step = std::max<std::size_t>(1, star_roots_.size() / 40);
    for (std::size_t j = (idx / opt_.direct_stride) % step; j < star_roots_.size(); j += step) {
      const std::size_t k = star_roots_[j];
      for (WorldId x = 0; x < m.num_worlds(); ++x) {
        const Formula s = star(m, x, rewrite_cf_to_pl(corpus_[k]));
        ++t.checked;
        if (cpl(s) != 0 || sat(m, x, s, UpdateTag::d) != ev_d.ext(roots_[k]).contains(x))
          record(kTranslation, idx, m, x, print(corpus_[k]), "u=d direct");
      }
    }
  }

  // ---- preservation --------------------------------------------------------

  void preservation(std::uint64_t idx, const SphereModel& m) {
    auto& t = report_.checks[kPreservation];
    for (WorldId x = 0; x < m.num_worlds(); ++x) {
      for (const auto& g : literal_sets_) {
        for (UpdateTag u : kAllTags) {
          ++t.checked;
          const SphereModel next = update(m, x, g, u);
          const auto violations = validate(next);
          if (!violations.empty() || next.reach(x) != m.reach(x) || next.centering() != m.centering()) {
            record(kPreservation, idx, m, x, print(g),
                   std::string("u=") + to_string(u) +
                       (violations.empty() ? " reach changed" : " " + violations.front().message));
          }
        }
      }
    }
  }

  EnumerationBounds bounds_;
  SweepOptions opt_;
  SweepReport report_;
  std::vector<Formula> corpus_;
  FormulaDag dag_;
  std::vector<std::uint32_t> roots_, to_pl_, to_cf_;
  std::vector<CpSet> literal_sets_;
  std::vector<Formula> pool_;
  std::vector<std::vector<bool>> valid_;
  std::vector<std::pair<std::uint64_t, Formula>> realized_;
  std::vector<std::size_t> star_roots_, nested_roots_;
  std::vector<std::uint32_t> star_nodes_;
  std::vector<WorldSet> star_ext_;
  std::vector<std::int8_t> hat_memo_;
};

}  // namespace

const CheckTally* SweepReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool SweepReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckTally& c) { return !c.name.empty() && c.asserted && c.violations != 0; });
}

SweepReport theorem_sweep(const EnumerationBounds& bounds, const SweepOptions& options) {
  SweepReport r = Sweeper(bounds, options).run();
  r.checks.erase(std::remove_if(r.checks.begin(), r.checks.end(), [](const CheckTally& c) { return c.name.empty(); }),
                 r.checks.end());
  return r;
}

std::optional<bool> replay(const Witness& w) {
  if (w.model.empty()) return std::nullopt;
  const SphereModel m = load_model(w.model);
  const WorldId x = m.world(w.world);
  const Formula f = parse(w.formula);
  auto tag_of = [&]() {
    const auto pos = w.detail.find("u=");
    if (pos == std::string::npos) return UpdateTag::d;
    return parse_update_tag(w.detail.substr(pos + 2, 1)).value_or(UpdateTag::d);
  };
  if (w.check == "a=d") return sat(m, x, f, UpdateTag::a) != sat(m, x, f, UpdateTag::d);
  if (w.check == "i=d") return sat(m, x, f, UpdateTag::i) != sat(m, x, f, UpdateTag::d);
  if (w.check == "interdefinability") {
    const UpdateTag u = tag_of();
    const Formula g = w.detail.find("rewrite=cf") != std::string::npos ? rewrite_pl_to_cf(f) : rewrite_cf_to_pl(f);
    return sat(m, x, f, u) != sat(m, x, g, u);
  }
  if (w.check == "translation" || w.check == "translation-a-i" || w.check == "translation-nested") {
    const Formula s = star(m, x, rewrite_cf_to_pl(f));
    return cpl(s) != 0 || sat(m, x, s, UpdateTag::d) != sat(m, x, f, tag_of());
  }
  if (w.check == "gamma-max") {
    const UpdateTag u = tag_of();
    const auto pos = w.detail.find("max=");
    const CpSet gm = parse_cpset(w.detail.substr(pos + 4));
    std::vector<WorldSet> member_ext;
    for (const auto& member : gm) member_ext.push_back(extension(m, member, u, m.worlds()));
    const Chain c = rank_chain(m.spheres(x), x, member_ext, u, m.centering());
    const bool via_max = lewis(f.kind(), c, extension(m, f.lhs(), u, m.worlds()), extension(m, f.rhs(), u, m.worlds()));
    return via_max != sat(m, x, f, u);
  }
  return std::nullopt;
}

std::string format_report(const SweepReport& r) {
  std::ostringstream out;
  out << "bounds: worlds<=" << r.bounds.max_worlds << " atoms=" << r.bounds.atoms.size() << " centering="
      << to_string(r.bounds.centering) << "\n";
  out << "models: " << r.models << "  corpus: " << r.corpus_size << "\n";
  for (const auto& c : r.checks) {
    out << c.name << ": checked " << c.checked << ", violations " << c.violations
        << (c.asserted ? "" : " (logged, not asserted)") << "\n";
    for (const auto& w : c.witnesses) {
      out << "  witness model#" << w.model_index << " world " << w.world;
      if (!w.formula.empty()) out << " formula " << w.formula;
      if (!w.detail.empty()) out << " [" << w.detail << "]";
      out << "\n";
    }
  }
  out << (r.ok() ? "result: ok" : "result: VIOLATIONS") << "\n";
  return out.str();
}

}  // namespace cpcf
