// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails. Criterion numbers are those of the project README.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "common.h"
#include "cpcf/arena.h"
#include "cpcf/eval.h"
#include "cpcf/search.h"
#include "cpcf/update.h"
#include "cpcf/weights.h"
#include "oracle.h"

using namespace cpcf;
using testing::f;
using testing::g;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: no time bound
  std::function<Outcome()> body;
};

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

std::string counts(const SweepReport& r, std::initializer_list<const char*> names) {
  std::ostringstream s;
  for (const char* n : names) {
    const CheckTally* t = r.find(n);
    if (!t) {
      s << n << "=missing ";
      continue;
    }
    s << n << "=" << t->violations << "/" << t->checked << " ";
  }
  return s.str();
}

bool zero(const SweepReport& r, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    const CheckTally* t = r.find(n);
    if (!t || t->checked == 0 || t->violations != 0) return false;
  }
  return true;
}

Outcome weights() {
  Outcome o;
  const SphereModel m = testing::fixture("nixon.sph");
  const WorldId x = m.world("x");
  const std::vector<std::pair<const char*, std::vector<std::uint32_t>>> printed{
      {"p", {0, 1, 1, 1, 1}},   {"~p", {1, 0, 0, 0, 0}},  {"e1", {0, 1, 1, 0, 0}}, {"e2", {0, 1, 1, 0, 0}},
      {"l", {0, 0, 0, 1, 1}},   {"h", {0, 0, 0, 1, 1}},   {"~l", {1, 1, 1, 0, 0}}, {"~h", {1, 1, 1, 0, 0}},
      {"~e1", {1, 0, 0, 1, 1}}, {"~e2", {1, 0, 0, 1, 1}}};
  for (const auto& [s, w] : printed)
    expect(o, weight_of_formula(m, x, f(s), UpdateTag::d).counts == w, std::string("weight of ") + s);
  const std::vector<std::vector<const char*>> chain{{"~h", "~l"}, {"~e1", "~e2"}, {"~p"}, {"p"}, {"e1", "e2"},
                                                    {"h", "l"}};
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j)
      for (const char* a : chain[i])
        for (const char* b : chain[j]) {
          const auto c = cmp_xel(weight_of_formula(m, x, f(a), UpdateTag::d), weight_of_formula(m, x, f(b), UpdateTag::d));
          const bool ok = i < j ? c < 0 : i == j ? c == 0 : c > 0;
          expect(o, ok, std::string("order of ") + a + " and " + b);
        }
  if (o.pass) o.detail = "10 weights and the literal chain match";
  return o;
}

Outcome updates() {
  Outcome o;
  const SphereModel m = testing::fixture("nixon.sph");
  const WorldId x = m.world("x");
  const std::string a = format_chain(m, updated_chain(m, x, g("[e1, e2, ~e1, ~e2]"), UpdateTag::d));
  const std::string b = format_chain(m, updated_chain(m, x, g("[e1, e2, ~e1, ~e2, l, ~l]"), UpdateTag::d));
  expect(o, a == "{x} {x y1} {x y1 y2} {x v1 y1 y2} {x v1 v2 y1 y2}", "Gamma chain " + a);
  expect(o, b == format_chain(m, m.spheres(x)), "Gamma' chain " + b);
  if (o.pass) o.detail = "Gamma: " + a + "; Gamma': original chain";
  return o;
}

Outcome verdicts() {
  Outcome o;
  const SphereModel m = testing::fixture("nixon.sph");
  const WorldId x = m.world("x");
  expect(o, sat(m, x, f("p =>[e1, e2, ~e1, ~e2] h"), UpdateTag::d), "Gamma verdict");
  expect(o, !sat(m, x, f("p =>[e1, e2, ~e1, ~e2, l, ~l] h"), UpdateTag::d), "Gamma' verdict");
  const CpSet gam = g("[e1, e2, ~e1, ~e2]"), gam2 = g("[e1, e2, ~e1, ~e2, l, ~l]");
  const auto t = comparison_table(m, x,
                                  {{f("p"), f("h"), gam},
                                   {f("p"), f("h"), gam2},
                                   {f("p"), f("~h"), gam},
                                   {f("p"), f("~h"), gam2},
                                   {f("p"), f("h"), g("[e1, e2, l]")},
                                   {f("p"), f("h"), g("[~e1, ~e2, ~l]")}});
  const bool grid[4][4] = {{true, true, true, true},
                           {true, true, false, false},
                           {false, false, false, false},
                           {true, false, false, true}};
  for (int r = 0; r < 4; ++r) {
    const bool cells[4] = {t[r].cp, t[r].nc, t[r].ms, t[r].dis};
    for (int c = 0; c < 4; ++c) expect(o, cells[c] == grid[r][c], "grid row " + std::to_string(r) + " column " + std::to_string(c));
  }
  expect(o, !t[4].dis && t[5].dis, "unpaired rows");
  if (o.pass) o.detail = "Running-example verdicts, 16 grid cells and both unpaired rows match";
  return o;
}

Outcome weak_divergence() {
  Outcome o;
  const SphereModel m = testing::fixture("nixon_weak.sph");
  const WorldId x = m.world("x");
  const Formula a = f("p"), b = f("h");
  // The oracle picks the cp-set: first paired literal set on which its own
  // i and d verdicts differ.
  std::vector<CpSet> candidates;
  const std::vector<std::string> atoms{"e1", "e2", "l", "h", "p"};
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Formula ai = Formula::atom(atoms[i]);
    candidates.push_back(CpSet({ai, neg(ai)}));
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      const Formula aj = Formula::atom(atoms[j]);
      candidates.push_back(CpSet({ai, neg(ai), aj, neg(aj)}));
    }
  }
  for (const auto& gs : candidates) {
    const Formula q = Formula::counterfactual(a, gs, b);
    const bool od = oracle::sat(m, x, q, UpdateTag::d), oi = oracle::sat(m, x, q, UpdateTag::i);
    if (od == oi) continue;
    const bool ld = sat(m, x, q, UpdateTag::d), li = sat(m, x, q, UpdateTag::i);
    expect(o, ld == od && li == oi, "library disagrees with the oracle on " + print(q));
    expect(o, ld != li, "no d/i split in the library");
    if (o.pass)
      o.detail = print(q) + ": d=" + (ld ? "true" : "false") + " i=" + (li ? "true" : "false");
    return o;
  }
  expect(o, false, "the oracle finds no d/i split on the fixture");
  return o;
}

std::string flat(std::string text) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  for (std::size_t pos; (pos = text.find('\n')) != std::string::npos;) text.replace(pos, 1, "; ");
  return text;
}

constexpr std::size_t kNestedStride = 100;

// Formulas of modal depth at most 1 on every model.
SweepReport& centered_sweep() {
  static SweepReport r = [] {
    EnumerationBounds b;
    b.max_worlds = 3;
    SweepOptions o;
    o.corpus.nested_max_size = 0;
    o.direct_stride = 50;
    return theorem_sweep(b, o);
  }();
  return r;
}

// Formulas of modal depth 2 on every kNestedStride-th model.
SweepReport& nested_sweep() {
  static SweepReport r = [] {
    EnumerationBounds b;
    b.max_worlds = 3;
    SweepOptions o;
    o.corpus.min_modal_depth = 2;
    o.model_stride = kNestedStride;
    o.preservation = false;
    return theorem_sweep(b, o);
  }();
  return r;
}

std::string both(std::initializer_list<const char*> names) {
  const SweepReport& r = centered_sweep();
  const SweepReport& n = nested_sweep();
  return std::to_string(r.models) + " models x " + std::to_string(r.corpus_size) + " formulas: " + counts(r, names) +
         "| nested, " + std::to_string(n.models) + " models x " + std::to_string(n.corpus_size) +
         " formulas: " + counts(n, names);
}

Outcome theorems() {
  Outcome o;
  const auto names = {"a=d", "i=d", "gamma-max", "symmetry", "monotonicity", "duality", "complement"};
  o.pass = zero(centered_sweep(), names) && zero(nested_sweep(), {"a=d", "i=d"});
  o.detail = both(names);
  return o;
}

Outcome axioms() {
  Outcome o;
  const auto pool = axiom_pool({"p", "q"}, true);
  auto instances = [&](std::initializer_list<Schema> ss) {
    std::vector<AxiomInstance> out;
    for (Schema s : ss) {
      const auto part = axiom_instances(s, pool);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  };
  const auto weak_inst = instances({Schema::cpa, Schema::tr, Schema::co, Schema::w});
  const auto centered_inst = instances({Schema::c});
  EnumerationBounds weak;
  weak.centering = Centering::Weak;
  EnumerationBounds centered;
  std::ostringstream s;
  std::uint64_t cp_failures = 0;
  for (UpdateTag u : kAllTags) {
    const AxiomReport w = check_axioms(weak, AxiomSystem::VW, u, weak_inst);
    const AxiomReport c = check_axioms(centered, AxiomSystem::VC, u, centered_inst);
    expect(o, w.base_failures == 0, std::string("VW base failures under ") + to_string(u));
    expect(o, c.base_failures == 0, std::string("(c) base failures under ") + to_string(u));
    s << to_string(u) << ": " << w.checks + c.checks << " checks, " << w.base_failures + c.base_failures
      << " base failures; ";
    cp_failures += w.cp_failures + c.cp_failures;
  }
  s << "cp-instance failures (reported only): " << cp_failures;
  o.detail = s.str() + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome translation() {
  Outcome o;
  const SweepReport& r = centered_sweep();
  const SweepReport& n = nested_sweep();
  o.pass = zero(r, {"translation"}) && n.find("translation")->violations == 0 &&
           n.find("translation-nested")->violations == 0;
  o.detail = both({"translation", "translation-nested", "translation-a-i"});
  if (!o.pass) {
    for (const char* name : {"translation", "translation-nested"}) {
      const CheckTally* t = n.find(name);
      if (!t->witnesses.empty())
        o.detail += "; e.g. " + t->witnesses.front().formula + " at " + t->witnesses.front().world + " of " +
                    flat(t->witnesses.front().model);
    }
  }
  return o;
}

Outcome interdefinability() {
  Outcome o;
  o.pass = zero(centered_sweep(), {"interdefinability"}) && zero(nested_sweep(), {"interdefinability"});
  o.detail = both({"interdefinability"});
  return o;
}

Outcome preservation() {
  Outcome o;
  const SweepReport& r = centered_sweep();
  EnumerationBounds weak;
  weak.centering = Centering::Weak;
  SweepOptions only;
  only.theorems = only.interdefinability = only.translation = false;
  const SweepReport w = theorem_sweep(weak, only);
  o.pass = zero(r, {"preservation"}) && zero(w, {"preservation"});
  o.detail = "centered " + counts(r, {"preservation"}) + "weak " + counts(w, {"preservation"});
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "weight tables", 1, weights},
      {2, "update fixtures", 1, updates},
      {3, "verdict fixtures", 1, verdicts},
      {4, "weakly centered divergence", 1, weak_divergence},
      {5, "theorem sweeps", 600, theorems},
      {6, "axiom soundness sweep", 600, axioms},
      {7, "translation", 0, translation},
      {8, "interdefinability", 0, interdefinability},
      {9, "preservation", 0, preservation},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the time bound)";
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << " " << c.title << " ["
              << std::fixed << std::setprecision(2) << secs << " s] " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
