#include <doctest.h>

#include "common.h"
#include "cpcf/eval.h"
#include "cpcf/search.h"
#include "cpcf/update.h"
#include "oracle.h"

using namespace cpcf;
using testing::f;
using testing::g;

namespace {

bool at_x(const char* model, const char* formula, UpdateTag u = UpdateTag::d) {
  const SphereModel m = testing::fixture(model);
  return sat(m, m.world("x"), f(formula), u);
}

}  // namespace

TEST_CASE("verdicts of the running example") {
  CHECK(at_x("nixon.sph", "p =>[e1,e2,~e1,~e2] h"));
  CHECK_FALSE(at_x("nixon.sph", "p =>[e1,e2,~e1,~e2,l,~l] h"));
  CHECK_FALSE(at_x("nixon.sph", "p =>[] h"));
  CHECK(at_x("nixon.sph", "false =>[e1,e2,~e1,~e2] h"));
  CHECK(at_x("nixon.sph", "false =>[l, ~l] ~h"));
  CHECK(at_x("nixon.sph", "(p <=[] q) | (q <=[] p)"));
  CHECK(at_x("nixon.sph", "true"));
}

TEST_CASE("weakly centered fixtures split i and d") {
  CHECK_FALSE(at_x("nixon_weak.sph", "p =>[e1, ~e1] h", UpdateTag::d));
  CHECK(at_x("nixon_weak.sph", "p =>[e1, ~e1] h", UpdateTag::i));
  CHECK(at_x("nixon_weak_alt.sph", "p =>[e1, ~e1] h", UpdateTag::d));
  CHECK_FALSE(at_x("nixon_weak_alt.sph", "p =>[e1, ~e1] h", UpdateTag::i));
}

TEST_CASE("unpaired cp-sets are rejected") {
  const SphereModel m = testing::fixture("nixon.sph");
  CHECK_THROWS_AS(sat(m, 0, f("p =>[e1] h"), UpdateTag::d), EvalError);
}

TEST_CASE("validity") {
  const SphereModel m = testing::fixture("nixon.sph");
  CHECK(valid_in_model(m, f("true"), UpdateTag::d));
  CHECK_FALSE(valid_in_model(m, f("p"), UpdateTag::d));
  CHECK(valid_in_model(m, f("(p <=[] q) | (q <=[] p)"), UpdateTag::d));
}

TEST_CASE("lewis clauses") {
  const Chain c{WorldSet(0b001), WorldSet(0b011), WorldSet(0b111)};
  CHECK(lewis_counterfactual(c, WorldSet{}, WorldSet{}));
  CHECK(lewis_counterfactual(c, WorldSet(0b110), WorldSet(0b010)));
  CHECK_FALSE(lewis_counterfactual(c, WorldSet(0b110), WorldSet(0b100)));
  CHECK(lewis_plausibility(c, WorldSet(0b010), WorldSet(0b100)));
  CHECK_FALSE(lewis_plausibility(c, WorldSet(0b100), WorldSet(0b010)));
  CHECK(lewis_plausibility(c, WorldSet{}, WorldSet{}));
}

TEST_CASE("trace tree") {
  const SphereModel m = testing::fixture("nixon.sph");
  EvalStep step;
  CHECK(sat(m, 0, f("p =>[e1,e2,~e1,~e2] h"), UpdateTag::d, &step));
  CHECK(step.verdict);
  CHECK_FALSE(step.spheres.empty());
  CHECK(format_trace(m, step).find("{x} {x y1}") != std::string::npos);
}

TEST_CASE("variants agree without nested cp-operators") {
  const SphereModel m = testing::fixture("nixon.sph");
  for (const char* s : {"p =>[] h", "p & ~h", "p =>[e1,e2,~e1,~e2] h", "~l <=[l, ~l] p"}) {
    for (WorldId x = 0; x < m.num_worlds(); ++x) {
      const Formula fm = f(s);
      const bool b = sat_variant(m, x, fm, UpdateTag::d, Variant::b);
      CHECK(sat_variant(m, x, fm, UpdateTag::d, Variant::a) == b);
      CHECK(sat(m, x, fm, UpdateTag::d) == b);
      if (cpl(fm) == 0) CHECK(sat_variant(m, x, fm, UpdateTag::d, Variant::c) == b);
    }
  }
}

TEST_CASE("nested cp-operators separate variants a and b") {
  CorpusOptions o;
  o.max_size = 5;
  std::vector<Formula> nested;
  const Formula p = f("p"), q = f("q");
  for (const auto& inner : {f("p =>[q, ~q] q"), f("~p =>[q, ~q] q"), f("q <=[p, ~p] p")})
    for (const auto& gs : {g("[p, ~p]"), g("[q, ~q]")}) {
      nested.push_back(Formula::counterfactual(p, gs, inner));
      nested.push_back(Formula::counterfactual(q, gs, inner));
      nested.push_back(Formula::counterfactual(inner, gs, p));
    }
  EnumerationBounds b;
  b.max_worlds = 3;
  const auto w = find_variant_divergence(nested, b, UpdateTag::d);
  REQUIRE(w.has_value());
  CHECK(w->a != w->b);
  CHECK(sat_variant(w->model, w->world, w->formula, UpdateTag::d, Variant::a) == w->a);
  CHECK(sat_variant(w->model, w->world, w->formula, UpdateTag::d, Variant::b) == w->b);
}

TEST_CASE("satisfaction matches the reference evaluator") {
  CorpusOptions o;
  o.max_size = 5;
  std::vector<Formula> corpus = generate_corpus(o);
  // Nesting, cp-operators inside cp-sets and compound members.
  for (const char* s : {"p =>[q, ~q] (q <=[p, ~p] ~p)", "(p <=[q, ~q] q) =>[p, ~p] q",
                        "p =>[(p =>[] q), ~(p =>[] q)] q", "q <=[p & q, p -> ~q] p",
                        "~(p =>[p, ~p, q, ~q] (q =>[q, ~q] p))"})
    corpus.push_back(f(s));
  for (Centering c : {Centering::Centered, Centering::Weak}) {
    EnumerationBounds b;
    b.max_worlds = 3;
    b.centering = c;
    const ModelEnumeration models(b);
    const std::uint64_t stride = c == Centering::Centered ? 211 : 1307;
    for (std::uint64_t idx = 0; idx < models.size(); idx += stride) {
      const SphereModel m = models.at(idx);
      for (UpdateTag u : kAllTags) {
        ExtensionEvaluator ev(u);
        for (std::size_t k = 0; k < corpus.size(); k += 7) {
          const Formula& fm = corpus[k];
          const WorldSet want = oracle::ext(m, fm, u);
          CAPTURE(save_model(m));
          CAPTURE(print(fm));
          CAPTURE(to_string(u));
          CHECK(ev.extension(m, fm) == want);
          CHECK(extension(m, fm, u, m.worlds()) == want);
        }
      }
    }
  }
}

TEST_CASE("vacuity after the update") {
  EnumerationBounds b;
  b.max_worlds = 3;
  const ModelEnumeration models(b);
  for (std::uint64_t idx = 0; idx < models.size(); idx += 131) {
    const SphereModel m = models.at(idx);
    for (WorldId x = 0; x < m.num_worlds(); ++x) {
      const CpSet gs = g("[q, ~q]");
      const SphereModel n = update(m, x, gs, UpdateTag::d);
      const Formula a = f("p & ~q");
      if ((extension(n, a, UpdateTag::d, m.worlds()) & n.reach(x)).empty()) {
        CHECK(sat(m, x, Formula::counterfactual(a, gs, f("false")), UpdateTag::d));
      }
    }
  }
}
