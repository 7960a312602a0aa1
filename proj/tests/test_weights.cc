#include <doctest.h>

#include <random>

#include "common.h"
#include "cpcf/search.h"
#include "cpcf/weights.h"
#include "oracle.h"

using namespace cpcf;
using testing::f;
using testing::g;

namespace {

FormulaWeight wx(const char* text) {
  static const SphereModel m = testing::fixture("nixon.sph");
  return weight_of_formula(m, m.world("x"), f(text), UpdateTag::d);
}

FormulaWeight fw(std::vector<std::uint32_t> c) { return FormulaWeight{std::move(c)}; }

}  // namespace

TEST_CASE("printed weights of the running example") {
  CHECK(wx("p") == fw({0, 1, 1, 1, 1}));
  CHECK(wx("~p") == fw({1, 0, 0, 0, 0}));
  CHECK(wx("e1") == fw({0, 1, 1, 0, 0}));
  CHECK(wx("e2") == fw({0, 1, 1, 0, 0}));
  CHECK(wx("l") == fw({0, 0, 0, 1, 1}));
  CHECK(wx("h") == fw({0, 0, 0, 1, 1}));
  CHECK(wx("~l") == fw({1, 1, 1, 0, 0}));
  CHECK(wx("~h") == fw({1, 1, 1, 0, 0}));
  CHECK(wx("~e1") == fw({1, 0, 0, 1, 1}));
  CHECK(wx("true") == fw({1, 1, 1, 1, 1}));
}

TEST_CASE("inverse lexicographic comparison") {
  CHECK(cmp_xel(wx("~h"), wx("~e1")) < 0);
  CHECK(cmp_xel(wx("~h"), wx("~h")) == 0);
  CHECK(cmp_xel(wx("h"), wx("e1")) > 0);
  CHECK_THROWS_AS(cmp_xel(fw({1, 0}), fw({1})), std::invalid_argument);

  // The full order of the ten literals, lightest first.
  const std::vector<std::vector<const char*>> chain{{"~h", "~l"}, {"~e1", "~e2"}, {"~p"}, {"p"}, {"e1", "e2"},
                                                    {"h", "l"}};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (const char* a : chain[i]) {
      for (std::size_t j = 0; j < chain.size(); ++j) {
        for (const char* b : chain[j]) {
          CAPTURE(a);
          CAPTURE(b);
          const auto c = cmp_xel(wx(a), wx(b));
          if (i < j) CHECK(c < 0);
          if (i == j) CHECK(c == 0);
          if (i > j) CHECK(c > 0);
        }
      }
    }
  }
}

TEST_CASE("significance") {
  const SphereModel m = testing::fixture("nixon.sph");
  const WorldId x = m.world("x");
  CHECK(cmp_significance(m, x, f("h"), f("e1"), UpdateTag::d) > 0);
  CHECK(cmp_significance(m, x, f("p"), f("p"), UpdateTag::d) == 0);
  // Hand evaluation: max{p,~p} = p = (0,1,1,1,1), max{e1,~e1} = e1 = (0,1,1,0,0); e1 is heavier.
  CHECK(cmp_significance(m, x, f("e1"), f("p"), UpdateTag::d) > 0);
}

TEST_CASE("weights of sets") {
  const SphereModel m = testing::fixture("nixon.sph");
  const WorldId x = m.world("x");
  const SetWeight w = weight_of_set(m, x, g("[e1, e2, ~e1, ~e2]"), UpdateTag::d);
  REQUIRE(w.parts.size() == 4);
  CHECK(w.parts[0] == wx("e1"));
  CHECK(w.parts[1] == wx("e2"));
  CHECK(w.parts[2] == wx("~e1"));
  CHECK(w.parts[3] == wx("~e2"));
  CHECK(weight_of_set(m, x, CpSet{}, UpdateTag::d).parts.empty());
  CHECK(weight_of_set(m, x, g("[h]"), UpdateTag::d).parts == std::vector<FormulaWeight>{fw({0, 0, 0, 1, 1})});

  const SetWeight ll = weight_of_set(m, x, g("[l, ~l]"), UpdateTag::d);
  CHECK(cmp_lex(ll, w) > 0);
  CHECK(cmp_lex(SetWeight{}, w) < 0);
  CHECK(cmp_lex(SetWeight{}, SetWeight{}) == 0);
}

TEST_CASE("properties over enumerated models") {
  EnumerationBounds b;
  b.max_worlds = 3;
  const ModelEnumeration models(b);
  const std::vector<Formula> pool{f("p"),     f("~p"),         f("q"),          f("~q"),    f("p & q"),
                                  f("p | q"), f("p & ~q"),     f("~p & ~q"),    f("true"),  f("false"),
                                  f("p =>[] q"), f("q <=[p, ~p] p")};
  std::mt19937_64 rng(7);
  std::size_t checked = 0;
  for (std::uint64_t idx = 0; idx < models.size(); idx += 53) {
    const SphereModel m = models.at(idx);
    for (WorldId x = 0; x < m.num_worlds(); ++x) {
      std::vector<FormulaWeight> ws;
      for (const auto& a : pool) {
        const FormulaWeight w = weight_of_formula(m, x, a, UpdateTag::d);
        CHECK(w.counts == oracle::weight(m, x, a, UpdateTag::d));
        ws.push_back(w);
      }
      // Totality and transitivity.
      for (const auto& a : ws)
        for (const auto& c : ws) {
          CHECK((cmp_xel(a, c) <= 0 || cmp_xel(c, a) <= 0));
          for (const auto& d : ws)
            if (cmp_xel(a, c) <= 0 && cmp_xel(c, d) <= 0) CHECK(cmp_xel(a, d) <= 0);
        }
      // Symmetry and complementary counts, shell by shell.
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          const auto c = cmp_xel(ws[i], ws[j]);
          const auto cd = cmp_xel(weight_of_formula(m, x, dual(pool[j]), UpdateTag::d),
                                  weight_of_formula(m, x, dual(pool[i]), UpdateTag::d));
          CHECK(c == cd);
        }
        const FormulaWeight wa = ws[i];
        const FormulaWeight wn = weight_of_formula(m, x, neg(pool[i]), UpdateTag::d);
        const FormulaWeight wt = weight_of_formula(m, x, top(), UpdateTag::d);
        for (std::size_t k = 0; k < wa.counts.size(); ++k) CHECK(wa.counts[k] + wn.counts[k] == wt.counts[k]);
      }
      // Monotonicity of set weights on random subset pairs.
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Formula> big, small;
        for (const auto& a : pool) {
          if (rng() % 2) {
            big.push_back(a);
            if (rng() % 2) small.push_back(a);
          }
        }
        const SetWeight ws_small = weight_of_set(m, x, CpSet(small), UpdateTag::d);
        const SetWeight ws_big = weight_of_set(m, x, CpSet(big), UpdateTag::d);
        CHECK(cmp_lex(ws_small, ws_big) <= 0);
        std::vector<FormulaWeight> parts;
        for (const auto& w : oracle::set_weight(m, x, CpSet(big).members(), UpdateTag::d)) parts.push_back(fw(w));
        CHECK(ws_big.parts == parts);
        ++checked;
      }
    }
  }
  CHECK(checked >= 200);
}
