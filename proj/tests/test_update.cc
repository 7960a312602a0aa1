#include <doctest.h>

#include "common.h"
#include "cpcf/search.h"
#include "cpcf/update.h"
#include "oracle.h"

using namespace cpcf;
using testing::f;
using testing::g;

namespace {

std::string chain_text(const SphereModel& m, const CpSet& gs, UpdateTag u) {
  return format_chain(m, updated_chain(m, m.world("x"), gs, u));
}

}  // namespace

TEST_CASE("disagreement updates of the running example") {
  const SphereModel m = testing::fixture("nixon.sph");
  CHECK(chain_text(m, g("[e1, e2, ~e1, ~e2]"), UpdateTag::d) == "{x} {x y1} {x y1 y2} {x v1 y1 y2} {x v1 v2 y1 y2}");
  CHECK(chain_text(m, g("[e1, e2, ~e1, ~e2, l, ~l]"), UpdateTag::d) == format_chain(m, m.spheres(m.world("x"))));
  for (UpdateTag u : kAllTags) CHECK(chain_text(m, CpSet{}, u) == format_chain(m, m.spheres(m.world("x"))));
}

TEST_CASE("update leaves other worlds and the input alone") {
  const SphereModel m = testing::fixture("nixon.sph");
  const WorldId x = m.world("x");
  const SphereModel n = update(m, x, g("[e1, e2, ~e1, ~e2]"), UpdateTag::d);
  CHECK(m.spheres(x).size() == 5);
  CHECK(format_chain(m, m.spheres(x)) == "{x} {x v1} {x v1 v2} {x v1 v2 y1} {x v1 v2 y1 y2}");
  for (WorldId y = 1; y < m.num_worlds(); ++y) CHECK(n.spheres(y) == m.spheres(y));
  CHECK(validate(n).empty());
}

TEST_CASE("trace rows follow the disagreement-weight order") {
  const SphereModel m = testing::fixture("nixon.sph");
  const UpdateTrace t = update_trace(m, m.world("x"), g("[e1, e2, ~e1, ~e2]"), UpdateTag::d);
  REQUIRE(t.rows.size() == 5);
  std::vector<std::string> order;
  for (const auto& r : t.rows) order.push_back(m.world_name(r.world));
  CHECK(order == std::vector<std::string>{"x", "y1", "y2", "v1", "v2"});
  CHECK(t.rows[0].relevant.empty());
  CHECK(t.rows[3].relevant.size() == 4);
  CHECK(t.rows[3].origrank == 1);
  CHECK_FALSE(t.x_forced);
  const std::string text = format_update_trace(m, t, UpdateTag::d);
  CHECK(text.rfind("world\tdisagreement\tweight\torigrank\tlevel\n", 0) == 0);
}

TEST_CASE("weak i-update forces x inward") {
  const SphereModel m = testing::fixture("nixon_weak.sph");
  const UpdateTrace t = update_trace(m, m.world("x"), g("[e1, ~e1]"), UpdateTag::i);
  CHECK(t.x_forced);
  for (WorldSet s : t.chain) CHECK(s.contains(m.world("x")));
  CHECK(format_update_trace(m, t, UpdateTag::i).find("x inserted into every sphere") != std::string::npos);
  CHECK(validate(m.with_spheres(m.world("x"), t.chain)).empty());
}

TEST_CASE("single world") {
  const SphereModel m = load_model("centering: centered\nworlds: x\nval p: x\nspheres x: {x}\n");
  const UpdateTrace t = update_trace(m, 0, g("[p, ~p]"), UpdateTag::d);
  CHECK(t.rows.size() == 1);
  CHECK(t.chain == Chain{WorldSet::single(0)});
}

TEST_CASE("ranking agrees with the threshold construction") {
  const std::vector<CpSet> sets{g("[p, ~p]"), g("[q, ~q]"), g("[p, ~p, q, ~q]"), g("[p & q, ~(p & q)]"),
                                g("[p, ~p, (p =>[] q), ~(p =>[] q)]")};
  for (Centering c : {Centering::Centered, Centering::Weak}) {
    EnumerationBounds b;
    b.max_worlds = 3;
    b.centering = c;
    const ModelEnumeration models(b);
    const std::uint64_t stride = c == Centering::Centered ? 7 : 41;
    for (std::uint64_t idx = 0; idx < models.size(); idx += stride) {
      const SphereModel m = models.at(idx);
      for (WorldId x = 0; x < m.num_worlds(); ++x)
        for (const auto& gs : sets)
          for (UpdateTag u : kAllTags) {
            const Chain got = updated_chain(m, x, gs, u);
            const Chain want = oracle::updated_chain(m, x, gs.members(), u);
            CAPTURE(save_model(m));
            CAPTURE(print(gs));
            CAPTURE(to_string(u));
            CHECK(format_chain(m, got) == format_chain(m, want));
            CHECK(validate(m.with_spheres(x, got)).empty());
          }
    }
  }
}

TEST_CASE("weakly centered fixtures against the threshold construction") {
  for (const char* name : {"nixon_weak.sph", "nixon_weak_alt.sph"}) {
    const SphereModel m = testing::fixture(name);
    for (UpdateTag u : kAllTags) {
      const WorldId x = m.world("x");
      CHECK(format_chain(m, updated_chain(m, x, g("[e1, ~e1]"), u)) ==
            format_chain(m, oracle::updated_chain(m, x, g("[e1, ~e1]").members(), u)));
    }
  }
}
