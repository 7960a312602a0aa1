#include "cpcf/update.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cpcf/eval.h"

namespace cpcf {

Chain rank_chain(const Chain& chain, WorldId x, const std::vector<WorldSet>& member_ext, UpdateTag u,
                 Centering centering, UpdateTrace* trace) {
  WorldSet reach;
  for (WorldSet s : chain) reach |= s;

  std::vector<FormulaWeight> member_w;
  member_w.reserve(member_ext.size());
  for (WorldSet e : member_ext) member_w.push_back(weight_of_extension(chain, e));

  std::vector<RankRow> rows;
  for (WorldId y : reach.members()) {
    RankRow row{y, {}, {}, 0, 0};
    for (std::size_t k = 0; k < member_ext.size(); ++k) {
      const bool at_y = member_ext[k].contains(y);
      const bool at_x = member_ext[k].contains(x);
      bool in = false;
      switch (u) {
        case UpdateTag::i: in = at_y; break;
        case UpdateTag::d: in = at_x != at_y; break;
        case UpdateTag::a: in = at_x == at_y; break;
      }
      if (in) row.relevant.push_back(k);
    }
    std::vector<FormulaWeight> parts;
    for (std::size_t k : row.relevant) parts.push_back(member_w[k]);
    row.weight = make_set_weight(std::move(parts));
    while (!chain[row.origrank].contains(y)) ++row.origrank;
    rows.push_back(std::move(row));
  }

  const bool descending = u == UpdateTag::a;
  auto key_cmp = [&](const RankRow& l, const RankRow& r) {
    auto c = cmp_lex(l.weight, r.weight);
    if (c != 0) return descending ? c > 0 : c < 0;
    return l.origrank < r.origrank;
  };
  std::stable_sort(rows.begin(), rows.end(), key_cmp);

  Chain out;
  WorldSet acc;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && key_cmp(rows[i - 1], rows[i])) {
      out.push_back(acc);
    }
    rows[i].level = out.size();
    acc.insert(rows[i].world);
  }
  if (!acc.empty()) out.push_back(acc);

  bool forced = false;
  if (centering == Centering::Weak && u == UpdateTag::i && !out.empty() && !out.front().contains(x)) {
    forced = true;
    for (WorldSet& s : out) s.insert(x);
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  if (trace) {
    trace->rows = std::move(rows);
    trace->chain = out;
    trace->x_forced = forced;
    if (forced) {
      for (auto& r : trace->rows) {
        std::size_t lvl = 0;
        while (!out[lvl].contains(r.world)) ++lvl;
        r.level = lvl;
      }
    }
  }
  return out;
}

namespace {

std::vector<WorldSet> member_extensions(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u) {
  if (x >= m.num_worlds()) throw std::out_of_range("unknown world");
  const WorldSet where = m.reach(x) | WorldSet::single(x);
  std::vector<WorldSet> out;
  for (const auto& member : g) out.push_back(extension(m, member, u, where));
  return out;
}

}  // namespace

Chain updated_chain(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u) {
  return rank_chain(m.spheres(x), x, member_extensions(m, x, g, u), u, m.centering());
}

SphereModel update(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u) {
  return m.with_spheres(x, updated_chain(m, x, g, u));
}

UpdateTrace update_trace(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u) {
  UpdateTrace t;
  t.members = g.members();
  rank_chain(m.spheres(x), x, member_extensions(m, x, g, u), u, m.centering(), &t);
  return t;
}

std::string format_update_trace(const SphereModel& m, const UpdateTrace& t, UpdateTag u) {
  const char* set_name = u == UpdateTag::i ? "forcing" : u == UpdateTag::a ? "agreement" : "disagreement";
  std::string out = std::string("world\t") + set_name + "\tweight\torigrank\tlevel\n";
  for (const auto& r : t.rows) {
    std::vector<Formula> rel;
    for (std::size_t k : r.relevant) rel.push_back(t.members[k]);
    out += m.world_name(r.world) + "\t" + print(CpSet(rel)) + "\t" + to_string(r.weight) + "\t" +
           std::to_string(r.origrank) + "\t" + std::to_string(r.level) + "\n";
  }
  if (t.x_forced) out += "note: x inserted into every sphere\n";
  return out;
}

}  // namespace cpcf
