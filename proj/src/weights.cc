#include "cpcf/weights.h"

#include <algorithm>
#include <stdexcept>

#include "cpcf/eval.h"

namespace cpcf {

FormulaWeight weight_of_extension(const Chain& chain, WorldSet ext) {
  FormulaWeight w;
  w.counts.reserve(chain.size());
  WorldSet inner;
  for (WorldSet sphere : chain) {
    w.counts.push_back(static_cast<std::uint32_t>(((sphere - inner) & ext).size()));
    inner = sphere;
  }
  return w;
}

FormulaWeight weight_of_formula(const SphereModel& m, WorldId x, const Formula& a, UpdateTag u) {
  if (x >= m.num_worlds()) throw std::out_of_range("unknown world");
  return weight_of_extension(m.spheres(x), extension(m, a, u, m.reach(x)));
}

std::strong_ordering cmp_xel(const FormulaWeight& wa, const FormulaWeight& wb) {
  if (wa.counts.size() != wb.counts.size()) throw std::invalid_argument("weights of different length");
  return std::lexicographical_compare_three_way(wb.counts.begin(), wb.counts.end(), wa.counts.begin(),
                                                wa.counts.end());
}

std::strong_ordering cmp_significance(const SphereModel& m, WorldId x, const Formula& a, const Formula& b,
                                      UpdateTag u) {
  auto heavier = [&](const Formula& f) {
    FormulaWeight w = weight_of_formula(m, x, f, u);
    FormulaWeight wd = weight_of_formula(m, x, dual(f), u);
    return cmp_xel(w, wd) < 0 ? wd : w;
  };
  return cmp_xel(heavier(a), heavier(b));
}

SetWeight make_set_weight(std::vector<FormulaWeight> parts) {
  std::stable_sort(parts.begin(), parts.end(),
                   [](const FormulaWeight& l, const FormulaWeight& r) { return cmp_xel(l, r) > 0; });
  return SetWeight{std::move(parts)};
}

SetWeight weight_of_set(const SphereModel& m, WorldId x, const CpSet& g, UpdateTag u) {
  std::vector<FormulaWeight> parts;
  for (const auto& member : g) parts.push_back(weight_of_formula(m, x, member, u));
  return make_set_weight(std::move(parts));
}

std::strong_ordering cmp_lex(const SetWeight& wg, const SetWeight& wd) {
  const std::size_t n = std::min(wg.parts.size(), wd.parts.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cmp_xel(wg.parts[i], wd.parts[i]); c != 0) return c;
  }
  return wg.parts.size() <=> wd.parts.size();
}

std::string to_string(const FormulaWeight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.counts[i]);
  }
  return out + ")";
}

std::string to_string(const SetWeight& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w.parts[i]);
  }
  return out + "]";
}

}  // namespace cpcf
