#include "cpcf/model.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cpcf {

namespace {

std::atomic<std::uint64_t> next_generation{1};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Chain normalize_chain(Chain chain) {
  std::stable_sort(chain.begin(), chain.end(), [](WorldSet a, WorldSet b) { return a.size() < b.size(); });
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
  return chain;
}

SphereModel::SphereModel(std::vector<std::string> world_names, std::map<std::string, WorldSet> valuation,
                         std::vector<Chain> systems, Centering centering)
    : centering_(centering), generation_(next_generation++) {
  if (world_names.empty()) throw ModelError("model has no worlds");
  if (world_names.size() > kMaxWorlds) throw ModelError("model has more than 64 worlds");
  if (systems.size() != world_names.size()) throw ModelError("one sphere system per world is required");
  for (auto& c : systems) c = normalize_chain(std::move(c));
  frame_ = std::make_shared<const Frame>(Frame{std::move(world_names), std::move(valuation)});
  systems_ = std::make_shared<const std::vector<Chain>>(std::move(systems));
}

SphereModel::SphereModel(std::shared_ptr<const Frame> frame, std::shared_ptr<const std::vector<Chain>> systems,
                         Centering c)
    : frame_(std::move(frame)), systems_(std::move(systems)), centering_(c), generation_(next_generation++) {}

std::optional<WorldId> SphereModel::find_world(std::string_view name) const {
  const auto& names = frame_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<WorldId>(it - names.begin());
}

WorldId SphereModel::world(std::string_view name) const {
  if (auto w = find_world(name)) return *w;
  throw std::out_of_range("unknown world '" + std::string(name) + "'");
}

WorldSet SphereModel::valuation(const std::string& atom) const {
  auto it = frame_->valuation.find(atom);
  return it == frame_->valuation.end() ? WorldSet{} : it->second;
}

WorldSet SphereModel::reach(WorldId x) const {
  WorldSet u;
  for (WorldSet s : spheres(x)) u |= s;
  return u;
}

std::size_t SphereModel::rank(WorldId x, WorldId y) const {
  const Chain& c = spheres(x);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].contains(y)) return i;
  return c.size();
}

SphereModel SphereModel::with_spheres(WorldId x, Chain chain) const {
  auto systems = *systems_;
  systems.at(x) = normalize_chain(std::move(chain));
  return SphereModel(frame_, std::make_shared<const std::vector<Chain>>(std::move(systems)), centering_);
}

SphereModel SphereModel::with_systems(std::vector<Chain> systems) const {
  if (systems.size() != num_worlds()) throw ModelError("one sphere system per world is required");
  for (auto& c : systems) c = normalize_chain(std::move(c));
  return SphereModel(frame_, std::make_shared<const std::vector<Chain>>(std::move(systems)), centering_);
}

SphereModel SphereModel::with_centering(Centering c) const { return SphereModel(frame_, systems_, c); }

const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::NonEmptiness: return "non-emptiness";
    case Violation::Kind::Nesting: return "nesting";
    case Violation::Kind::Centering: return "centering";
    case Violation::Kind::UnknownWorld: return "unknown-world";
    case Violation::Kind::NoSpheres: return "no-spheres";
  }
  return "?";
}

const char* to_string(Centering c) { return c == Centering::Centered ? "centered" : "weak"; }

std::vector<Violation> validate(const SphereModel& m) {
  std::vector<Violation> out;
  const WorldSet all = m.worlds();
  for (const auto& [atom, ext] : m.valuation()) {
    if (!ext.subset_of(all)) {
      out.push_back({Violation::Kind::UnknownWorld, 0, "valuation of '" + atom + "' names an unknown world"});
    }
  }
  for (WorldId x = 0; x < m.num_worlds(); ++x) {
    const Chain& c = m.spheres(x);
    const std::string& xn = m.world_name(x);
    if (c.empty()) {
      out.push_back({Violation::Kind::NoSpheres, x, "S(" + xn + ") has no spheres"});
      continue;
    }
    for (WorldSet s : c) {
      if (s.empty()) out.push_back({Violation::Kind::NonEmptiness, x, "S(" + xn + ") contains the empty sphere"});
      if (!s.subset_of(all)) out.push_back({Violation::Kind::UnknownWorld, x, "S(" + xn + ") names an unknown world"});
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (!c[i].subset_of(c[i + 1])) {
        out.push_back({Violation::Kind::Nesting, x,
                       "S(" + xn + "): spheres " + format_set(m, c[i]) + " and " + format_set(m, c[i + 1]) +
                           " are not nested"});
      }
    }
    if (m.centering() == Centering::Centered) {
      if (c.front() != WorldSet::single(x)) {
        out.push_back({Violation::Kind::Centering, x,
                       "S(" + xn + "): innermost sphere " + format_set(m, c.front()) + " is not {" + xn + "}"});
      }
    } else {
      for (WorldSet s : c) {
        if (!s.contains(x)) {
          out.push_back({Violation::Kind::Centering, x,
                         "S(" + xn + "): sphere " + format_set(m, s) + " does not contain " + xn});
          break;
        }
      }
    }
  }
  return out;
}

// {{{ Model files

SphereModel load_model(std::string_view source) {
  std::optional<Centering> centering;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::vector<std::string>>> vals;
  std::vector<std::pair<std::string, std::string>> sphere_lines;
  std::size_t lineno = 0;

  auto fail = [&](const std::string& msg) -> ModelError {
    return ModelError("line " + std::to_string(lineno) + ": " + msg);
  };

  std::istringstream in{std::string(source)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw fail("expected 'key: value'");
    std::string key = trim(std::string_view(line).substr(0, colon));
    std::string value = trim(std::string_view(line).substr(colon + 1));
    auto key_words = split_words(key);
    if (key == "centering") {
      if (value == "centered") centering = Centering::Centered;
      else if (value == "weak") centering = Centering::Weak;
      else throw fail("centering must be 'centered' or 'weak'");
    } else if (key == "worlds") {
      if (!names.empty()) throw fail("duplicate 'worlds' line");
      names = split_words(value);
      if (names.empty()) throw fail("no worlds listed");
    } else if (key_words.size() == 2 && key_words[0] == "val") {
      vals.emplace_back(key_words[1], split_words(value));
    } else if (key_words.size() == 2 && key_words[0] == "spheres") {
      sphere_lines.emplace_back(key_words[1], value);
    } else {
      throw fail("unknown directive '" + key + "'");
    }
  }
  lineno = 0;
  if (!centering) throw ModelError("missing 'centering' line");
  if (names.empty()) throw ModelError("missing 'worlds' line");
  {
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ModelError("duplicate world name");
  }
  if (names.size() > kMaxWorlds) throw ModelError("more than 64 worlds");

  auto index_of = [&](const std::string& n) -> WorldId {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw ModelError("unknown world '" + n + "'");
    return static_cast<WorldId>(it - names.begin());
  };

  std::map<std::string, WorldSet> valuation;
  for (const auto& [atom, ws] : vals) {
    if (valuation.count(atom)) throw ModelError("duplicate valuation for '" + atom + "'");
    WorldSet s;
    for (const auto& w : ws) s.insert(index_of(w));
    valuation[atom] = s;
  }

  std::vector<Chain> systems(names.size());
  std::vector<bool> seen(names.size(), false);
  for (const auto& [owner, text] : sphere_lines) {
    WorldId x = index_of(owner);
    if (seen[x]) throw ModelError("duplicate spheres line for '" + owner + "'");
    seen[x] = true;
    std::size_t pos = 0;
    while (true) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size()) break;
      if (text[pos] != '{') throw ModelError("spheres " + owner + ": expected '{'");
      auto close = text.find('}', pos);
      if (close == std::string::npos) throw ModelError("spheres " + owner + ": missing '}'");
      WorldSet s;
      for (const auto& w : split_words(std::string_view(text).substr(pos + 1, close - pos - 1))) s.insert(index_of(w));
      systems[x].push_back(s);
      pos = close + 1;
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!seen[i]) throw ModelError("world '" + names[i] + "' has no spheres line");
  }

  SphereModel m(std::move(names), std::move(valuation), std::move(systems), *centering);
  auto violations = validate(m);
  if (!violations.empty()) {
    std::string msg = "invalid model:";
    for (const auto& v : violations) msg += std::string("\n  ") + to_string(v.kind) + ": " + v.message;
    throw ModelError(msg, std::move(violations));
  }
  return m;
}

SphereModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string format_set(const SphereModel& m, WorldSet s) {
  std::string out = "{";
  bool first = true;
  for (WorldId w : s.members()) {
    if (!first) out += ' ';
    first = false;
    out += w < m.num_worlds() ? m.world_name(w) : "#" + std::to_string(w);
  }
  return out + "}";
}

std::string format_chain(const SphereModel& m, const Chain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ' ';
    out += format_set(m, chain[i]);
  }
  return out;
}

std::string save_model(const SphereModel& m) {
  std::string out = std::string("centering: ") + to_string(m.centering()) + "\nworlds:";
  for (const auto& n : m.world_names()) out += " " + n;
  out += '\n';
  for (const auto& [atom, ext] : m.valuation()) {
    out += "val " + atom + ":";
    for (WorldId w : ext.members()) out += " " + m.world_name(w);
    out += '\n';
  }
  for (WorldId x = 0; x < m.num_worlds(); ++x) {
    out += "spheres " + m.world_name(x) + ": " + format_chain(m, m.spheres(x)) + "\n";
  }
  return out;
}

// }}}

}  // namespace cpcf
