#include "cpcf/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "cpcf/arena.h"
#include "cpcf/cpsets.h"
#include "cpcf/eval.h"
#include "cpcf/formula.h"
#include "cpcf/model.h"
#include "cpcf/search.h"
#include "cpcf/translate.h"
#include "cpcf/update.h"
#include "cpcf/weights.h"

#ifndef CPCF_FIXTURE_DIR
#define CPCF_FIXTURE_DIR "fixtures"
#endif

namespace cpcf::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, jsonlines };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"jsonlines", Format::jsonlines}};
const std::map<std::string, UpdateTag> kTags{{"i", UpdateTag::i}, {"a", UpdateTag::a}, {"d", UpdateTag::d}};
const std::map<std::string, Variant> kVariants{{"a", Variant::a}, {"b", Variant::b}, {"c", Variant::c}};
const std::map<std::string, Centering> kCenterings{{"centered", Centering::Centered}, {"weak", Centering::Weak}};

// Relative paths that do not exist are looked up in the fixture directory.
SphereModel load(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) {
    const fs::path alt = fs::path(CPCF_FIXTURE_DIR) / path;
    if (fs::path(path).is_relative() && fs::exists(alt)) return load_model_file(alt.string());
  }
  return load_model_file(path);
}

WorldId world_of(const SphereModel& m, const std::string& name) {
  if (auto w = m.find_world(name)) return *w;
  throw UsageError("unknown world '" + name + "'");
}

std::string one_line(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '\n') {
      if (!out.empty() && out.back() != ';') out += "; ";
    } else {
      out += c;
    }
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Formula> default_literals(const SphereModel& m) {
  std::vector<Formula> out;
  for (const auto& [atom, ext] : m.valuation()) {
    out.push_back(Formula::atom(atom));
    out.push_back(neg(Formula::atom(atom)));
  }
  return out;
}

// Formulas grouped by weight, lightest first: "a = b < c".
std::string weight_chain(const SphereModel& m, WorldId x, const std::vector<Formula>& fs, UpdateTag u) {
  std::vector<std::pair<FormulaWeight, std::string>> rows;
  for (const auto& f : fs) rows.emplace_back(weight_of_formula(m, x, f, u), print(f));
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& l, const auto& r) { return cmp_xel(l.first, r.first) < 0; });
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += rows[i - 1].first == rows[i].first ? " = " : " < ";
    out += rows[i].second;
  }
  return out;
}

ComparisonRow comparison_row(const Formula& f) {
  if (f.kind() != Kind::Counterfactual) throw UsageError("compare expects counterfactuals, got " + print(f));
  return ComparisonRow{f.lhs(), f.rhs(), f.cpset()};
}

json comparison_json(const ComparisonRow& r) {
  return json{{"cp", r.cp}, {"nc", r.nc}, {"ms", r.ms}, {"dis", r.dis}};
}

// ---------------------------------------------------------------------------
// Subcommands

struct EvalArgs {
  std::string model, world, formula, update = "d", variant;
  bool trace = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const SphereModel m = load(a.model);
  const WorldId x = world_of(m, a.world);
  const Formula f = parse(a.formula);
  const UpdateTag u = kTags.at(a.update);
  EvalStep step;
  EvalStep* tp = a.trace ? &step : nullptr;
  const bool v = a.variant.empty() ? sat(m, x, f, u, tp) : sat_variant(m, x, f, u, kVariants.at(a.variant), tp);
  if (a.trace) out << format_trace(m, step);
  out << (v ? "true" : "false") << "\n";
  return v ? kExitOk : kExitFalse;
}

struct WeightsArgs {
  std::string model, world, update = "d";
  std::vector<std::string> formulas;
};

int cmd_weights(const WeightsArgs& a, std::ostream& out) {
  const SphereModel m = load(a.model);
  const WorldId x = world_of(m, a.world);
  const UpdateTag u = kTags.at(a.update);
  std::vector<Formula> fs;
  for (const auto& s : a.formulas) fs.push_back(parse(s));
  if (fs.empty()) fs = default_literals(m);
  out << "formula\tweight\n";
  for (const auto& f : fs) out << print(f) << "\t" << to_string(weight_of_formula(m, x, f, u)) << "\n";
  out << "chain: " << weight_chain(m, x, fs, u) << "\n";
  return kExitOk;
}

struct ProfileArgs {
  std::string model, world, cpset, update = "d";
};

int cmd_profile(const ProfileArgs& a, std::ostream& out) {
  const SphereModel m = load(a.model);
  const WorldId x = world_of(m, a.world);
  const CpSet g = parse_cpset(a.cpset);
  const UpdateTag u = kTags.at(a.update);
  out << "world\tforcing\tweight\tagreement\tweight\tdisagreement\tweight\n";
  WorldSet where = m.reach(x);
  where.insert(x);
  for (WorldId y : where.members()) {
    const WorldProfile p = profile(m, x, y, g, u);
    out << m.world_name(y);
    for (const CpSet* s : {&p.forcing, &p.agreement, &p.disagreement})
      out << "\t" << print(*s) << "\t" << to_string(weight_of_set(m, x, *s, u));
    out << "\n";
  }
  if (is_paired(g)) {
    out << "forcing complement: " << print(forcing_complement(m, x, g, u)) << "\n";
    out << "maximal cp-set: " << print(maximal_cp_set(m, x, g, u)) << "\n";
  }
  return kExitOk;
}

struct UpdateArgs {
  std::string model, world, cpset, update = "d";
  bool trace = false, all = false;
};

int cmd_update_dump(const UpdateArgs& a, std::ostream& out) {
  const SphereModel m = load(a.model);
  const WorldId x = world_of(m, a.world);
  const CpSet g = parse_cpset(a.cpset);
  const UpdateTag u = kTags.at(a.update);
  const UpdateTrace t = update_trace(m, x, g, u);
  if (a.trace) {
    std::istringstream lines(format_update_trace(m, t, u));
    for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  }
  const SphereModel next = m.with_spheres(x, t.chain);
  if (!validate(next).empty()) throw InternalError("updated model fails validation");
  if (a.all) {
    out << save_model(next);
  } else {
    out << "spheres " << m.world_name(x) << ": " << format_chain(m, t.chain) << "\n";
  }
  return kExitOk;
}

struct TranslateArgs {
  std::string model, world, formula, update = "d";
};

int cmd_translate(const TranslateArgs& a, std::ostream& out) {
  const SphereModel m = load(a.model);
  const WorldId x = world_of(m, a.world);
  const Formula f = parse(a.formula);
  const UpdateTag u = kTags.at(a.update);
  StarStats stats;
  const Formula t = star(m, x, rewrite_cf_to_pl(f), u, &stats);
  const bool before = sat(m, x, f, u);
  const bool after = sat(m, x, t, u);
  out << "# model-relative translation: claimed to agree with the input only at world " << a.world << " of "
      << a.model << "\n";
  out << print(t) << "\n";
  out << "certificate: model=" << a.model << " world=" << a.world << " update=" << a.update
      << " input=" << (before ? "true" : "false") << " output=" << (after ? "true" : "false")
      << " cpl=" << cpl(t) << " size=" << primitive_size(t) << " replacements=" << stats.replacements << "\n";
  if (before != after || cpl(t) != 0) throw InternalError("translation does not preserve the verdict");
  return kExitOk;
}

struct SweepArgs {
  std::size_t max_worlds = 3, max_size = 7, nested_size = 5, direct_stride = 0, model_stride = 1, keep = 5;
  bool nested_only = false;
  std::string atoms = "p,q", centering = "centered", update, suite = "theorems", format = "text";
};

void emit_witness(std::ostream& out, Format fmt, const std::string& suite, const std::string& check,
                  const std::string& model, const std::string& world, const std::string& formula,
                  const std::string& detail, bool asserted) {
  if (fmt == Format::jsonlines) {
    json j{{"suite", suite}, {"check", check}, {"model", model}, {"world", world}, {"formula", formula},
           {"asserted", asserted}};
    if (!detail.empty()) j["detail"] = detail;
    out << j.dump() << "\n";
  } else {
    out << "violation\t" << check << "\t" << one_line(model) << "\t" << world << "\t" << formula;
    if (!detail.empty()) out << "\t" << detail;
    out << (asserted ? "" : "\t(logged)") << "\n";
  }
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  EnumerationBounds b;
  b.max_worlds = a.max_worlds;
  b.atoms = split_list(a.atoms);
  b.centering = kCenterings.at(a.centering);
  if (b.atoms.empty()) throw UsageError("--atoms needs at least one atom");
  const Format fmt = kFormats.at(a.format);
  std::vector<UpdateTag> tags(std::begin(kAllTags), std::end(kAllTags));
  if (!a.update.empty()) tags = {kTags.at(a.update)};
  const auto started = std::chrono::steady_clock::now();
  bool ok = true;

  if (a.suite == "theorems") {
    SweepOptions o;
    o.corpus.atoms = b.atoms;
    o.corpus.max_size = a.max_size;
    o.direct_stride = a.direct_stride;
    o.model_stride = a.model_stride;
    if (a.nested_only) o.corpus.min_modal_depth = 2;
    o.corpus.nested_max_size = a.nested_size;
    o.keep = a.keep;
    const SweepReport r = theorem_sweep(b, o);
    for (const auto& c : r.checks)
      for (const auto& w : c.witnesses)
        emit_witness(out, fmt, a.suite, c.name, w.model, w.world, w.formula, w.detail, c.asserted);
    if (fmt == Format::jsonlines) {
      json counts = json::object();
      for (const auto& c : r.checks) counts[c.name] = {{"checked", c.checked}, {"violations", c.violations}};
      out << json{{"suite", a.suite}, {"models", r.models}, {"corpus", r.corpus_size}, {"checks", counts},
                  {"ok", r.ok()}}.dump()
          << "\n";
    } else {
      out << format_report(r);
    }
    ok = r.ok();
  } else if (a.suite == "axioms") {
    const AxiomSystem system = b.centering == Centering::Centered ? AxiomSystem::VC : AxiomSystem::VW;
    const auto pool = axiom_pool(b.atoms, true);
    std::vector<AxiomInstance> instances;
    for (Schema s : schemata(system)) {
      auto part = axiom_instances(s, pool);
      instances.insert(instances.end(), part.begin(), part.end());
    }
    for (UpdateTag u : tags) {
      const AxiomReport r = check_axioms(b, system, u, instances, a.keep);
      for (const auto& f : r.failures)
        emit_witness(out, fmt, a.suite, to_string(f.schema), f.model, f.world, f.formula, "", f.base);
      if (fmt == Format::jsonlines) {
        out << json{{"suite", a.suite},
                    {"system", to_string(system)},
                    {"update", to_string(u)},
                    {"models", r.models},
                    {"checks", r.checks},
                    {"base_failures", r.base_failures},
                    {"cp_failures", r.cp_failures}}
                   .dump()
            << "\n";
      } else {
        out << to_string(system) << " update " << to_string(u) << ": models " << r.models << ", checks " << r.checks
            << ", base failures " << r.base_failures << ", cp failures " << r.cp_failures << " (logged)\n";
      }
      ok = ok && r.base_failures == 0;
    }
  } else if (a.suite == "variants") {
    CorpusOptions co;
    co.atoms = b.atoms;
    co.max_size = a.max_size;
    const auto corpus = generate_corpus(co);
    for (UpdateTag u : tags) {
      const auto w = find_variant_divergence(corpus, b, u);
      if (fmt == Format::jsonlines) {
        json j{{"suite", a.suite}, {"update", to_string(u)}, {"divergence", bool(w)}};
        if (w) {
          j["model"] = save_model(w->model);
          j["world"] = w->model.world_name(w->world);
          j["formula"] = print(w->formula);
          j["variants"] = {{"a", w->a}, {"b", w->b}, {"c", w->c}};
        }
        out << j.dump() << "\n";
      } else if (w) {
        out << "update " << to_string(u) << ": variants differ at model#" << w->index << " world "
            << w->model.world_name(w->world) << " formula " << print(w->formula) << " (a=" << w->a
            << " b=" << w->b << " c=" << w->c << ")\t" << one_line(save_model(w->model)) << "\n";
      } else {
        out << "update " << to_string(u) << ": no divergence\n";
      }
    }
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - started;
  err << "sweep finished in " << took.count() << " s\n";
  return ok ? kExitOk : kExitFalse;
}

struct CompareArgs {
  std::string model, world;
  std::vector<std::string> formulas;
  bool nc_demo = false;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  const SphereModel m = load(a.model);
  const WorldId x = world_of(m, a.world);
  std::vector<ComparisonRow> rows;
  for (const auto& s : a.formulas) rows.push_back(comparison_row(parse(s)));
  const auto table = comparison_table(m, x, rows);
  out << format_comparison_table(table);
  if (a.nc_demo) {
    std::vector<CpSet> seen;
    for (const auto& r : table) {
      if (!r.paired || std::find(seen.begin(), seen.end(), r.cpset) != seen.end()) continue;
      seen.push_back(r.cpset);
      std::vector<std::pair<Formula, Formula>> pairs;
      for (const auto& s : table)
        if (s.cpset == r.cpset) pairs.emplace_back(s.antecedent, s.consequent);
      const NcDemoReport d = nc_as_agreement_demo(m, x, r.cpset, pairs);
      out << "naive counting " << print(r.cpset) << ": " << format_chain(m, d.naive_chain) << "\n";
      out << "agreement with companions: " << format_chain(m, d.agreement_chain) << "\n";
      out << "chains " << (d.chains_equal ? "equal" : "differ") << ", verdicts "
          << (d.verdicts_equal ? "equal" : "differ") << "\n";
    }
  }
  return kExitOk;
}

struct FixturesArgs {
  std::string dir = CPCF_FIXTURE_DIR, format = "text";
};

struct FixtureResult {
  json expected;
  json actual;
  bool pass;
};

FixtureResult run_fixture(const json& fx, const std::string& dir) {
  const std::string kind = fx.at("kind");
  const SphereModel m = load_model_file((std::filesystem::path(dir) / fx.at("model").get<std::string>()).string());
  const WorldId x = world_of(m, fx.at("world"));
  const UpdateTag u = kTags.at(fx.value("update", "d"));
  const json& expected = fx.at("expected");
  json actual;
  if (kind == "weight") {
    actual = weight_of_formula(m, x, parse(fx.at("formula").get<std::string>()), u).counts;
  } else if (kind == "weight-chain") {
    std::vector<Formula> fs;
    for (const auto& s : fx.at("formulas")) fs.push_back(parse(s.get<std::string>()));
    actual = weight_chain(m, x, fs, u);
  } else if (kind == "update") {
    actual = format_chain(m, updated_chain(m, x, parse_cpset(fx.at("cpset").get<std::string>()), u));
  } else if (kind == "eval") {
    actual = sat(m, x, parse(fx.at("formula").get<std::string>()), u);
  } else if (kind == "compare") {
    const auto table = comparison_table(m, x, {comparison_row(parse(fx.at("formula").get<std::string>()))});
    actual = comparison_json(table.front());
    bool pass = true;
    for (const auto& [k, v] : expected.items()) pass = pass && actual.contains(k) && actual[k] == v;
    return {expected, actual, pass};
  } else {
    throw UsageError("unknown fixture kind '" + kind + "'");
  }
  return {expected, actual, actual == expected};
}

int cmd_fixtures(const FixturesArgs& a, std::ostream& out) {
  const std::string path = (std::filesystem::path(a.dir) / "manifest.json").string();
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  const Format fmt = kFormats.at(a.format);
  std::size_t passed = 0, total = 0;
  for (const auto& fx : manifest.at("fixtures")) {
    ++total;
    const std::string name = fx.at("name");
    FixtureResult r;
    try {
      r = run_fixture(fx, a.dir);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      r = {fx.at("expected"), std::string("error: ") + e.what(), false};
    }
    passed += r.pass;
    if (fmt == Format::jsonlines) {
      json j{{"fixture", name},         {"model", fx.at("model")}, {"world", fx.at("world")},
             {"formula", fx.contains("formula") ? fx["formula"] : fx.value("cpset", json())},
             {"update", fx.value("update", "d")}, {"expected", r.expected},  {"actual", r.actual},
             {"pass", r.pass}};
      out << j.dump() << "\n";
    } else if (r.pass) {
      out << "PASS " << name << "\n";
    } else {
      out << "FAIL " << name << ": expected " << r.expected.dump() << ", actual " << r.actual.dump() << "\n";
    }
  }
  if (fmt == Format::text) out << passed << "/" << total << " fixtures passed\n";
  return passed == total ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ceteris-paribus counterfactuals over finite sphere models", "cpcf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto add_model = [](CLI::App* c, std::string& model, std::string& world) {
    c->add_option("--model", model, "Model file")->required();
    c->add_option("--world", world, "Evaluation world")->required();
  };
  auto add_tag = [](CLI::App* c, std::string& tag) {
    c->add_option("--update", tag, "Update tag i|a|d")->check(CLI::IsMember({"i", "a", "d"}));
  };
  std::optional<int> code;

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a world; exit 0 when true, 1 when false");
  add_model(eval, ea.model, ea.world);
  add_tag(eval, ea.update);
  eval->add_option("--formula", ea.formula, "Formula text")->required();
  eval->add_option("--variant", ea.variant, "Semantic variant a|b|c")->check(CLI::IsMember({"a", "b", "c"}));
  eval->add_flag("--trace", ea.trace, "Print the evaluation tree");
  eval->callback([&] { code = cmd_eval(ea, out); });

  WeightsArgs wa;
  auto* weights = app.add_subcommand("weights", "Formula weights and their order at a world");
  add_model(weights, wa.model, wa.world);
  add_tag(weights, wa.update);
  weights->add_option("--formula", wa.formulas, "Formula (repeatable); default: every literal");
  weights->callback([&] { code = cmd_weights(wa, out); });

  ProfileArgs pa;
  auto* prof = app.add_subcommand("profile", "Forcing, agreement and disagreement sets per world");
  add_model(prof, pa.model, pa.world);
  add_tag(prof, pa.update);
  prof->add_option("--cpset", pa.cpset, "cp-set, e.g. \"[p, ~p]\"")->required();
  prof->callback([&] { code = cmd_profile(pa, out); });

  UpdateArgs ua;
  auto* upd = app.add_subcommand("update-dump", "Print the updated chain in model-file syntax");
  add_model(upd, ua.model, ua.world);
  add_tag(upd, ua.update);
  upd->add_option("--cpset", ua.cpset, "cp-set")->required();
  upd->add_flag("--trace", ua.trace, "Prefix the ranking table as comments");
  upd->add_flag("--all", ua.all, "Print the whole updated model");
  upd->callback([&] { code = cmd_update_dump(ua, out); });

  TranslateArgs ta;
  auto* tr = app.add_subcommand("translate", "Eliminate non-empty cp-sets relative to a model and world");
  add_model(tr, ta.model, ta.world);
  add_tag(tr, ta.update);
  tr->add_option("--formula", ta.formula, "Formula text")->required();
  tr->callback([&] { code = cmd_translate(ta, out); });

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "Exhaustive checks over enumerated small models");
  sw->add_option("--max-worlds", sa.max_worlds, "Largest model size")->check(CLI::Range(1, 4));
  sw->add_option("--atoms", sa.atoms, "Comma separated atoms");
  sw->add_option("--centering", sa.centering, "centered|weak")->check(CLI::IsMember({"centered", "weak"}));
  add_tag(sw, sa.update);
  sw->add_option("--suite", sa.suite, "theorems|axioms|variants")
      ->check(CLI::IsMember({"theorems", "axioms", "variants"}));
  sw->add_option("--max-size", sa.max_size, "Corpus formula size bound");
  sw->add_option("--direct-stride", sa.direct_stride, "Every k-th model also runs the translation directly");
  sw->add_option("--model-stride", sa.model_stride, "Visit every k-th enumerated model only");
  sw->add_flag("--nested-only", sa.nested_only, "Keep only formulas with nested modal operators");
  sw->add_option("--nested-size", sa.nested_size, "Size bound for formulas of modal depth 2; 0 leaves them out");
  sw->add_option("--keep", sa.keep, "Witnesses kept per check");
  sw->add_option("--format", sa.format, "text|jsonlines")->check(CLI::IsMember({"text", "jsonlines"}));
  sw->callback([&] { code = cmd_sweep(sa, out, err); });

  CompareArgs ca;
  auto* cmp = app.add_subcommand("compare", "Table of CP, NC, MS and DIS verdicts");
  add_model(cmp, ca.model, ca.world);
  cmp->add_option("--formula", ca.formulas, "Counterfactual (repeatable)")->required();
  cmp->add_flag("--nc-demo", ca.nc_demo, "Also compare naive counting with the agreement update on companions");
  cmp->callback([&] { code = cmd_compare(ca, out); });

  FixturesArgs fa;
  auto* fix = app.add_subcommand("fixtures", "Run the example regression suite");
  fix->add_option("--dir", fa.dir, "Directory holding manifest.json");
  fix->add_option("--format", fa.format, "text|jsonlines")->check(CLI::IsMember({"text", "jsonlines"}));
  fix->callback([&] { code = cmd_fixtures(fa, out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    err << "error: " << e.what() << "\n" << target->help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& v : e.violations()) err << "  " << v.message << "\n";
    return kExitUsage;
  } catch (const TranslateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return code.value_or(kExitUsage);
}

}  // namespace cpcf::cli
