// Bounded enumeration of sphere models, a formula corpus generator, a
// shared-node evaluator for large formula collections, axiom sweeps,
// countermodel search and theorem sweeps.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpcf/cpsets.h"
#include "cpcf/eval.h"
#include "cpcf/formula.h"
#include "cpcf/model.h"
#include "cpcf/tags.h"

namespace cpcf {

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationBounds {
  std::size_t max_worlds = 3;  // every size from 1 up to this is enumerated
  std::vector<std::string> atoms{"p", "q"};
  Centering centering = Centering::Centered;
  std::size_t max_spheres = 0;  // 0 means no limit on chain length
  std::uint64_t cap = 50'000'000;
};

class EnumerationOverflow : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Strictly nested chains at world x of an n-world frame that respect the
// centering tag, in a fixed order.
std::vector<Chain> candidate_chains(std::size_t n, WorldId x, Centering c, std::size_t max_spheres = 0);

// Random access over every model within the bounds. Worlds are named
// w0, w1, ...; index order is by number of worlds, then chain choices,
// then valuation.
class ModelEnumeration {
 public:
  explicit ModelEnumeration(EnumerationBounds bounds);

  std::uint64_t size() const { return total_; }
  SphereModel at(std::uint64_t index) const;
  const EnumerationBounds& bounds() const { return bounds_; }

  void for_each(const std::function<void(std::uint64_t, const SphereModel&)>& fn) const;

 private:
  struct Block {
    std::size_t worlds;
    std::uint64_t first;
    std::uint64_t valuations;
    std::vector<std::vector<Chain>> chains;  // per world
  };

  EnumerationBounds bounds_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

std::vector<SphereModel> enumerate_models(const EnumerationBounds& bounds);

// ---------------------------------------------------------------------------
// Corpus

struct CorpusOptions {
  std::vector<std::string> atoms{"p", "q"};
  std::size_t max_size = 7;  // sugar connectives count as one node each
  std::vector<CpSet> cpsets;  // empty list: the empty set plus every paired set of literal pairs
  bool counterfactuals = true;
  bool plausibility = true;
  std::size_t nested_max_size = 5;  // size bound for formulas of modal depth 2; 0 leaves them out
  std::size_t min_modal_depth = 0;  // 2 keeps only the nested formulas
};

// The paired sets {}, {a,~a}, {b,~b}, {a,~a,b,~b}, ... over the atoms.
std::vector<CpSet> literal_cpsets(const std::vector<std::string>& atoms, std::size_t max_pairs);

// Distinct formulas in order of their generation size. Leaves are the atoms
// and false; connectives are ~, &, |, ->, and the two modal operators. Modal
// depth is at most 2, and depth 2 only up to nested_max_size.
std::vector<Formula> generate_corpus(const CorpusOptions& options);

// ---------------------------------------------------------------------------
// Shared-node evaluation

// Hash-consed primitive formula graph. Children always precede parents.
class FormulaDag {
 public:
  struct Node {
    Kind kind;
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;
    std::uint32_t cpset = 0;  // index into cpsets() for modal nodes
    bool modal_free = true;
    std::size_t cpl = 0;
    Formula formula;
  };

  std::uint32_t add(const Formula& f);
  std::optional<std::uint32_t> find(const Formula& f) const;

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::uint32_t i) const { return nodes_[i]; }
  const std::vector<CpSet>& cpsets() const { return cpsets_; }
  // Nodes of the cp-set members, aligned with the CpSet order.
  const std::vector<std::uint32_t>& members(std::uint32_t cpset) const { return member_nodes_[cpset]; }
  bool tabulated(std::uint32_t cpset) const { return tabulated_[cpset]; }

 private:
  std::uint32_t add_cpset(const CpSet& g);

  std::vector<Node> nodes_;
  std::unordered_map<Formula, std::uint32_t, FormulaHash> index_;
  std::vector<CpSet> cpsets_;
  std::vector<std::vector<std::uint32_t>> member_nodes_;
  std::vector<bool> tabulated_;
};

// Computes the extension of every node of a graph in one model. Modal nodes
// whose operands and cp-set members are modal-free use the updated chain at
// each world directly; all others go through ExtensionEvaluator.
class DagEvaluator {
 public:
  DagEvaluator(const FormulaDag& dag, UpdateTag u);

  void run(const SphereModel& m);
  WorldSet ext(std::uint32_t node) const { return ext_[node]; }
  const std::vector<WorldSet>& exts() const { return ext_; }
  // Chain at y after the update for a tabulated cp-set; valid after run().
  const Chain& chain(std::uint32_t cpset, WorldId y);

  UpdateTag tag() const { return u_; }

 private:
  enum class Op : std::uint8_t { Atom, Falsum, Implies, Counterfactual, Plausibility, Fallback };
  struct Step {
    Op op;
    std::uint32_t lhs;
    std::uint32_t rhs;
    std::uint32_t aux;  // atom index or cp-set index
  };

  void compile();
  WorldSet modal(Op op, std::uint32_t cpset, WorldSet a, WorldSet b);

  const FormulaDag& dag_;
  UpdateTag u_;
  const SphereModel* model_ = nullptr;
  std::vector<Step> steps_;
  std::vector<std::string> atoms_;
  std::vector<WorldSet> ext_;
  std::vector<std::vector<Chain>> chains_;
  std::vector<std::vector<bool>> chain_ready_;
  // Full extension of a modal node per (operator, cp-set, operand extensions);
  // the top bit marks a filled slot.
  std::vector<std::uint64_t> table_;
  std::size_t side_ = 0;
  ExtensionEvaluator fallback_;
};

// ---------------------------------------------------------------------------
// Axioms

enum class AxiomSystem { VW, VC };
enum class Schema { cpr, cpa, tr, co, w, c };

const char* to_string(Schema s);
const char* to_string(AxiomSystem s);
std::vector<Schema> schemata(AxiomSystem s);

struct AxiomInstance {
  Schema schema;
  Formula formula;
  bool base;  // no non-empty cp-set anywhere
};

// All substitution instances of the schema over the pool. For cpr, the
// instances A <= B for pool pairs with B -> A a propositional tautology.
std::vector<AxiomInstance> axiom_instances(Schema s, const std::vector<Formula>& pool);

// Substitution pool over the first two atoms: literals, constants, binary
// Boolean combinations and a few Lewis conditionals; with_cp adds
// conditionals carrying literal cp-sets.
std::vector<Formula> axiom_pool(const std::vector<std::string>& atoms, bool with_cp);

struct AxiomFailure {
  Schema schema;
  bool base;
  std::uint64_t model_index;
  std::string model;
  std::string world;
  std::string formula;
};

struct AxiomReport {
  AxiomSystem system;
  UpdateTag tag;
  std::uint64_t models = 0;
  std::uint64_t checks = 0;
  std::uint64_t base_failures = 0;
  std::uint64_t cp_failures = 0;
  std::vector<AxiomFailure> failures;  // first few of each kind
};

AxiomReport check_axioms(const EnumerationBounds& bounds, AxiomSystem system, UpdateTag u,
                         const std::vector<AxiomInstance>& instances, std::size_t keep = 8);

// ---------------------------------------------------------------------------
// Countermodels

struct Countermodel {
  std::uint64_t index;
  SphereModel model;
  WorldId world;
};

std::optional<Countermodel> find_countermodel(const Formula& f, const EnumerationBounds& bounds, UpdateTag u);

// First model and world where variants a and b (or b and c) of the cp
// semantics disagree on one of the formulas.
struct VariantWitness {
  std::uint64_t index;
  SphereModel model;
  WorldId world;
  Formula formula;
  bool a, b, c;
};

std::optional<VariantWitness> find_variant_divergence(const std::vector<Formula>& formulas,
                                                      const EnumerationBounds& bounds, UpdateTag u);

// ---------------------------------------------------------------------------
// Theorem sweep

struct Witness {
  std::string check;
  std::uint64_t model_index = 0;
  std::string model;
  std::string world;
  std::string formula;
  std::string detail;
};

struct CheckTally {
  std::string name;
  bool asserted = true;  // false: findings are logged, not failures
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;
};

struct SweepOptions {
  CorpusOptions corpus;
  bool theorems = true;         // a=d, i=d, Gamma_M, symmetry, monotonicity, duality, complement
  bool interdefinability = true;
  bool translation = true;
  bool preservation = true;
  std::size_t translation_cpl = 2;  // bound on cpl after the cf-to-pl rewrite
  std::size_t direct_stride = 0;    // every k-th model also checks star() and sat() directly; 0 disables
  std::size_t model_stride = 1;     // visit every k-th enumerated model only
  TieRule tie = TieRule::Definition;
  std::size_t keep = 5;  // witnesses kept per check
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct SweepReport {
  EnumerationBounds bounds;
  std::uint64_t models = 0;
  std::size_t corpus_size = 0;
  double seconds = 0;
  std::vector<CheckTally> checks;

  const CheckTally* find(const std::string& name) const;
  bool ok() const;  // no violation in an asserted check
};

SweepReport theorem_sweep(const EnumerationBounds& bounds, const SweepOptions& options = {});

// Re-runs a witness from its text form: true when the recorded violation
// still occurs, nullopt for checks that are not stated on formulas.
std::optional<bool> replay(const Witness& w);

std::string format_report(const SweepReport& r);

}  // namespace cpcf
