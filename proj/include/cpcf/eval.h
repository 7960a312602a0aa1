// Dynamic satisfaction. Every cp-operator with a non-empty cp-set updates
// the current model at the evaluation world before its Lewis clause is
// checked, so nested cp-operators compound their updates.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpcf/formula.h"
#include "cpcf/model.h"
#include "cpcf/tags.h"

namespace cpcf {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalStep {
  WorldId world = 0;
  std::string formula;
  std::uint64_t generation = 0;
  Chain spheres;  // spheres inspected by a modal clause
  bool verdict = false;
  std::string note;
  std::vector<EvalStep> children;
};

bool sat(const SphereModel& m, WorldId x, const Formula& f, UpdateTag u, EvalStep* trace = nullptr);
bool sat_variant(const SphereModel& m, WorldId x, const Formula& f, UpdateTag u, Variant v,
                 EvalStep* trace = nullptr);
bool valid_in_model(const SphereModel& m, const Formula& f, UpdateTag u);

// Worlds of `where` satisfying f, evaluated one world at a time.
WorldSet extension(const SphereModel& m, const Formula& f, UpdateTag u, WorldSet where);

// Lewis clauses on a chain, given the operand extensions.
bool lewis_counterfactual(const Chain& chain, WorldSet a, WorldSet b);
bool lewis_plausibility(const Chain& chain, WorldSet a, WorldSet b);

std::string format_trace(const SphereModel& m, const EvalStep& step);

// Memoizing evaluator computing whole extensions. Results are cached per
// model generation and formula node; the cache pins every formula it has
// seen, so node addresses stay valid until clear().
class ExtensionEvaluator {
 public:
  explicit ExtensionEvaluator(UpdateTag u) : u_(u) {}

  WorldSet extension(const SphereModel& m, const Formula& f);
  bool sat(const SphereModel& m, WorldId x, const Formula& f) { return extension(m, f).contains(x); }
  void clear();

  UpdateTag tag() const { return u_; }

 private:
  struct Key {
    std::uint64_t generation;
    const FormulaNode* node;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>{}(k.generation) * 31 + std::hash<const void*>{}(k.node);
    }
  };
  struct Entry {
    WorldSet ext;
    Formula pin;
  };

  bool modal_free(const Formula& f);

  UpdateTag u_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
  std::unordered_map<const FormulaNode*, std::pair<bool, Formula>> modal_free_;
};

}  // namespace cpcf
