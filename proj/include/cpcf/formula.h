// Formulas of the cp-conditional language: atoms, falsum, implication, the
// cp-counterfactual A =>[G] B and cp-comparative plausibility A <=[G] B.
// Negation, conjunction, disjunction, top and the possibility operator are
// sugar over these five node kinds.

#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cpcf {

enum class Kind { Atom, Falsum, Implies, Counterfactual, Plausibility };

class CpSet;
struct FormulaNode;

class Formula {
 public:
  // A default-constructed formula is falsum.
  Formula() = default;

  static Formula atom(std::string name);
  static Formula falsum();
  static Formula implies(Formula lhs, Formula rhs);
  static Formula counterfactual(Formula antecedent, CpSet cpset, Formula consequent);
  static Formula plausibility(Formula lhs, CpSet cpset, Formula rhs);

  Kind kind() const;
  const std::string& name() const;  // Atom only
  const Formula& lhs() const;       // Implies / modal nodes
  const Formula& rhs() const;
  const CpSet& cpset() const;  // modal nodes
  bool is_modal() const { return kind() == Kind::Counterfactual || kind() == Kind::Plausibility; }

  // Matches the sugar pattern G -> false and yields G.
  bool is_negation() const;
  const Formula& negated() const { return lhs(); }

  std::size_t hash() const;
  const FormulaNode* node() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

// Finite set of formulas kept in canonical order (sorted by printed form,
// duplicates removed). May be empty.
class CpSet {
 public:
  CpSet() = default;
  explicit CpSet(std::vector<Formula> members);

  const std::vector<Formula>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Formula& f) const;
  const Formula& operator[](std::size_t i) const { return members_[i]; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const CpSet& other) const { return members_ == other.members_; }

 private:
  std::vector<Formula> members_;
};

struct FormulaNode {
  Kind kind = Kind::Falsum;
  std::string name;
  Formula lhs;
  Formula rhs;
  CpSet cpset;
  std::size_t hash = 0;
};

// Sugar.
Formula neg(Formula a);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula top();
Formula possibly(Formula a);  // ~(false <=[] a)
Formula big_conj(const std::vector<Formula>& parts);  // empty -> top
Formula big_disj(const std::vector<Formula>& parts);  // empty -> falsum

// Raised for malformed formula text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

Formula parse(std::string_view source);
std::string print(const Formula& f);
std::string print(const CpSet& g);
// Parses "[A, B, ...]" or a bare comma separated list.
CpSet parse_cpset(std::string_view source);

// Strips one outer negation if present, otherwise negates.
Formula dual(const Formula& f);
bool is_paired(const CpSet& g);
// Number of modal nodes with non-empty cp-set, including those inside cp-set members.
std::size_t cpl(const Formula& f);
// Number of nodes in the primitive AST (cp-set members excluded).
std::size_t primitive_size(const Formula& f);
// Maximum nesting of modal operators; descending into a cp-set member counts as one level.
std::size_t modal_depth(const Formula& f);
void collect_atoms(const Formula& f, std::set<std::string>& out);

Formula rewrite_cf_to_pl(const Formula& f);
Formula rewrite_pl_to_cf(const Formula& f);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

}  // namespace cpcf
