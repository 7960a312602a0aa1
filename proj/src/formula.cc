#include "cpcf/formula.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <utility>

namespace cpcf {

namespace {

const FormulaNode& falsum_node() {
  static const FormulaNode node{Kind::Falsum, {}, {}, {}, {}, 0x9e3779b97f4a7c15ull};
  return node;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t compute_hash(const FormulaNode& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ull + 1;
  switch (n.kind) {
    case Kind::Atom:
      h = mix(h, std::hash<std::string>{}(n.name));
      break;
    case Kind::Falsum:
      return falsum_node().hash;
    case Kind::Implies:
      h = mix(mix(h, n.lhs.hash()), n.rhs.hash());
      break;
    case Kind::Counterfactual:
    case Kind::Plausibility:
      h = mix(mix(h, n.lhs.hash()), n.rhs.hash());
      h = mix(h, n.cpset.size());
      for (const auto& m : n.cpset) h = mix(h, m.hash());
      break;
  }
  return h;
}

}  // namespace

const FormulaNode* Formula::node() const { return node_ ? node_.get() : &falsum_node(); }

Formula Formula::atom(std::string name) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  n->hash = compute_hash(*n);
  return Formula(std::move(n));
}

Formula Formula::falsum() { return Formula(); }

Formula Formula::implies(Formula lhs, Formula rhs) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Implies;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->hash = compute_hash(*n);
  return Formula(std::move(n));
}

Formula Formula::counterfactual(Formula antecedent, CpSet cpset, Formula consequent) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Counterfactual;
  n->lhs = std::move(antecedent);
  n->rhs = std::move(consequent);
  n->cpset = std::move(cpset);
  n->hash = compute_hash(*n);
  return Formula(std::move(n));
}

Formula Formula::plausibility(Formula lhs, CpSet cpset, Formula rhs) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Plausibility;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->cpset = std::move(cpset);
  n->hash = compute_hash(*n);
  return Formula(std::move(n));
}

Kind Formula::kind() const { return node()->kind; }
const std::string& Formula::name() const { return node()->name; }
const Formula& Formula::lhs() const { return node()->lhs; }
const Formula& Formula::rhs() const { return node()->rhs; }
const CpSet& Formula::cpset() const { return node()->cpset; }
std::size_t Formula::hash() const { return node()->hash; }

bool Formula::is_negation() const { return kind() == Kind::Implies && rhs().kind() == Kind::Falsum; }

bool Formula::operator==(const Formula& other) const {
  const FormulaNode* a = node();
  const FormulaNode* b = other.node();
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Atom:
      return a->name == b->name;
    case Kind::Falsum:
      return true;
    case Kind::Implies:
      return a->lhs == b->lhs && a->rhs == b->rhs;
    case Kind::Counterfactual:
    case Kind::Plausibility:
      return a->lhs == b->lhs && a->rhs == b->rhs && a->cpset == b->cpset;
  }
  return false;
}

CpSet::CpSet(std::vector<Formula> members) {
  std::vector<std::pair<std::string, Formula>> keyed;
  keyed.reserve(members.size());
  for (auto& m : members) keyed.emplace_back(print(m), std::move(m));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  members_.reserve(keyed.size());
  for (auto& [_, f] : keyed) members_.push_back(std::move(f));
}

bool CpSet::contains(const Formula& f) const {
  return std::find(members_.begin(), members_.end(), f) != members_.end();
}

Formula neg(Formula a) { return Formula::implies(std::move(a), Formula::falsum()); }
Formula conj(Formula a, Formula b) { return neg(Formula::implies(std::move(a), neg(std::move(b)))); }
Formula disj(Formula a, Formula b) { return Formula::implies(neg(std::move(a)), std::move(b)); }
Formula top() { return neg(Formula::falsum()); }
Formula possibly(Formula a) { return neg(Formula::plausibility(Formula::falsum(), CpSet{}, std::move(a))); }

Formula big_conj(const std::vector<Formula>& parts) {
  if (parts.empty()) return top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Formula big_disj(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::falsum();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

// {{{ Printing

namespace {

enum Prec { kModal = 0, kImplies = 1, kDisj = 2, kConj = 3, kNeg = 4, kAtomic = 5 };

bool is_top(const Formula& f) { return f.is_negation() && f.negated().kind() == Kind::Falsum; }

// f = ~(a -> ~b)
bool match_conj(const Formula& f, const Formula** a, const Formula** b) {
  if (!f.is_negation()) return false;
  const Formula& inner = f.negated();
  if (inner.kind() != Kind::Implies || !inner.rhs().is_negation()) return false;
  *a = &inner.lhs();
  *b = &inner.rhs().negated();
  return true;
}

// f = ~a -> b with b != false and ~a not top
bool match_disj(const Formula& f, const Formula** a, const Formula** b) {
  if (f.kind() != Kind::Implies || f.rhs().kind() == Kind::Falsum) return false;
  const Formula& l = f.lhs();
  if (!l.is_negation() || is_top(l)) return false;
  const Formula *ca, *cb;
  if (match_conj(l, &ca, &cb)) return false;
  *a = &l.negated();
  *b = &f.rhs();
  return true;
}

void print_rec(const Formula& f, int min_prec, std::string& out);

void wrap(int prec, int min_prec, std::string& out, const std::function<void()>& body) {
  const bool paren = prec < min_prec;
  if (paren) out += '(';
  body();
  if (paren) out += ')';
}

void print_cpset(const CpSet& g, std::string& out) {
  out += '[';
  bool first = true;
  for (const auto& m : g) {
    if (!first) out += ", ";
    first = false;
    print_rec(m, kModal, out);
  }
  out += ']';
}

void print_rec(const Formula& f, int min_prec, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out += f.name();
      return;
    case Kind::Falsum:
      out += "false";
      return;
    case Kind::Counterfactual:
    case Kind::Plausibility:
      wrap(kModal, min_prec, out, [&] {
        print_rec(f.lhs(), kImplies, out);
        out += f.kind() == Kind::Counterfactual ? " =>" : " <=";
        print_cpset(f.cpset(), out);
        out += ' ';
        print_rec(f.rhs(), kImplies, out);
      });
      return;
    case Kind::Implies:
      break;
  }
  const Formula *a, *b;
  if (is_top(f)) {
    out += "true";
  } else if (match_conj(f, &a, &b)) {
    wrap(kConj, min_prec, out, [&] {
      print_rec(*a, kConj, out);
      out += " & ";
      print_rec(*b, kNeg, out);
    });
  } else if (f.is_negation()) {
    wrap(kNeg, min_prec, out, [&] {
      out += '~';
      print_rec(f.negated(), kNeg, out);
    });
  } else if (match_disj(f, &a, &b)) {
    wrap(kDisj, min_prec, out, [&] {
      print_rec(*a, kDisj, out);
      out += " | ";
      print_rec(*b, kConj, out);
    });
  } else {
    wrap(kImplies, min_prec, out, [&] {
      print_rec(f.lhs(), kDisj, out);
      out += " -> ";
      print_rec(f.rhs(), kImplies, out);
    });
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, kModal, out);
  return out;
}

std::string print(const CpSet& g) {
  std::string out;
  print_cpset(g, out);
  return out;
}

// }}}

// {{{ Parsing

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += i + 1 == expected.size() ? " or " : ", ";
    s += expected[i];
  }
  return s;
}

enum class Tok { Ident, False, True, Tilde, Amp, Bar, Arrow, CfArrow, PlArrow, LBrack, RBrack, Comma, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const std::size_t line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                                      src_[pos_] == '\'')) {
          advance();
        }
        std::string word(src_.substr(start, pos_ - start));
        Tok k = word == "false" ? Tok::False : word == "true" ? Tok::True : Tok::Ident;
        out.push_back({k, std::move(word), line, col});
        continue;
      }
      auto two = [&](char next) { return pos_ + 1 < src_.size() && src_[pos_ + 1] == next; };
      Tok k;
      std::size_t len = 1;
      switch (c) {
        case '~': k = Tok::Tilde; break;
        case '&': k = Tok::Amp; break;
        case '|': k = Tok::Bar; break;
        case '[': k = Tok::LBrack; break;
        case ']': k = Tok::RBrack; break;
        case ',': k = Tok::Comma; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '-':
          if (!two('>')) fail(line, col, std::string(1, c));
          k = Tok::Arrow, len = 2;
          break;
        case '=':
          if (!two('>')) fail(line, col, std::string(1, c));
          k = Tok::CfArrow, len = 2;
          break;
        case '<':
          if (!two('=')) fail(line, col, std::string(1, c));
          k = Tok::PlArrow, len = 2;
          break;
        default:
          fail(line, col, std::string(1, c));
      }
      std::string text(src_.substr(pos_, len));
      for (std::size_t i = 0; i < len; ++i) advance();
      out.push_back({k, std::move(text), line, col});
    }
  }

 private:
  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& found) {
    throw ParseError(line, col,
                     {"identifier", "'false'", "'true'", "'~'", "'&'", "'|'", "'->'", "'=>'", "'<='", "'['", "']'",
                      "','", "'('", "')'"},
                     "'" + found + "'");
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula() {
    Formula f = modal();
    expect_end();
    return f;
  }

  CpSet cpset_only() {
    bool bracketed = peek().kind == Tok::LBrack;
    if (bracketed) next();
    std::vector<Formula> members;
    const Tok close = bracketed ? Tok::RBrack : Tok::End;
    if (peek().kind != close) {
      members.push_back(modal());
      while (peek().kind == Tok::Comma) {
        next();
        members.push_back(modal());
      }
    }
    if (bracketed) expect(Tok::RBrack, {"','", "']'"});
    expect_end();
    return CpSet(std::move(members));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), describe(t));
  }

  void expect(Tok k, std::vector<std::string> expected) {
    if (peek().kind != k) fail(std::move(expected));
    next();
  }

  void expect_end() {
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::CfArrow || peek().kind == Tok::PlArrow) {
        fail({"end of input (modal operators are non-associative; parenthesize the operand)"});
      }
      fail({"end of input", "'->'", "'&'", "'|'", "'=>'", "'<='"});
    }
  }

  Formula modal() {
    Formula lhs = implication();
    const Tok k = peek().kind;
    if (k != Tok::CfArrow && k != Tok::PlArrow) return lhs;
    next();
    expect(Tok::LBrack, {"'['"});
    std::vector<Formula> members;
    if (peek().kind != Tok::RBrack) {
      members.push_back(modal());
      while (peek().kind == Tok::Comma) {
        next();
        members.push_back(modal());
      }
    }
    expect(Tok::RBrack, {"','", "']'"});
    Formula rhs = implication();
    if (peek().kind == Tok::CfArrow || peek().kind == Tok::PlArrow) {
      fail({"')'", "','", "']'", "end of input (modal operators are non-associative; parenthesize the operand)"});
    }
    CpSet g(std::move(members));
    return k == Tok::CfArrow ? Formula::counterfactual(std::move(lhs), std::move(g), std::move(rhs))
                             : Formula::plausibility(std::move(lhs), std::move(g), std::move(rhs));
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind != Tok::Arrow) return lhs;
    next();
    return Formula::implies(std::move(lhs), implication());
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (peek().kind == Tok::Bar) {
      next();
      acc = disj(std::move(acc), conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (peek().kind == Tok::Amp) {
      next();
      acc = conj(std::move(acc), unary());
    }
    return acc;
  }

  Formula unary() {
    if (peek().kind == Tok::Tilde) {
      next();
      return neg(unary());
    }
    return primary();
  }

  Formula primary() {
    switch (peek().kind) {
      case Tok::Ident:
        return Formula::atom(next().text);
      case Tok::False:
        next();
        return Formula::falsum();
      case Tok::True:
        next();
        return top();
      case Tok::LParen: {
        next();
        Formula f = modal();
        expect(Tok::RParen, {"')'"});
        return f;
      }
      default:
        fail({"identifier", "'false'", "'true'", "'~'", "'('"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected " +
                         join_expected(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

Formula parse(std::string_view source) { return Parser(Lexer(source).run()).formula(); }

CpSet parse_cpset(std::string_view source) { return Parser(Lexer(source).run()).cpset_only(); }

// }}}

Formula dual(const Formula& f) { return f.is_negation() ? f.negated() : neg(f); }

bool is_paired(const CpSet& g) {
  return std::all_of(g.begin(), g.end(), [&](const Formula& a) { return g.contains(dual(a)); });
}

std::size_t cpl(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Falsum:
      return 0;
    case Kind::Implies:
      return cpl(f.lhs()) + cpl(f.rhs());
    case Kind::Counterfactual:
    case Kind::Plausibility: {
      std::size_t n = (f.cpset().empty() ? 0 : 1) + cpl(f.lhs()) + cpl(f.rhs());
      for (const auto& m : f.cpset()) n += cpl(m);
      return n;
    }
  }
  return 0;
}

std::size_t primitive_size(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Falsum:
      return 1;
    default:
      return 1 + primitive_size(f.lhs()) + primitive_size(f.rhs());
  }
}

std::size_t modal_depth(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Falsum:
      return 0;
    case Kind::Implies:
      return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
    default: {
      std::size_t d = std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
      for (const auto& m : f.cpset()) d = std::max(d, modal_depth(m));
      return d + 1;
    }
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out.insert(f.name());
      return;
    case Kind::Falsum:
      return;
    case Kind::Implies:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      for (const auto& m : f.cpset()) collect_atoms(m, out);
  }
}

namespace {

template <class NodeFn>
Formula rewrite(const Formula& f, const NodeFn& on_modal) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Falsum:
      return f;
    case Kind::Implies:
      return Formula::implies(rewrite(f.lhs(), on_modal), rewrite(f.rhs(), on_modal));
    default: {
      std::vector<Formula> members;
      for (const auto& m : f.cpset()) members.push_back(rewrite(m, on_modal));
      return on_modal(f.kind(), rewrite(f.lhs(), on_modal), CpSet(std::move(members)), rewrite(f.rhs(), on_modal));
    }
  }
}

}  // namespace

Formula rewrite_cf_to_pl(const Formula& f) {
  return rewrite(f, [](Kind k, Formula a, CpSet g, Formula b) {
    if (k == Kind::Plausibility) return Formula::plausibility(std::move(a), std::move(g), std::move(b));
    // A =>G B  ~>  (false <=G A) | ~((A & ~B) <=G (A & B))
    Formula vacuous = Formula::plausibility(Formula::falsum(), g, a);
    Formula core = Formula::plausibility(conj(a, neg(b)), g, conj(a, b));
    return disj(std::move(vacuous), neg(std::move(core)));
  });
}

Formula rewrite_pl_to_cf(const Formula& f) {
  return rewrite(f, [](Kind k, Formula a, CpSet g, Formula b) {
    if (k == Kind::Counterfactual) return Formula::counterfactual(std::move(a), std::move(g), std::move(b));
    // A <=G B  ~>  ((A | B) =>G false) | ~((A | B) =>G ~A)
    Formula either = disj(a, b);
    return disj(Formula::counterfactual(either, g, Formula::falsum()),
                neg(Formula::counterfactual(either, g, neg(a))));
  });
}

}  // namespace cpcf
