#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dnaprover {

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

enum class Connective { kVar, kNot, kAnd, kOr, kImplies, kImpliedBy, kIff };

/// Immutable propositional formula. Copies share the underlying tree.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula negation(Formula operand);
  /// And/Or need at least two operands.
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula implied_by(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);

  Connective kind() const { return node_->kind; }
  /// Variable name; empty unless kind() == kVar.
  const std::string& name() const { return node_->name; }
  const std::vector<Formula>& operands() const { return node_->operands; }

  bool is_literal() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::vector<Formula> operands;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::vector<Formula> operands);

  // Rewrite phases build degenerate one-operand And/Or nodes on the way to
  // clausal shape; the public factories reject them.
  friend Formula make_nary(Connective kind, std::vector<Formula> operands);

  std::shared_ptr<const Node> node_;
};

/// Parses `~`, `&`, `|`, `->`, `<-`, `<->` with precedence ~ > & > | > arrows.
/// Arrows do not chain without parentheses. Throws ParseError.
Formula parse_formula(std::string_view text);

/// Canonical text form; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Sorted, duplicate-free variable names occurring in f.
std::vector<std::string> variables(const Formula& f);

// ---------------------------------------------------------------------------
// Literals, clauses, clause sets
// ---------------------------------------------------------------------------

struct Literal {
  std::string variable;
  bool negated = false;

  Literal complement() const { return {variable, !negated}; }

  // Orders by variable, then positive before negative.
  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

Literal positive(std::string variable);
Literal negative(std::string variable);
std::string to_string(const Literal& l);

/// A set of literals read as their disjunction. Keeps the order in which
/// literals were first inserted (clause text order) but compares as a set.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> literals);
  explicit Clause(const std::vector<Literal>& literals);

  /// Adds l unless already present. Returns true if inserted.
  bool insert(const Literal& l);

  const std::vector<Literal>& literals() const { return literals_; }
  /// Literals in sorted order; the basis of comparison.
  const std::vector<Literal>& sorted() const { return sorted_; }

  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  bool contains(const Literal& l) const;
  /// Contains some literal together with its complement.
  bool is_tautology() const;
  /// Every literal of *this is in other.
  bool subsumes(const Clause& other) const;

  friend bool operator==(const Clause& a, const Clause& b) {
    return a.sorted_ == b.sorted_;
  }
  /// Lexicographic on sorted literals; the empty clause sorts first.
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> literals_;
  std::vector<Literal> sorted_;
};

/// Clause as `{P, ~Q, R}`; the empty clause is `{}`.
std::string to_string(const Clause& c);

/// A set of clauses in first-insertion order. Duplicates collapse.
class ClauseSet {
 public:
  ClauseSet() = default;
  ClauseSet(std::initializer_list<Clause> clauses);
  explicit ClauseSet(const std::vector<Clause>& clauses);

  bool insert(const Clause& c);
  bool contains(const Clause& c) const;

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  /// Set equality; insertion order is ignored.
  friend bool operator==(const ClauseSet& a, const ClauseSet& b);

 private:
  std::vector<Clause> clauses_;
};

std::string to_string(const ClauseSet& s);

/// Sorted, duplicate-free variable names.
std::vector<std::string> variables(const ClauseSet& s);

// ---------------------------------------------------------------------------
// Clausal conversion
// ---------------------------------------------------------------------------

/// Rewrites P => Q, P <= Q and P <=> Q into ~, & and |.
Formula eliminate_implications(const Formula& f);

/// Pushes negation down to the variables (double negation, De Morgan).
/// Expects a formula without arrows.
Formula push_negations(const Formula& f);

/// Distributes | over & and flattens nested & / |. Expects negation normal
/// form; the result is a conjunction of disjunctions of literals.
Formula distribute(const Formula& f);

/// Reads a conjunction of disjunctions of literals as a clause set.
ClauseSet to_clause_set(const Formula& cnf);

/// All four phases in order. The result is logically equivalent to f.
ClauseSet to_clausal_form(const Formula& f);

/// Conjunction of the clauses as a formula. Needs a nonempty set of
/// nonempty clauses.
Formula to_formula(const ClauseSet& s);

/// Drops duplicates and, if requested, clauses containing L and ~L.
ClauseSet normalize_clause_set(const ClauseSet& s, bool drop_tautologies);

// ---------------------------------------------------------------------------
// Clause-set text formats
// ---------------------------------------------------------------------------

/// One clause per line, whitespace-separated literals, `~X` for negation,
/// `#` comments, blank lines ignored.
ClauseSet parse_clause_text(std::string_view text);
std::string format_clause_text(const ClauseSet& s);

/// DIMACS CNF. Variable n is named `x<n>`.
ClauseSet parse_dimacs(std::string_view text);

}  // namespace dnaprover
