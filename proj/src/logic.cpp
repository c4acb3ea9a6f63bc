#include "dnaprover/logic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dnaprover {

// ---------------------------------------------------------------------------
// Formula
// ---------------------------------------------------------------------------

Formula Formula::make(Connective kind, std::vector<Formula> operands) {
  return Formula(std::make_shared<const Node>(Node{kind, {}, std::move(operands)}));
}

Formula make_nary(Connective kind, std::vector<Formula> operands) {
  if (operands.size() == 1) return operands.front();
  return Formula::make(kind, std::move(operands));
}

Formula Formula::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  return Formula(std::make_shared<const Node>(Node{Connective::kVar, std::move(name), {}}));
}

Formula Formula::negation(Formula operand) {
  return make(Connective::kNot, {std::move(operand)});
}

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.size() < 2) throw std::invalid_argument("conjunction needs two or more operands");
  return make(Connective::kAnd, std::move(operands));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.size() < 2) throw std::invalid_argument("disjunction needs two or more operands");
  return make(Connective::kOr, std::move(operands));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return make(Connective::kImplies, {std::move(lhs), std::move(rhs)});
}

Formula Formula::implied_by(Formula lhs, Formula rhs) {
  return make(Connective::kImpliedBy, {std::move(lhs), std::move(rhs)});
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return make(Connective::kIff, {std::move(lhs), std::move(rhs)});
}

bool Formula::is_literal() const {
  return kind() == Connective::kVar ||
         (kind() == Connective::kNot && operands()[0].kind() == Connective::kVar);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.operands() == b.operands();
}

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Connective::kVar) {
    out.insert(f.name());
    return;
  }
  for (const auto& op : f.operands()) collect_variables(op, out);
}

int precedence(Connective c) {
  switch (c) {
    case Connective::kVar:
    case Connective::kNot:
      return 3;
    case Connective::kAnd:
      return 2;
    case Connective::kOr:
      return 1;
    default:
      return 0;
  }
}

void print(const Formula& f, std::string& out);

void print_operand(const Formula& child, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  print(child, out);
  if (parenthesize) out += ')';
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::kVar:
      out += f.name();
      return;
    case Connective::kNot:
      out += '~';
      print_operand(f.operands()[0], precedence(f.operands()[0].kind()) < 3, out);
      return;
    case Connective::kAnd:
    case Connective::kOr: {
      const char* sep = f.kind() == Connective::kAnd ? " & " : " | ";
      bool first = true;
      for (const auto& op : f.operands()) {
        if (!first) out += sep;
        first = false;
        // Nested same-kind operands keep their grouping.
        print_operand(op, precedence(op.kind()) <= precedence(f.kind()), out);
      }
      return;
    }
    case Connective::kImplies:
    case Connective::kImpliedBy:
    case Connective::kIff: {
      const char* arrow = f.kind() == Connective::kImplies     ? " -> "
                          : f.kind() == Connective::kImpliedBy ? " <- "
                                                               : " <-> ";
      print_operand(f.operands()[0], precedence(f.operands()[0].kind()) == 0, out);
      out += arrow;
      print_operand(f.operands()[1], precedence(f.operands()[1].kind()) == 0, out);
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> names;
  collect_variables(f, names);
  return {names.begin(), names.end()};
}

// ---------------------------------------------------------------------------
// Literal / Clause / ClauseSet
// ---------------------------------------------------------------------------

Literal positive(std::string variable) { return {std::move(variable), false}; }
Literal negative(std::string variable) { return {std::move(variable), true}; }

std::string to_string(const Literal& l) { return (l.negated ? "~" : "") + l.variable; }

Clause::Clause(std::initializer_list<Literal> literals) {
  for (const auto& l : literals) insert(l);
}

Clause::Clause(const std::vector<Literal>& literals) {
  for (const auto& l : literals) insert(l);
}

bool Clause::insert(const Literal& l) {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), l);
  if (it != sorted_.end() && *it == l) return false;
  sorted_.insert(it, l);
  literals_.push_back(l);
  return true;
}

bool Clause::contains(const Literal& l) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), l);
}

bool Clause::is_tautology() const {
  // Sorted order places X directly before ~X.
  for (std::size_t i = 1; i < sorted_.size(); ++i) {
    if (sorted_[i].variable == sorted_[i - 1].variable) return true;
  }
  return false;
}

bool Clause::subsumes(const Clause& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.sorted_.begin(), other.sorted_.end(), sorted_.begin(),
                       sorted_.end());
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  return std::lexicographical_compare_three_way(a.sorted_.begin(), a.sorted_.end(),
                                                b.sorted_.begin(), b.sorted_.end());
}

std::string to_string(const Clause& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : c.literals()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(l);
  }
  out += '}';
  return out;
}

ClauseSet::ClauseSet(std::initializer_list<Clause> clauses) {
  for (const auto& c : clauses) insert(c);
}

ClauseSet::ClauseSet(const std::vector<Clause>& clauses) {
  for (const auto& c : clauses) insert(c);
}

bool ClauseSet::insert(const Clause& c) {
  if (contains(c)) return false;
  clauses_.push_back(c);
  return true;
}

bool ClauseSet::contains(const Clause& c) const {
  return std::find(clauses_.begin(), clauses_.end(), c) != clauses_.end();
}

bool operator==(const ClauseSet& a, const ClauseSet& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Clause& c) { return b.contains(c); });
}

std::string to_string(const ClauseSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : s) {
    if (!first) out += ", ";
    first = false;
    out += to_string(c);
  }
  out += '}';
  return out;
}

std::vector<std::string> variables(const ClauseSet& s) {
  std::set<std::string> names;
  for (const auto& c : s)
    for (const auto& l : c.literals()) names.insert(l.variable);
  return {names.begin(), names.end()};
}

// ---------------------------------------------------------------------------
// Clausal conversion
// ---------------------------------------------------------------------------

Formula eliminate_implications(const Formula& f) {
  switch (f.kind()) {
    case Connective::kVar:
      return f;
    case Connective::kNot:
      return Formula::negation(eliminate_implications(f.operands()[0]));
    case Connective::kAnd:
    case Connective::kOr: {
      std::vector<Formula> ops;
      ops.reserve(f.operands().size());
      for (const auto& op : f.operands()) ops.push_back(eliminate_implications(op));
      return make_nary(f.kind(), std::move(ops));
    }
    default:
      break;
  }
  Formula lhs = eliminate_implications(f.operands()[0]);
  Formula rhs = eliminate_implications(f.operands()[1]);
  switch (f.kind()) {
    case Connective::kImplies:
      return Formula::disjunction({Formula::negation(lhs), rhs});
    case Connective::kImpliedBy:
      return Formula::disjunction({lhs, Formula::negation(rhs)});
    default:
      return Formula::conjunction({Formula::disjunction({Formula::negation(lhs), rhs}),
                                   Formula::disjunction({lhs, Formula::negation(rhs)})});
  }
}

namespace {

Formula nnf(const Formula& f, bool negate) {
  switch (f.kind()) {
    case Connective::kVar:
      return negate ? Formula::negation(f) : f;
    case Connective::kNot:
      return nnf(f.operands()[0], !negate);
    case Connective::kAnd:
    case Connective::kOr: {
      std::vector<Formula> ops;
      ops.reserve(f.operands().size());
      for (const auto& op : f.operands()) ops.push_back(nnf(op, negate));
      Connective kind = f.kind();
      if (negate) kind = kind == Connective::kAnd ? Connective::kOr : Connective::kAnd;
      return make_nary(kind, std::move(ops));
    }
    default:
      throw std::invalid_argument("push_negations: arrows must be eliminated first");
  }
}

using Disjunct = std::vector<Formula>;  // literals
using Cnf = std::vector<Disjunct>;

Cnf cnf_of(const Formula& f) {
  if (f.is_literal()) return {{f}};
  if (f.kind() == Connective::kAnd) {
    Cnf out;
    for (const auto& op : f.operands()) {
      Cnf part = cnf_of(op);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (f.kind() == Connective::kOr) {
    Cnf acc{{}};
    for (const auto& op : f.operands()) {
      Cnf part = cnf_of(op);
      Cnf next;
      next.reserve(acc.size() * part.size());
      for (const auto& left : acc) {
        for (const auto& right : part) {
          Disjunct d = left;
          d.insert(d.end(), right.begin(), right.end());
          next.push_back(std::move(d));
        }
      }
      acc = std::move(next);
    }
    return acc;
  }
  throw std::invalid_argument("distribute: formula is not in negation normal form");
}

Literal literal_of(const Formula& f) {
  if (f.kind() == Connective::kVar) return positive(f.name());
  return negative(f.operands()[0].name());
}

void clause_of(const Formula& f, Clause& out) {
  if (f.is_literal()) {
    out.insert(literal_of(f));
    return;
  }
  if (f.kind() != Connective::kOr)
    throw std::invalid_argument("to_clause_set: expected a disjunction of literals");
  for (const auto& op : f.operands()) clause_of(op, out);
}

void clauses_of(const Formula& f, ClauseSet& out) {
  if (f.kind() == Connective::kAnd) {
    for (const auto& op : f.operands()) clauses_of(op, out);
    return;
  }
  Clause c;
  clause_of(f, c);
  out.insert(c);
}

}  // namespace

Formula push_negations(const Formula& f) { return nnf(f, false); }

Formula distribute(const Formula& f) {
  Cnf cnf = cnf_of(f);
  std::vector<Formula> conjuncts;
  conjuncts.reserve(cnf.size());
  for (auto& d : cnf) conjuncts.push_back(make_nary(Connective::kOr, std::move(d)));
  return make_nary(Connective::kAnd, std::move(conjuncts));
}

ClauseSet to_clause_set(const Formula& cnf) {
  ClauseSet out;
  clauses_of(cnf, out);
  return out;
}

ClauseSet to_clausal_form(const Formula& f) {
  return to_clause_set(distribute(push_negations(eliminate_implications(f))));
}

Formula to_formula(const ClauseSet& s) {
  if (s.empty()) throw std::invalid_argument("to_formula: empty clause set");
  std::vector<Formula> conjuncts;
  for (const auto& c : s) {
    if (c.empty()) throw std::invalid_argument("to_formula: empty clause");
    std::vector<Formula> lits;
    for (const auto& l : c.literals()) {
      Formula v = Formula::var(l.variable);
      lits.push_back(l.negated ? Formula::negation(v) : v);
    }
    conjuncts.push_back(make_nary(Connective::kOr, std::move(lits)));
  }
  return make_nary(Connective::kAnd, std::move(conjuncts));
}

ClauseSet normalize_clause_set(const ClauseSet& s, bool drop_tautologies) {
  ClauseSet out;
  for (const auto& c : s) {
    if (drop_tautologies && c.is_tautology()) continue;
    out.insert(c);
  }
  return out;
}

}  // namespace dnaprover
