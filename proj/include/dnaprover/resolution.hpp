#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dnaprover/logic.hpp"

namespace dnaprover {

struct Resolvent {
  Clause clause;
  /// The literal removed from the first parent; its complement came out of
  /// the second.
  Literal on;

  friend bool operator==(const Resolvent&, const Resolvent&) = default;
};

/// One resolvent per complementary pair (L in c1, ~L in c2). Resolving on two
/// pairs at once is unsound and never produced. Remaining literals of c1 come
/// first, then those of c2.
std::vector<Resolvent> resolve_pair(const Clause& c1, const Clause& c2);

struct ResolvedFrom {
  std::size_t left;   // step id of the parent containing `on`
  std::size_t right;  // step id of the parent containing ~on
  Literal on;

  friend bool operator==(const ResolvedFrom&, const ResolvedFrom&) = default;
};

struct DeductionStep {
  std::size_t id;  // 1-based, parents always have smaller ids
  Clause clause;
  std::optional<ResolvedFrom> source;  // empty for input clauses

  bool is_input() const { return !source.has_value(); }
  friend bool operator==(const DeductionStep&, const DeductionStep&) = default;
};

enum class Verdict { kUnsat, kSatisfiable };

struct RefutationResult {
  Verdict verdict = Verdict::kSatisfiable;
  /// Unsat: only the ancestors of the empty clause. Satisfiable: the
  /// saturated clause set.
  std::vector<DeductionStep> steps;
  std::optional<std::size_t> empty_step;  // id of the {} step when Unsat

  const DeductionStep& step(std::size_t id) const { return steps.at(id - 1); }
};

struct RefuteOptions {
  std::size_t max_clauses = 100'000;
  std::chrono::milliseconds time_budget{10'000};
  bool drop_tautologies = true;
};

/// Level saturation with forward subsumption and tautology deletion. When a
/// goal is given its negation is converted to clauses and added to s.
/// Throws LimitExceeded when the clause or time budget runs out.
RefutationResult refute(const ClauseSet& s, const std::optional<Formula>& goal = std::nullopt,
                        const RefuteOptions& options = {});

/// A scripted resolution step: resolve step `left` with step `right` on the
/// literal `on`, which must occur in `left` with its complement in `right`.
struct ScriptedResolution {
  std::size_t left;
  std::size_t right;
  Literal on;
};

/// Builds a deduction from the given inputs (ids 1..n in order) followed by
/// the scripted resolutions. Throws RuleError on an invalid step. The result
/// is Unsat iff the last step derives {}; it is not pruned.
RefutationResult replay_deduction(const ClauseSet& inputs,
                                  const std::vector<ScriptedResolution>& script);

/// Empty string when every step is a correct input or resolvent of earlier
/// steps and the verdict matches empty_step; otherwise a description of the
/// first defect.
std::string check_deduction(const RefutationResult& r, const ClauseSet& inputs);

/// Number of resolution levels from the empty clause down to the deepest
/// input leaf. Requires an Unsat result.
std::size_t deduction_depth(const RefutationResult& r);

/// Input steps reachable from the empty clause.
std::vector<std::size_t> deduction_leaves(const RefutationResult& r);

/// `k: <clause> [input]` or `k: <clause> [i ⊗ j on L]`, one line per step.
std::string render_trace(const RefutationResult& r);

/// Indented tree rooted at {}; each resolvent's children are its parents.
/// Throws std::logic_error unless r is Unsat.
std::string render_deduction(const RefutationResult& r);

}  // namespace dnaprover
