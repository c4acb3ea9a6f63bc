#include "dnaprover/resolution.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "dnaprover/error.hpp"

namespace dnaprover {

std::vector<Resolvent> resolve_pair(const Clause& c1, const Clause& c2) {
  std::vector<Resolvent> out;
  for (const auto& l : c1.literals()) {
    const Literal comp = l.complement();
    if (!c2.contains(comp)) continue;
    Clause resolvent;
    for (const auto& m : c1.literals())
      if (m != l) resolvent.insert(m);
    for (const auto& m : c2.literals())
      if (m != comp) resolvent.insert(m);
    out.push_back({std::move(resolvent), l});
  }
  return out;
}

namespace {

struct Candidate {
  Clause clause;
  ResolvedFrom source;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  return std::tie(a.clause, a.source.left, a.source.right, a.source.on) <
         std::tie(b.clause, b.source.left, b.source.right, b.source.on);
}

// Keeps only the ancestors of `root`, renumbered 1..k in original order.
RefutationResult prune_to_ancestors(const std::vector<DeductionStep>& all, std::size_t root) {
  std::vector<bool> keep(all.size() + 1, false);
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    if (keep[id]) continue;
    keep[id] = true;
    if (const auto& src = all[id - 1].source) {
      stack.push_back(src->left);
      stack.push_back(src->right);
    }
  }
  std::vector<std::size_t> remap(all.size() + 1, 0);
  RefutationResult out;
  out.verdict = Verdict::kUnsat;
  for (std::size_t id = 1; id <= all.size(); ++id) {
    if (!keep[id]) continue;
    DeductionStep step = all[id - 1];
    step.id = out.steps.size() + 1;
    remap[id] = step.id;
    if (step.source) {
      step.source->left = remap[step.source->left];
      step.source->right = remap[step.source->right];
    }
    out.steps.push_back(std::move(step));
  }
  out.empty_step = remap[root];
  return out;
}

}  // namespace

RefutationResult refute(const ClauseSet& s, const std::optional<Formula>& goal,
                        const RefuteOptions& options) {
  ClauseSet input = s;
  if (goal) {
    for (const auto& c : to_clausal_form(Formula::negation(*goal))) input.insert(c);
  }
  if (input.empty()) throw std::invalid_argument("refute: empty clause set");
  input = normalize_clause_set(input, options.drop_tautologies);

  using Clock = std::chrono::steady_clock;
  const auto deadline = Clock::now() + options.time_budget;

  std::vector<DeductionStep> kept;
  for (const auto& c : input) {
    kept.push_back({kept.size() + 1, c, std::nullopt});
    if (c.empty()) return prune_to_ancestors(kept, kept.size());
  }

  auto subsumed = [&](const Clause& c) {
    return std::any_of(kept.begin(), kept.end(),
                       [&](const DeductionStep& k) { return k.clause.subsumes(c); });
  };

  std::size_t frontier_begin = 0;
  std::size_t generated = 0;
  for (;;) {
    const std::size_t frontier_end = kept.size();
    std::vector<Candidate> candidates;
    for (std::size_t b = frontier_begin; b < frontier_end; ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        for (int dir = 0; dir < 2; ++dir) {
          const std::size_t left = dir == 0 ? a : b;
          const std::size_t right = dir == 0 ? b : a;
          for (auto& r : resolve_pair(kept[left].clause, kept[right].clause)) {
            if (options.drop_tautologies && r.clause.is_tautology()) continue;
            candidates.push_back({std::move(r.clause), {left + 1, right + 1, std::move(r.on)}});
          }
        }
      }
      if ((++generated & 0x3f) == 0 && Clock::now() > deadline)
        throw LimitExceeded("resolution time budget exhausted");
    }
    std::sort(candidates.begin(), candidates.end(), candidate_less);

    bool progress = false;
    for (auto& cand : candidates) {
      if (subsumed(cand.clause)) continue;
      progress = true;
      const bool empty = cand.clause.empty();
      kept.push_back({kept.size() + 1, std::move(cand.clause), std::move(cand.source)});
      if (empty) return prune_to_ancestors(kept, kept.size());
      if (kept.size() > options.max_clauses)
        throw LimitExceeded("resolution clause limit of " + std::to_string(options.max_clauses) +
                            " exceeded");
    }
    if (Clock::now() > deadline) throw LimitExceeded("resolution time budget exhausted");
    if (!progress) {
      RefutationResult out;
      out.verdict = Verdict::kSatisfiable;
      out.steps = std::move(kept);
      return out;
    }
    frontier_begin = frontier_end;
  }
}

RefutationResult replay_deduction(const ClauseSet& inputs,
                                  const std::vector<ScriptedResolution>& script) {
  RefutationResult out;
  for (const auto& c : inputs) out.steps.push_back({out.steps.size() + 1, c, std::nullopt});
  for (const auto& s : script) {
    const std::size_t id = out.steps.size() + 1;
    if (s.left == 0 || s.right == 0 || s.left >= id || s.right >= id)
      throw RuleError("scripted step " + std::to_string(id) + " refers to a later step");
    const Clause& left = out.step(s.left).clause;
    const Clause& right = out.step(s.right).clause;
    std::optional<Clause> resolvent;
    for (auto& r : resolve_pair(left, right))
      if (r.on == s.on) resolvent = std::move(r.clause);
    if (!resolvent)
      throw RuleError("scripted step " + std::to_string(id) + ": cannot resolve " +
                      to_string(left) + " with " + to_string(right) + " on " + to_string(s.on));
    out.steps.push_back({id, std::move(*resolvent), ResolvedFrom{s.left, s.right, s.on}});
  }
  if (!out.steps.empty() && out.steps.back().clause.empty()) {
    out.verdict = Verdict::kUnsat;
    out.empty_step = out.steps.back().id;
  }
  return out;
}

std::string check_deduction(const RefutationResult& r, const ClauseSet& inputs) {
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const DeductionStep& step = r.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + ": ";
    if (step.id != i + 1) return where + "id out of sequence";
    if (step.is_input()) {
      if (!inputs.contains(step.clause)) return where + "input clause not in the clause set";
      continue;
    }
    const ResolvedFrom& src = *step.source;
    if (src.left == 0 || src.right == 0 || src.left >= step.id || src.right >= step.id)
      return where + "parent does not precede the step";
    const Clause& left = r.step(src.left).clause;
    const Clause& right = r.step(src.right).clause;
    if (!left.contains(src.on) || !right.contains(src.on.complement()))
      return where + "resolved literal not complementary across parents";
    bool found = false;
    for (const auto& res : resolve_pair(left, right))
      if (res.on == src.on && res.clause == step.clause) found = true;
    if (!found) return where + "clause is not the resolvent of its parents";
  }
  const bool has_empty = r.empty_step && *r.empty_step >= 1 && *r.empty_step <= r.steps.size() &&
                         r.step(*r.empty_step).clause.empty();
  if ((r.verdict == Verdict::kUnsat) != has_empty)
    return "verdict disagrees with the empty-clause step";
  return {};
}

std::size_t deduction_depth(const RefutationResult& r) {
  if (r.verdict != Verdict::kUnsat || !r.empty_step)
    throw std::logic_error("deduction_depth: result is not a refutation");
  std::vector<std::size_t> depth(r.steps.size() + 1, 0);
  for (const auto& step : r.steps) {
    if (step.source)
      depth[step.id] = 1 + std::max(depth[step.source->left], depth[step.source->right]);
  }
  return depth[*r.empty_step];
}

std::vector<std::size_t> deduction_leaves(const RefutationResult& r) {
  if (!r.empty_step) return {};
  std::vector<bool> seen(r.steps.size() + 1, false);
  std::vector<std::size_t> leaves;
  std::vector<std::size_t> stack{*r.empty_step};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    if (seen[id]) continue;
    seen[id] = true;
    const auto& step = r.step(id);
    if (step.is_input()) {
      leaves.push_back(id);
    } else {
      stack.push_back(step.source->left);
      stack.push_back(step.source->right);
    }
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

std::string render_trace(const RefutationResult& r) {
  std::string out;
  for (const auto& step : r.steps) {
    out += std::to_string(step.id) + ": " + to_string(step.clause);
    if (step.is_input()) {
      out += " [input]";
    } else {
      out += " [" + std::to_string(step.source->left) + " ⊗ " +
             std::to_string(step.source->right) + " on " + to_string(step.source->on) + "]";
    }
    out += '\n';
  }
  return out;
}

std::string render_deduction(const RefutationResult& r) {
  if (r.verdict != Verdict::kUnsat || !r.empty_step)
    throw std::logic_error("render_deduction: result is not a refutation");
  std::string out;
  std::function<void(std::size_t, std::size_t)> emit = [&](std::size_t id, std::size_t indent) {
    const auto& step = r.step(id);
    out.append(indent * 2, ' ');
    out += to_string(step.clause);
    if (step.is_input()) {
      out += "  (" + std::to_string(id) + ", input)\n";
      return;
    }
    out += "  (" + std::to_string(id) + ", on " + to_string(step.source->on) + ")\n";
    emit(step.source->left, indent + 1);
    emit(step.source->right, indent + 1);
  };
  emit(*r.empty_step, 0);
  return out;
}

}  // namespace dnaprover
