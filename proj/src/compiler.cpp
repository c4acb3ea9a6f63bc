#include <algorithm>

#include "dnaprover/compiler.hpp"
#include "dnaprover/error.hpp"

namespace dnaprover {

CompiledProgram compile(const ClauseSet& s, const Codebook& cb) {
  CompiledProgram out;
  std::vector<Strand> strands;
  for (const auto& clause : s) {
    if (clause.empty()) throw CodebookError("the empty clause has no strand");
    CompiledClause cc;
    cc.clause = clause;
    for (const auto& lit : clause.literals()) {
      cc.strand.push_back({lit.variable, lit.negated, false, std::nullopt});
      cc.bases += cb.lookup(lit);
    }
    strands.push_back(cc.strand);
    out.clauses.push_back(std::move(cc));
  }
  out.process = Process(std::move(strands));
  return out;
}

std::string format_fasta(const CompiledProgram& program) {
  std::string out;
  for (std::size_t k = 0; k < program.clauses.size(); ++k) {
    const auto& cc = program.clauses[k];
    out += ">clause " + std::to_string(k + 1) + ": " + to_string(cc.clause) + "\n" + cc.bases + "\n";
  }
  return out;
}

HybridizationVerdict hybridization_verdict(const Process& p, const HybridizationBounds& bounds) {
  const StrandGraph g = from_process(p);
  const std::size_t sites = g.site_count();

  ExploreOptions options;
  options.max_states = bounds.max_states;
  options.max_depth = bounds.max_depth;
  options.moves.max_ring = bounds.max_ring;
  options.stop_when = [sites](const StrandGraph& state) {
    return sites > 0 && state.current().size() * 2 == sites;
  };
  const ExploreReport report = explore(g, options);

  HybridizationVerdict verdict;
  verdict.states_explored = report.states.size();
  if (report.stopped_at) {
    verdict.outcome = HybridizationOutcome::kUnsat;
    verdict.witness = report.trace_to(*report.stopped_at);
    return verdict;
  }
  if (report.status != ExploreStatus::kComplete)
    throw LimitExceeded("hybridization search stopped early (" + to_string(report.status) + ", " +
                        std::to_string(report.states.size()) + " states)");

  // Prefer terminal states; a space made only of cycles falls back to all states.
  std::vector<std::size_t> candidates = report.terminal;
  if (candidates.empty()) {
    for (std::size_t i = 0; i < report.states.size(); ++i) candidates.push_back(i);
  }
  std::size_t best = candidates.front();
  for (std::size_t i : candidates)
    if (report.states[i].edges.size() > report.states[best].edges.size()) best = i;

  verdict.outcome = HybridizationOutcome::kSatisfiable;
  verdict.witness = report.trace_to(best);
  const std::vector<Site> bound = sites_of(report.states[best].edges);
  for (const auto& s : g.all_sites())
    if (!std::binary_search(bound.begin(), bound.end(), s)) verdict.free_sites.push_back(s);
  return verdict;
}

}  // namespace dnaprover
