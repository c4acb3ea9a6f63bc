#include <algorithm>
#include <deque>
#include <unordered_map>

#include "dnaprover/error.hpp"
#include "dnaprover/strand_graph.hpp"

namespace dnaprover {
namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::size_t>& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::size_t k : key) {
      h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

std::string to_string(ExploreStatus s) {
  switch (s) {
    case ExploreStatus::kComplete: return "complete";
    case ExploreStatus::kStopped: return "stopped";
    case ExploreStatus::kStateLimit: return "state-limit";
    case ExploreStatus::kDepthLimit: return "depth-limit";
  }
  return "?";
}

StrandGraph ExploreReport::graph(std::size_t state) const {
  return initial.with_current(states.at(state).edges);
}

Trace ExploreReport::trace_to(std::size_t state) const {
  Trace t;
  t.initial = states.at(0).edges;
  t.final_edges = states.at(state).edges;
  for (std::size_t at = state; states[at].parent; at = *states[at].parent)
    t.moves.push_back(*states[at].via);
  std::reverse(t.moves.begin(), t.moves.end());
  return t;
}

std::optional<std::size_t> ExploreReport::find(const std::vector<Edge>& edges) const {
  std::vector<Edge> want = edges;
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i].edges == want) return i;
  return std::nullopt;
}

ExploreReport explore(const StrandGraph& g, const ExploreOptions& options) {
  if (options.max_states == 0) throw std::invalid_argument("explore: max_states must be positive");

  ExploreReport report{g, ExploreStatus::kComplete, {}, {}, 0, std::nullopt};
  std::unordered_map<std::vector<std::size_t>, std::size_t, KeyHash> seen;

  report.states.push_back({g.current(), 0, std::nullopt, std::nullopt, false, 0});
  seen.emplace(g.state_key(), 0);
  if (options.stop_when && options.stop_when(g)) {
    report.status = ExploreStatus::kStopped;
    report.stopped_at = 0;
    return report;
  }

  bool depth_cut = false;
  for (std::size_t next = 0; next < report.states.size(); ++next) {
    const StrandGraph state = report.graph(next);
    const std::size_t depth = report.states[next].depth;
    const std::vector<Move> moves = enumerate_moves(state, options.moves);
    report.states[next].expanded = true;
    report.states[next].successors = moves.size();
    if (moves.empty()) {
      report.terminal.push_back(next);
      continue;
    }
    if (depth >= options.max_depth) {
      // Expanded only far enough to know it is not terminal.
      depth_cut = true;
      continue;
    }
    for (const auto& m : moves) {
      StrandGraph succ = apply(state, m, options.moves.hidden);
      ++report.transitions;
      auto key = succ.state_key();
      if (seen.count(key)) continue;
      if (report.states.size() >= options.max_states) {
        report.status = ExploreStatus::kStateLimit;
        return report;
      }
      const std::size_t id = report.states.size();
      seen.emplace(std::move(key), id);
      report.states.push_back({succ.current(), depth + 1, next, m, false, 0});
      if (options.stop_when && options.stop_when(succ)) {
        report.status = ExploreStatus::kStopped;
        report.stopped_at = id;
        return report;
      }
    }
  }
  if (depth_cut) report.status = ExploreStatus::kDepthLimit;
  return report;
}

}  // namespace dnaprover
