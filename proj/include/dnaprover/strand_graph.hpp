#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dnaprover/process.hpp"
#include "dnaprover/site.hpp"

namespace dnaprover {

using Edge = SitePair;

struct Vertex {
  std::size_t length = 0;
  std::size_t colour = 0;
  std::vector<Domain> domains;  // one per site, 5' to 3'

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// G = (V, length, colour, A, toehold, E). Everything except the current
/// edge set E is static and shared between the states of one exploration.
class StrandGraph {
 public:
  /// Validates the static invariants (A is exactly the complementary site
  /// pairs, toehold agrees with the site domains, equal colour means equal
  /// strand type) and that E is a site-disjoint subset of A. Throws
  /// WellFormednessError.
  StrandGraph(std::vector<Vertex> vertices, std::vector<Edge> admissible,
              std::vector<bool> toehold, std::vector<Edge> current);

  const std::vector<Vertex>& vertices() const { return topology_->vertices; }
  std::size_t vertex_count() const { return topology_->vertices.size(); }
  std::size_t site_count() const { return topology_->site_count; }

  /// Sorted admissible edges.
  const std::vector<Edge>& admissible() const { return topology_->admissible; }
  /// Toehold flags parallel to admissible().
  const std::vector<bool>& toehold_flags() const { return topology_->toehold; }
  bool is_admissible(const Edge& e) const { return topology_->index.count(e) > 0; }
  /// Throws WellFormednessError for a non-admissible edge.
  bool toehold(const Edge& e) const;
  /// Admissible edges touching s.
  const std::vector<Edge>& admissible_at(const Site& s) const;

  bool contains(const Site& s) const;
  /// ndom: the domain at a site. Throws WellFormednessError when out of range.
  const Domain& domain(const Site& s) const;
  std::vector<Site> all_sites() const;

  /// Sorted current edges.
  const std::vector<Edge>& current() const { return current_; }
  bool is_current(const Edge& e) const;
  /// Same static part, different E. Validates E.
  StrandGraph with_current(std::vector<Edge> current) const;

  /// Indices into admissible() of the current edges, ascending. Used as the
  /// canonical state key.
  std::vector<std::size_t> state_key() const;

  /// Same static components; E is ignored.
  bool same_topology(const StrandGraph& other) const;

  friend bool operator==(const StrandGraph& a, const StrandGraph& b) {
    return a.same_topology(b) && a.current_ == b.current_;
  }

 private:
  struct Topology {
    std::vector<Vertex> vertices;
    std::vector<Edge> admissible;
    std::vector<bool> toehold;
    std::map<Edge, std::size_t> index;
    std::map<Site, std::vector<Edge>> by_site;
    std::size_t site_count = 0;
  };

  StrandGraph(std::shared_ptr<const Topology> topology, std::vector<Edge> current);
  void validate_current() const;

  std::shared_ptr<const Topology> topology_;
  std::vector<Edge> current_;
};

/// Vertices numbered by strand position; colour is the first-appearance
/// index of the strand type; E is the image of the bonds.
StrandGraph from_process(const Process& p);

/// Sites covered by the edges, sorted.
std::vector<Site> sites_of(const std::vector<Edge>& edges);

/// Edges of f next to e on the same vertex pair in antiparallel alignment.
std::vector<Edge> edge_adjacent(const Edge& e, const std::vector<Edge>& f);

/// Some other edge of `edges` is adjacent to e.
bool anchored(const Edge& e, const std::vector<Edge>& edges);

using EdgeHiddenTest = std::function<bool(const StrandGraph&, const Edge&)>;

/// Default hidden test: nothing is ever hidden.
bool never_hidden_edge(const StrandGraph&, const Edge&);

// ---------------------------------------------------------------------------
// Moves
// ---------------------------------------------------------------------------

enum class GraphRule { kGB, kGU, kG3, kGM };

std::string to_string(GraphRule r);

struct Move {
  GraphRule rule;
  /// For GM both lists are in ring order: removed = e_1..e_N and
  /// added = x_1..x_N with x_i = {s'_{i-1}, s_i}.
  std::vector<Edge> removed;
  std::vector<Edge> added;

  /// Order-insensitive comparison of the edge lists.
  friend bool operator==(const Move& a, const Move& b);
};

/// `RULE removed={...} added={...}`
std::string to_string(const Move& m);

/// (GB) Makes a free admissible edge current.
StrandGraph apply_gb(const StrandGraph& g, const Edge& x,
                     const EdgeHiddenTest& hidden = never_hidden_edge);
/// (GU) Drops an unanchored toehold edge.
StrandGraph apply_gu(const StrandGraph& g, const Edge& e);
/// (G3) x = {s, s''} displaces e = {s, s'}; s'' must be free and x anchored
/// once the swap is made.
StrandGraph apply_g3(const StrandGraph& g, const Edge& e, const Edge& x);
/// (GM) Swaps a closed ring of current edges e_1..e_N for x_1..x_N.
StrandGraph apply_gm(const StrandGraph& g, const std::vector<Edge>& ring_current,
                     const std::vector<Edge>& ring_new);

/// Dispatches on m.rule. Throws RuleError when a premise fails.
StrandGraph apply(const StrandGraph& g, const Move& m,
                  const EdgeHiddenTest& hidden = never_hidden_edge);

struct MoveOptions {
  std::size_t max_ring = 4;  // largest GM ring enumerated
  EdgeHiddenTest hidden = never_hidden_edge;
};

/// Every enabled move, deduplicated, in a fixed order: GB, GU, G3, GM.
std::vector<Move> enumerate_moves(const StrandGraph& g, const MoveOptions& options = {});

/// The enabled move of `before` that leads to exactly the current edges of
/// `after`, if there is one.
std::optional<Move> find_move(const StrandGraph& before, const StrandGraph& after,
                              const MoveOptions& options = {});

// ---------------------------------------------------------------------------
// Traces and exploration
// ---------------------------------------------------------------------------

struct Trace {
  std::vector<Edge> initial;
  std::vector<Move> moves;
  std::vector<Edge> final_edges;
};

/// Applies the moves to g (whose E must equal trace.initial) and checks the
/// result against final_edges. Throws RuleError on any mismatch.
StrandGraph replay(const StrandGraph& g, const Trace& trace,
                   const EdgeHiddenTest& hidden = never_hidden_edge);

/// `step k: RULE removed={...} added={...} |E|=n`, one line per move.
std::string format_trace(const Trace& trace);

/// `{{(1,2),(3,1)}, ...}`
std::string format_edges(const std::vector<Edge>& edges);

struct ExploreOptions {
  std::size_t max_states = 100'000;
  std::size_t max_depth = 64;
  MoveOptions moves;
  /// Exploration stops as soon as a discovered state satisfies this.
  std::function<bool(const StrandGraph&)> stop_when;
};

enum class ExploreStatus {
  kComplete,    // every reachable state was expanded
  kStopped,     // stop_when matched
  kStateLimit,  // max_states reached with states left to discover
  kDepthLimit,  // states at max_depth still had moves
};

std::string to_string(ExploreStatus s);

struct ExploredState {
  std::vector<Edge> edges;
  std::size_t depth = 0;
  std::optional<std::size_t> parent;
  std::optional<Move> via;
  bool expanded = false;
  std::size_t successors = 0;  // enabled moves, valid once expanded
};

struct ExploreReport {
  StrandGraph initial;
  ExploreStatus status = ExploreStatus::kComplete;
  /// Breadth-first discovery order; states[0] is the initial state.
  std::vector<ExploredState> states;
  /// Expanded states with no enabled move, ascending.
  std::vector<std::size_t> terminal;
  std::size_t transitions = 0;
  std::optional<std::size_t> stopped_at;

  StrandGraph graph(std::size_t state) const;
  /// Shortest trace from the initial state.
  Trace trace_to(std::size_t state) const;
  /// Index of the state with exactly these current edges, if discovered.
  std::optional<std::size_t> find(const std::vector<Edge>& edges) const;
};

/// Breadth-first closure over enumerate_moves. Deterministic.
ExploreReport explore(const StrandGraph& g, const ExploreOptions& options = {});

}  // namespace dnaprover
