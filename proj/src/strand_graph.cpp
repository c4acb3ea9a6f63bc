#include "dnaprover/strand_graph.hpp"

#include <algorithm>
#include <set>

#include "dnaprover/error.hpp"

namespace dnaprover {

// ---------------------------------------------------------------------------
// StrandGraph
// ---------------------------------------------------------------------------

StrandGraph::StrandGraph(std::vector<Vertex> vertices, std::vector<Edge> admissible,
                         std::vector<bool> toehold, std::vector<Edge> current) {
  auto topo = std::make_shared<Topology>();
  topo->vertices = std::move(vertices);

  std::map<std::size_t, const Vertex*> by_colour;
  for (std::size_t v = 0; v < topo->vertices.size(); ++v) {
    const Vertex& vx = topo->vertices[v];
    if (vx.length == 0 || vx.length != vx.domains.size())
      throw WellFormednessError("vertex " + std::to_string(v + 1) +
                                ": length does not match its domains");
    topo->site_count += vx.length;
    auto [it, inserted] = by_colour.emplace(vx.colour, &vx);
    if (!inserted && it->second->domains != vx.domains)
      throw WellFormednessError("vertex " + std::to_string(v + 1) +
                                ": shares a colour with a different strand type");
  }

  std::vector<Site> sites;
  for (std::size_t v = 0; v < topo->vertices.size(); ++v)
    for (std::size_t n = 1; n <= topo->vertices[v].length; ++n) sites.push_back({v + 1, n});
  auto dom = [&](const Site& s) -> const Domain& {
    return topo->vertices[s.vertex - 1].domains[s.position - 1];
  };

  std::vector<Edge> expected;
  for (std::size_t i = 0; i < sites.size(); ++i)
    for (std::size_t j = i + 1; j < sites.size(); ++j)
      if (complementary(dom(sites[i]), dom(sites[j]))) expected.emplace_back(sites[i], sites[j]);

  if (toehold.size() != admissible.size())
    throw WellFormednessError("toehold flags do not match the admissible edges");
  std::vector<std::pair<Edge, bool>> given;
  for (std::size_t i = 0; i < admissible.size(); ++i) given.emplace_back(admissible[i], toehold[i]);
  std::sort(given.begin(), given.end());
  for (const auto& [e, flag] : given) {
    if (e.first == e.second) throw WellFormednessError("edge joins a site to itself");
    const auto& verts = topo->vertices;
    for (const Site& s : {e.first, e.second})
      if (s.vertex < 1 || s.vertex > verts.size() || s.position < 1 ||
          s.position > verts[s.vertex - 1].length)
        throw WellFormednessError("edge " + to_string(e) + " names a missing site");
    if (flag != dom(e.first).toehold)
      throw WellFormednessError("toehold flag of " + to_string(e) + " disagrees with its domains");
    topo->admissible.push_back(e);
    topo->toehold.push_back(flag);
  }
  if (topo->admissible != expected)
    throw WellFormednessError("admissible edges are not the complementary site pairs");

  for (std::size_t i = 0; i < topo->admissible.size(); ++i) {
    const Edge& e = topo->admissible[i];
    topo->index.emplace(e, i);
    topo->by_site[e.first].push_back(e);
    topo->by_site[e.second].push_back(e);
  }

  topology_ = std::move(topo);
  current_ = std::move(current);
  std::sort(current_.begin(), current_.end());
  validate_current();
}

StrandGraph::StrandGraph(std::shared_ptr<const Topology> topology, std::vector<Edge> current)
    : topology_(std::move(topology)), current_(std::move(current)) {
  std::sort(current_.begin(), current_.end());
  validate_current();
}

void StrandGraph::validate_current() const {
  std::set<Site> used;
  for (std::size_t i = 0; i < current_.size(); ++i) {
    const Edge& e = current_[i];
    if (!is_admissible(e)) throw WellFormednessError("current edge " + to_string(e) + " is not admissible");
    if (!used.insert(e.first).second || !used.insert(e.second).second)
      throw WellFormednessError("current edges share a site at " + to_string(e));
  }
}

bool StrandGraph::toehold(const Edge& e) const {
  auto it = topology_->index.find(e);
  if (it == topology_->index.end())
    throw WellFormednessError("edge " + to_string(e) + " is not admissible");
  return topology_->toehold[it->second];
}

const std::vector<Edge>& StrandGraph::admissible_at(const Site& s) const {
  static const std::vector<Edge> kNone;
  auto it = topology_->by_site.find(s);
  return it == topology_->by_site.end() ? kNone : it->second;
}

bool StrandGraph::contains(const Site& s) const {
  return s.vertex >= 1 && s.vertex <= vertex_count() && s.position >= 1 &&
         s.position <= vertices()[s.vertex - 1].length;
}

const Domain& StrandGraph::domain(const Site& s) const {
  if (!contains(s)) throw WellFormednessError("no site " + to_string(s));
  return vertices()[s.vertex - 1].domains[s.position - 1];
}

std::vector<Site> StrandGraph::all_sites() const {
  std::vector<Site> out;
  out.reserve(site_count());
  for (std::size_t v = 0; v < vertex_count(); ++v)
    for (std::size_t n = 1; n <= vertices()[v].length; ++n) out.push_back({v + 1, n});
  return out;
}

bool StrandGraph::is_current(const Edge& e) const {
  return std::binary_search(current_.begin(), current_.end(), e);
}

StrandGraph StrandGraph::with_current(std::vector<Edge> current) const {
  return StrandGraph(topology_, std::move(current));
}

std::vector<std::size_t> StrandGraph::state_key() const {
  std::vector<std::size_t> key;
  key.reserve(current_.size());
  for (const auto& e : current_) key.push_back(topology_->index.at(e));
  return key;
}

bool StrandGraph::same_topology(const StrandGraph& other) const {
  if (topology_ == other.topology_) return true;
  return vertices() == other.vertices() && admissible() == other.admissible() &&
         toehold_flags() == other.toehold_flags();
}

StrandGraph from_process(const Process& p) {
  std::vector<Vertex> vertices;
  std::vector<std::vector<Domain>> types;
  for (const auto& strand : p.strands()) {
    Vertex v;
    v.length = strand.size();
    for (const auto& d : strand) v.domains.push_back(d.type());
    auto it = std::find(types.begin(), types.end(), v.domains);
    if (it == types.end()) {
      types.push_back(v.domains);
      v.colour = types.size();
    } else {
      v.colour = static_cast<std::size_t>(it - types.begin()) + 1;
    }
    vertices.push_back(std::move(v));
  }

  std::vector<Site> sites;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (std::size_t n = 1; n <= vertices[v].length; ++n) sites.push_back({v + 1, n});
  std::vector<Edge> admissible;
  std::vector<bool> toehold;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      const Domain& a = vertices[sites[i].vertex - 1].domains[sites[i].position - 1];
      const Domain& b = vertices[sites[j].vertex - 1].domains[sites[j].position - 1];
      if (!complementary(a, b)) continue;
      admissible.emplace_back(sites[i], sites[j]);
      toehold.push_back(a.toehold);
    }
  }

  std::vector<Edge> current;
  for (const auto& id : p.bonds()) current.push_back(p.endpoints(id));
  return StrandGraph(std::move(vertices), std::move(admissible), std::move(toehold),
                     std::move(current));
}

// ---------------------------------------------------------------------------
// Edge predicates
// ---------------------------------------------------------------------------

std::vector<Site> sites_of(const std::vector<Edge>& edges) {
  std::vector<Site> out;
  out.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    out.push_back(e.first);
    out.push_back(e.second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Edge> edge_adjacent(const Edge& e, const std::vector<Edge>& f) {
  std::vector<Edge> out;
  for (const auto& other : f)
    if (antiparallel_adjacent(e, other)) out.push_back(other);
  return out;
}

bool anchored(const Edge& e, const std::vector<Edge>& edges) {
  return std::any_of(edges.begin(), edges.end(), [&](const Edge& other) {
    return other != e && antiparallel_adjacent(e, other);
  });
}

bool never_hidden_edge(const StrandGraph&, const Edge&) { return false; }

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

std::string to_string(GraphRule r) {
  switch (r) {
    case GraphRule::kGB: return "GB";
    case GraphRule::kGU: return "GU";
    case GraphRule::kG3: return "G3";
    case GraphRule::kGM: return "GM";
  }
  return "?";
}

std::string format_edges(const std::vector<Edge>& edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ", ";
    out += to_string(edges[i]);
  }
  return out + "}";
}

namespace {

std::vector<Edge> sorted(std::vector<Edge> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool site_bound(const StrandGraph& g, const Site& s) {
  const auto& e = g.current();
  return std::any_of(e.begin(), e.end(), [&](const Edge& x) { return x.touches(s); });
}

std::vector<Edge> swap_edges(const std::vector<Edge>& current, const std::vector<Edge>& removed,
                             const std::vector<Edge>& added) {
  std::vector<Edge> out;
  for (const auto& e : current)
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) out.push_back(e);
  out.insert(out.end(), added.begin(), added.end());
  std::sort(out.begin(), out.end());
  return out;
}

void require_new_admissible(const StrandGraph& g, const Edge& x, const char* rule) {
  if (!g.is_admissible(x))
    throw RuleError(std::string(rule) + ": " + to_string(x) + " is not an admissible edge");
  if (g.is_current(x))
    throw RuleError(std::string(rule) + ": " + to_string(x) + " is already current");
}

}  // namespace

bool operator==(const Move& a, const Move& b) {
  return a.rule == b.rule && sorted(a.removed) == sorted(b.removed) &&
         sorted(a.added) == sorted(b.added);
}

std::string to_string(const Move& m) {
  return to_string(m.rule) + " removed=" + format_edges(m.removed) +
         " added=" + format_edges(m.added);
}

StrandGraph apply_gb(const StrandGraph& g, const Edge& x, const EdgeHiddenTest& hidden) {
  require_new_admissible(g, x, "GB");
  for (const Site& s : {x.first, x.second})
    if (site_bound(g, s)) throw RuleError("GB: site " + to_string(s) + " is occupied");
  if (hidden(g, x)) throw RuleError("GB: " + to_string(x) + " is hidden");
  return g.with_current(swap_edges(g.current(), {}, {x}));
}

StrandGraph apply_gu(const StrandGraph& g, const Edge& e) {
  if (!g.is_current(e)) throw RuleError("GU: " + to_string(e) + " is not current");
  if (!g.toehold(e)) throw RuleError("GU: " + to_string(e) + " is not a toehold edge");
  if (anchored(e, g.current())) throw RuleError("GU: " + to_string(e) + " is anchored");
  return g.with_current(swap_edges(g.current(), {e}, {}));
}

StrandGraph apply_g3(const StrandGraph& g, const Edge& e, const Edge& x) {
  if (!g.is_current(e)) throw RuleError("G3: " + to_string(e) + " is not current");
  require_new_admissible(g, x, "G3");
  Site shared;
  if (x.touches(e.first) && !x.touches(e.second)) {
    shared = e.first;
  } else if (x.touches(e.second) && !x.touches(e.first)) {
    shared = e.second;
  } else {
    throw RuleError("G3: " + to_string(x) + " and " + to_string(e) + " must share one site");
  }
  const Site incoming = x.other(shared);
  if (site_bound(g, incoming))
    throw RuleError("G3: site " + to_string(incoming) + " is occupied");
  std::vector<Edge> next = swap_edges(g.current(), {e}, {x});
  if (!anchored(x, next)) throw RuleError("G3: " + to_string(x) + " would not be anchored");
  return g.with_current(std::move(next));
}

StrandGraph apply_gm(const StrandGraph& g, const std::vector<Edge>& ring_current,
                     const std::vector<Edge>& ring_new) {
  const std::size_t n = ring_current.size();
  if (n < 2) throw RuleError("GM: a ring needs at least two edges");
  if (ring_new.size() != n) throw RuleError("GM: ring lists differ in length");
  if (std::set<Edge>(ring_current.begin(), ring_current.end()).size() != n)
    throw RuleError("GM: ring repeats an edge");
  for (const auto& e : ring_current)
    if (!g.is_current(e)) throw RuleError("GM: " + to_string(e) + " is not current");
  for (const auto& x : ring_new) require_new_admissible(g, x, "GM");

  // Orient e_i = {s_i, s'_i} so that s_i is the site x_i takes over.
  std::vector<Site> s(n), s_prime(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = ring_current[i];
    const Edge& x = ring_new[i];
    if (x.touches(e.first) == x.touches(e.second))
      throw RuleError("GM: ring is not closed at " + to_string(x));
    s[i] = x.touches(e.first) ? e.first : e.second;
    s_prime[i] = e.other(s[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    if (ring_new[i].other(s[i]) != s_prime[prev])
      throw RuleError("GM: ring is not closed at " + to_string(ring_new[i]));
  }

  std::vector<Edge> next = swap_edges(g.current(), ring_current, ring_new);
  for (const auto& x : ring_new)
    if (!anchored(x, next)) throw RuleError("GM: " + to_string(x) + " would not be anchored");
  return g.with_current(std::move(next));
}

StrandGraph apply(const StrandGraph& g, const Move& m, const EdgeHiddenTest& hidden) {
  auto need = [&](std::size_t removed, std::size_t added) {
    if (m.removed.size() != removed || m.added.size() != added)
      throw RuleError(to_string(m.rule) + ": wrong number of edges in move");
  };
  switch (m.rule) {
    case GraphRule::kGB:
      need(0, 1);
      return apply_gb(g, m.added[0], hidden);
    case GraphRule::kGU:
      need(1, 0);
      return apply_gu(g, m.removed[0]);
    case GraphRule::kG3:
      need(1, 1);
      return apply_g3(g, m.removed[0], m.added[0]);
    case GraphRule::kGM:
      return apply_gm(g, m.removed, m.added);
  }
  throw RuleError("unknown rule");
}

// ---------------------------------------------------------------------------
// Move enumeration
// ---------------------------------------------------------------------------

std::vector<Move> enumerate_moves(const StrandGraph& g, const MoveOptions& options) {
  const auto& current = g.current();
  std::map<Site, std::size_t> bound;  // site -> index into current
  for (std::size_t i = 0; i < current.size(); ++i) {
    bound[current[i].first] = i;
    bound[current[i].second] = i;
  }
  auto is_free = [&](const Site& s) { return bound.count(s) == 0; };

  std::vector<Move> moves;

  for (const auto& x : g.admissible()) {
    if (g.is_current(x) || !is_free(x.first) || !is_free(x.second)) continue;
    if (options.hidden(g, x)) continue;
    moves.push_back({GraphRule::kGB, {}, {x}});
  }

  for (const auto& e : current) {
    if (g.toehold(e) && !anchored(e, current)) moves.push_back({GraphRule::kGU, {e}, {}});
  }

  for (const auto& x : g.admissible()) {
    if (g.is_current(x)) continue;
    for (const Site& shared : {x.first, x.second}) {
      const Site incoming = x.other(shared);
      auto it = bound.find(shared);
      if (it == bound.end() || !is_free(incoming)) continue;
      const Edge& e = current[it->second];
      if (anchored(x, swap_edges(current, {e}, {x}))) moves.push_back({GraphRule::kG3, {e}, {x}});
    }
  }

  // GM rings: e_1 is the smallest current edge of the ring, so rotations are
  // not revisited; reflections give the same edge sets and are deduplicated.
  std::vector<Move> rings;
  std::vector<bool> used(current.size(), false);
  std::vector<Edge> ring_e;
  std::vector<Edge> ring_x;
  std::vector<Site> ring_s;

  std::function<void(std::size_t, const Site&)> extend = [&](std::size_t start, const Site& tail) {
    // tail is s'_k of the last ring edge.
    const std::size_t k = ring_e.size();
    if (k >= 2) {
      const Edge close(tail, ring_s.front());
      if (g.is_admissible(close) && !g.is_current(close)) {
        Move m{GraphRule::kGM, ring_e, {}};
        m.added.push_back(close);
        m.added.insert(m.added.end(), ring_x.begin(), ring_x.end());
        std::vector<Edge> next = swap_edges(current, m.removed, m.added);
        const bool ok = std::all_of(m.added.begin(), m.added.end(),
                                    [&](const Edge& x) { return anchored(x, next); });
        if (ok && std::find(rings.begin(), rings.end(), m) == rings.end()) rings.push_back(m);
      }
    }
    if (k >= options.max_ring) return;
    for (const auto& x : g.admissible_at(tail)) {
      if (g.is_current(x)) continue;
      const Site head = x.other(tail);
      auto it = bound.find(head);
      if (it == bound.end() || it->second <= start || used[it->second]) continue;
      const std::size_t idx = it->second;
      used[idx] = true;
      ring_e.push_back(current[idx]);
      ring_x.push_back(x);
      ring_s.push_back(head);
      extend(start, current[idx].other(head));
      ring_s.pop_back();
      ring_x.pop_back();
      ring_e.pop_back();
      used[idx] = false;
    }
  };

  if (options.max_ring >= 2) {
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (const Site& s1 : {current[i].first, current[i].second}) {
        used[i] = true;
        ring_e = {current[i]};
        ring_s = {s1};
        ring_x.clear();
        extend(i, current[i].other(s1));
        used[i] = false;
      }
    }
  }
  moves.insert(moves.end(), rings.begin(), rings.end());
  return moves;
}

std::optional<Move> find_move(const StrandGraph& before, const StrandGraph& after,
                              const MoveOptions& options) {
  for (const auto& m : enumerate_moves(before, options)) {
    if (apply(before, m, options.hidden).current() == after.current()) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Traces
// ---------------------------------------------------------------------------

StrandGraph replay(const StrandGraph& g, const Trace& trace, const EdgeHiddenTest& hidden) {
  if (g.current() != sorted(trace.initial))
    throw RuleError("replay: graph does not start at the trace's initial edges");
  StrandGraph state = g;
  for (const auto& m : trace.moves) state = apply(state, m, hidden);
  if (state.current() != sorted(trace.final_edges))
    throw RuleError("replay: trace does not end at its final edges");
  return state;
}

std::string format_trace(const Trace& trace) {
  std::string out;
  std::size_t size = trace.initial.size();
  for (std::size_t k = 0; k < trace.moves.size(); ++k) {
    const Move& m = trace.moves[k];
    size = size - m.removed.size() + m.added.size();
    out += "step " + std::to_string(k + 1) + ": " + to_string(m) + " |E|=" + std::to_string(size) +
           "\n";
  }
  return out;
}

}  // namespace dnaprover
