#include <gtest/gtest.h>

#include <random>

#include "dnaprover/error.hpp"
#include "dnaprover/fixtures.hpp"
#include "dnaprover/graph_io.hpp"
#include "dnaprover/strand_graph.hpp"
#include "oracle.hpp"

using namespace dnaprover;

namespace {

const Edge kE1({1, 2}, {2, 2});
const Edge kE2({3, 2}, {4, 2});
const Edge kX1({1, 2}, {3, 2});
const Edge kX2({2, 2}, {4, 2});

std::size_t count_rule(const std::vector<Move>& moves, GraphRule r) {
  std::size_t n = 0;
  for (const auto& m : moves) n += m.rule == r;
  return n;
}

/// Random single-stranded process over a few toehold and long domains.
Process random_process(std::mt19937_64& rng) {
  static const Domain kPool[] = {{"t", false, true}, {"t", true, true}, {"a", false, false},
                                 {"a", true, false}, {"b", false, false}, {"b", true, false}};
  std::uniform_int_distribution<int> strands(2, 4), len(1, 3), dom(0, 5);
  std::vector<Strand> out;
  const int n = strands(rng);
  for (int s = 0; s < n; ++s) {
    Strand strand;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) {
      const Domain& d = kPool[dom(rng)];
      strand.push_back({d.name, d.complemented, d.toehold, std::nullopt});
    }
    out.push_back(std::move(strand));
  }
  return Process(std::move(out));
}

}  // namespace

TEST(FromProcess, FourWayListing) {
  const StrandGraph g = from_process(fixtures::fourway());
  EXPECT_EQ(describe_graph(g),
            "V = {1, 2, 3, 4}\n"
            "length = {1 -> 3, 2 -> 3, 3 -> 3, 4 -> 3}\n"
            "colour = {1 -> 1, 2 -> 2, 3 -> 3, 4 -> 4}\n"
            "A = {{(1,1),(2,3)}, {(1,2),(2,2)}, {(1,2),(3,2)}, {(1,3),(3,1)}, {(2,1),(4,3)}, "
            "{(2,2),(4,2)}, {(3,2),(4,2)}, {(3,3),(4,1)}}\n"
            "toehold = {{(1,1),(2,3)} -> true, {(1,3),(3,1)} -> true, {(2,1),(4,3)} -> true, "
            "{(3,3),(4,1)} -> true, other -> false}\n"
            "E = {{(1,1),(2,3)}, {(1,2),(2,2)}, {(3,2),(4,2)}, {(3,3),(4,1)}}\n");
  EXPECT_EQ(g.admissible().size(), 8u);
  EXPECT_EQ(std::count(g.toehold_flags().begin(), g.toehold_flags().end(), true), 4);
  EXPECT_EQ(g.current().size(), 4u);
}

TEST(FromProcess, ColourFollowsStrandType) {
  const StrandGraph g = from_process(parse_process("<a b> | <b* a*> | <a b>"));
  EXPECT_EQ(g.vertices()[0].colour, 1u);
  EXPECT_EQ(g.vertices()[1].colour, 2u);
  EXPECT_EQ(g.vertices()[2].colour, 1u);
}

TEST(StrandGraphInvariants, Rejected) {
  const StrandGraph g = from_process(parse_process("<a^ b> | <b* a^*>"));
  auto vertices = g.vertices();
  auto adm = g.admissible();
  auto toe = g.toehold_flags();
  EXPECT_NO_THROW(StrandGraph(vertices, adm, toe, {}));
  EXPECT_THROW(StrandGraph(vertices, {adm[0]}, {toe[0]}, {}), WellFormednessError);
  auto flipped = toe;
  flipped[0] = !flipped[0];
  EXPECT_THROW(StrandGraph(vertices, adm, flipped, {}), WellFormednessError);
  EXPECT_THROW(StrandGraph(vertices, adm, toe, {Edge({1, 1}, {1, 2})}), WellFormednessError);
  auto bad_colour = vertices;
  bad_colour[1].colour = 1;
  EXPECT_THROW(StrandGraph(bad_colour, adm, toe, {}), WellFormednessError);
  const StrandGraph shared = from_process(parse_process("<a> | <a*> | <a*>"));
  EXPECT_THROW(shared.with_current({Edge({1, 1}, {2, 1}), Edge({1, 1}, {3, 1})}), WellFormednessError);
}

TEST(Adjacency, AntiparallelNeighbours) {
  const Edge e({1, 1}, {2, 3});
  EXPECT_EQ(edge_adjacent(e, {kE1, kE2}), (std::vector<Edge>{kE1}));
  EXPECT_TRUE(anchored(e, {e, kE1}));
  EXPECT_FALSE(anchored(e, {e, kE2}));
  EXPECT_FALSE(anchored(e, {e}));
}

TEST(Moves, FourWayInitialState) {
  const StrandGraph g = from_process(fixtures::fourway());
  const auto moves = enumerate_moves(g);
  EXPECT_EQ(count_rule(moves, GraphRule::kGB), 2u);
  EXPECT_EQ(count_rule(moves, GraphRule::kGU), 0u);
  EXPECT_EQ(count_rule(moves, GraphRule::kGM), 0u);
}

TEST(Moves, FourWayBindSwapRelease) {
  StrandGraph g = from_process(fixtures::fourway());
  g = apply_gb(g, Edge({1, 3}, {3, 1}));
  g = apply_gb(g, Edge({2, 1}, {4, 3}));
  const Move gm{GraphRule::kGM, {kE1, kE2}, {kX1, kX2}};
  const auto moves = enumerate_moves(g);
  ASSERT_NE(std::find(moves.begin(), moves.end(), gm), moves.end());
  const StrandGraph swapped = apply(g, gm);
  EXPECT_TRUE(swapped.is_current(kX1));
  EXPECT_TRUE(swapped.is_current(kX2));
  EXPECT_FALSE(swapped.is_current(kE1));

  const auto after = enumerate_moves(swapped);
  const Move gu{GraphRule::kGU, {Edge({1, 1}, {2, 3})}, {}};
  EXPECT_NE(std::find(after.begin(), after.end(), gu), after.end());

  // GM applied twice returns to the start.
  const Move back{GraphRule::kGM, {kX1, kX2}, {kE1, kE2}};
  EXPECT_EQ(apply(swapped, back), g);

  const ExploreReport rep = explore(from_process(fixtures::fourway()));
  const auto at = rep.find(swapped.current());
  ASSERT_TRUE(at);
  EXPECT_LE(rep.states[*at].depth, 3u);
}

TEST(Moves, PremisesEnforced) {
  const StrandGraph g = from_process(fixtures::fourway());
  EXPECT_THROW(apply_gb(g, kE1), RuleError);                      // already current
  EXPECT_THROW(apply_gb(g, kX1), RuleError);                      // sites taken
  EXPECT_THROW(apply_gu(g, Edge({1, 1}, {2, 3})), RuleError);     // anchored
  EXPECT_THROW(apply_gu(g, kE1), RuleError);                      // not a toehold
  EXPECT_THROW(apply_gm(g, {kE1, kE2}, {kX1, kX2}), RuleError);   // unanchored result
  EXPECT_THROW(apply_gm(g, {kE1}, {kX1}), RuleError);
  auto hidden = [](const StrandGraph&, const Edge&) { return true; };
  EXPECT_THROW(apply_gb(g, Edge({1, 3}, {3, 1}), hidden), RuleError);
}

TEST(Moves, BindThenUnbindIsIdentity) {
  const StrandGraph g = from_process(parse_process("<t^ a> | <t^* b>"));
  const Edge e({1, 1}, {2, 1});
  EXPECT_EQ(apply_gu(apply_gb(g, e), e), g);
}

TEST(Moves, HairpinScriptMatchesRuleFamilies) {
  Process p = fixtures::hairpin();
  const std::vector<GraphRule> expected{GraphRule::kGB, GraphRule::kG3, GraphRule::kGB, GraphRule::kG3,
                                        GraphRule::kGB};
  const auto script = fixtures::hairpin_script();
  ASSERT_EQ(script.size(), expected.size());
  for (std::size_t k = 0; k < script.size(); ++k) {
    const Process q = script[k].apply(p);
    const auto m = find_move(from_process(p), from_process(q));
    ASSERT_TRUE(m) << script[k].label;
    EXPECT_EQ(m->rule, expected[k]) << script[k].label;
    EXPECT_EQ(m->rule, script[k].graph_rule);
    p = q;
  }
}

TEST(Explore, TheoremReachesAllBound) {
  const StrandGraph g = from_process(fixtures::theorem());
  const ExploreReport rep = explore(g);
  EXPECT_EQ(rep.status, ExploreStatus::kComplete);
  ASSERT_EQ(rep.terminal.size(), 1u);
  const auto& t = rep.states[rep.terminal[0]];
  EXPECT_EQ(t.edges, g.admissible());
  EXPECT_EQ(t.depth, 5u);
  const Trace tr = rep.trace_to(rep.terminal[0]);
  ASSERT_EQ(tr.moves.size(), 5u);
  for (const auto& m : tr.moves) EXPECT_EQ(m.rule, GraphRule::kGB);
  EXPECT_EQ(replay(g, tr).current(), g.admissible());
  EXPECT_EQ(rep.states.size(), 32u);  // every subset of five independent edges
}

TEST(Explore, Limits) {
  const StrandGraph g = from_process(fixtures::theorem());
  ExploreOptions small;
  small.max_states = 3;
  EXPECT_EQ(explore(g, small).status, ExploreStatus::kStateLimit);
  ExploreOptions shallow;
  shallow.max_depth = 2;
  EXPECT_EQ(explore(g, shallow).status, ExploreStatus::kDepthLimit);
  ExploreOptions stop;
  stop.stop_when = [](const StrandGraph& s) { return s.current().size() == 2; };
  const auto rep = explore(g, stop);
  EXPECT_EQ(rep.status, ExploreStatus::kStopped);
  ASSERT_TRUE(rep.stopped_at);
  EXPECT_EQ(rep.states[*rep.stopped_at].edges.size(), 2u);
}

TEST(Trace, ReplayChecksEndpoints) {
  const StrandGraph g = from_process(fixtures::theorem());
  Trace t{{}, {Move{GraphRule::kGB, {}, {Edge({1, 2}, {3, 1})}}}, {Edge({1, 2}, {3, 1})}};
  EXPECT_NO_THROW(replay(g, t));
  EXPECT_EQ(format_trace(t), "step 1: GB removed={} added={{(1,2),(3,1)}} |E|=1\n");
  t.final_edges.clear();
  EXPECT_THROW(replay(g, t), RuleError);
}

// Every move of a random walk keeps E inside A, keeps edges site-disjoint,
// and changes |E| by the rule's delta.
TEST(Moves, PreserveInvariantsRandomized) {
  std::mt19937_64 rng(31337);
  std::vector<StrandGraph> starts;
  for (const auto& name : {"hairpin", "fourway", "theorem"})
    starts.push_back(from_process(*fixtures::process_named(name)));
  std::size_t moves_checked = 0;
  for (int walk = 0; walk < 300; ++walk) {
    StrandGraph g = walk % 2 == 0 ? starts[walk / 2 % starts.size()] : from_process(random_process(rng));
    for (int step = 0; step < 12; ++step) {
      const auto moves = enumerate_moves(g);
      if (moves.empty()) break;
      const Move m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
      const StrandGraph next = apply(g, m);
      ASSERT_TRUE(oracle::well_formed_edges(next)) << to_string(m);
      const long delta = static_cast<long>(next.current().size()) - static_cast<long>(g.current().size());
      switch (m.rule) {
        case GraphRule::kGB: ASSERT_EQ(delta, 1); break;
        case GraphRule::kGU: ASSERT_EQ(delta, -1); break;
        case GraphRule::kG3:
        case GraphRule::kGM: ASSERT_EQ(delta, 0); break;
      }
      ++moves_checked;
      g = next;
    }
  }
  EXPECT_GE(moves_checked, 1000u);
}
